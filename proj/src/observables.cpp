#include "cavrotor/observables.hpp"

#include <cmath>

namespace cavrotor {

namespace {

void check(const Eigen::VectorXcd& state, const BasisCatalog& basis) {
    if (std::size_t(state.size()) != basis.dimension())
        throw BasisMismatch("state length does not match basis dimension");
}

} // namespace

double optical_L(const Eigen::VectorXcd& state, const BasisCatalog& basis) {
    check(state, basis);
    double acc = 0.0;
    for (std::size_t i = 0; i < basis.dimension(); ++i) {
        const BasisState& s = basis.state(i);
        acc += std::norm(state(Eigen::Index(i))) * double(s.n_r - s.n_l);
    }
    return acc;
}

double optical_dL(const Eigen::VectorXcd& state, const BasisCatalog& basis) {
    check(state, basis);
    double m1 = 0.0, m2 = 0.0;
    for (std::size_t i = 0; i < basis.dimension(); ++i) {
        const BasisState& s = basis.state(i);
        const double l = double(s.n_r - s.n_l);
        const double w = std::norm(state(Eigen::Index(i)));
        m1 += w * l;
        m2 += w * l * l;
    }
    double var = m2 - m1 * m1;
    if (var < 0.0) {
        if (var < -1e-12) throw BasisMismatch("negative variance beyond roundoff");
        var = 0.0;
    }
    return std::sqrt(var);
}

double mechanical_L(const Eigen::VectorXcd& state, const BasisCatalog& basis) {
    check(state, basis);
    double acc = 0.0;
    for (std::size_t i = 0; i < basis.dimension(); ++i) {
        long long sum = 0;
        for (int ki : basis.state(i).k) sum += ki;
        acc += std::norm(state(Eigen::Index(i))) * double(sum);
    }
    return acc;
}

Complex alignment_Z(const std::vector<double>& angles) {
    Complex z{0.0, 0.0};
    for (double phi : angles) z += std::exp(Complex(0.0, 2.0 * phi));
    return z / double(angles.size());
}

ObservableSet compute_observables(const Eigen::VectorXcd& state, const BasisCatalog& basis) {
    check(state, basis);
    ObservableSet obs;
    obs.L_opt = optical_L(state, basis);
    obs.dL_opt = optical_dL(state, basis);
    obs.L_mech = mechanical_L(state, basis);
    for (std::size_t i = 0; i < basis.dimension(); ++i) {
        const BasisState& s = basis.state(i);
        const double w = std::norm(state(Eigen::Index(i)));
        obs.n_r += w * s.n_r;
        obs.n_l += w * s.n_l;
    }
    // <e^{2 i phi_j}> transfers amplitude across a two-step rotor shift
    Complex z{0.0, 0.0};
    const int n = basis.n_dimers();
    for (std::size_t i = 0; i < basis.dimension(); ++i) {
        for (int j = 0; j < n; ++j) {
            BasisState t = basis.state(i);
            t.k[std::size_t(j)] += 2;
            if (auto row = basis.find(t))
                z += std::conj(state(Eigen::Index(*row))) * state(Eigen::Index(i));
        }
    }
    obs.Z = z / double(n);
    return obs;
}

} // namespace cavrotor
