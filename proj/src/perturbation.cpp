#include "cavrotor/perturbation.hpp"

#include <cmath>

#include "cavrotor/errors.hpp"

namespace cavrotor {

namespace {

// Per-dimer coupling: the sqrt(N) of constant-volume scaling cancels the
// 1/sqrt(N) of the interaction term.
double per_dimer_g(const ModelParams& p) {
    return p.effective_g() / std::sqrt(double(p.n_dimers));
}

double per_dimer_q(const ModelParams& p) {
    const DerivedScalars d = derived(p);
    return per_dimer_g(p) / std::sqrt(8.0 * (d.omega_r + d.omega_l));
}

double factorial_ratio_sqrt(int small, int large) {
    // sqrt(small! / large!)
    double acc = 1.0;
    for (int j = small + 1; j <= large; ++j) acc /= std::sqrt(double(j));
    return acc;
}

} // namespace

WeakPT weak_corrections(const ModelParams& params) {
    validate(params);
    const DerivedScalars d = derived(params);
    const double wr = d.omega_r, wl = d.omega_l, dp = d.delta_prime;
    const double g1 = per_dimer_g(params);
    const double n = double(params.n_dimers);

    WeakPT w;
    const double common = 2.0 * wr * wl + dp * (wr + wl);
    w.E2 = dp / 8.0 * common / ((wr + wl) * (wr + dp) * (wl + dp));
    w.E4_phase_coeff = -dp * dp / (64.0 * n * n) * common /
                       ((wr + wl) * (wr + dp) * (wr + dp) * (wl + dp) * (wl + dp));
    w.L = g1 * g1 * dp / 8.0 * common / ((wr + dp) * (wr + dp) * (wl + dp) * (wl + dp)) *
          (wr - wl) / (wr + wl);
    w.dL = g1 / std::sqrt(8.0 * (wr + wl)) *
           std::sqrt(wr * wr / ((dp + wr) * (dp + wr)) + wl * wl / ((dp + wl) * (dp + wl)));
    if (g1 > 0.3 * params.delta)
        w.warnings.push_back("weak-coupling expansion used outside g << delta");
    return w;
}

StrongPT strong_corrections(const ModelParams& params) {
    validate(params);
    const DerivedScalars d = derived(params);
    const double q = per_dimer_q(params);
    const double e4 = std::exp(-4.0 * q * q);

    StrongPT s;
    s.q = q;
    s.E0 = -0.5 * params.delta * e4;
    s.L1 = 4.0 * params.b_field * params.delta * q * q * e4;
    s.dL1 = std::sqrt(2.0 * (d.omega_r + d.omega_l) * params.delta) * q * std::exp(-2.0 * q * q);
    s.LN = 4.0 * params.b_field * params.delta * q * q *
           std::exp(-4.0 * q * q / double(params.n_dimers));
    if (per_dimer_g(params) < 3.0 * std::abs(params.b_field))
        s.warnings.push_back("strong-coupling expansion used outside g >> B");
    if (q < 0.5) s.warnings.push_back("displacement parameter q < 1/2");
    return s;
}

double resonant_omega_l_at_q(double delta, double q, int n_dimers) {
    switch (n_dimers) {
        case 1: return 2.0 * q * q * delta * std::exp(-4.0 * q * q);
        case 2: return delta * std::exp(-2.0 * q * q);
        default: throw Unsupported("resonance condition is known for N = 1 and N = 2 only");
    }
}

double intermediate_resonance(const ModelParams& params) {
    validate(params);
    if (params.n_dimers != 1 && params.n_dimers != 2)
        throw Unsupported("resonance condition is known for N = 1 and N = 2 only");
    const double g1 = per_dimer_g(params);

    auto f = [&](double wl) {
        const double wr = 1.0 / wl;
        const double q = g1 / std::sqrt(8.0 * (wr + wl));
        return wl - resonant_omega_l_at_q(params.delta, q, params.n_dimers);
    };

    double lo = 1e-9, hi = 1.0;
    if (!(f(lo) < 0.0 && f(hi) > 0.0))
        throw Unsupported("no intermediate resonance for these parameters");
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double intermediate_L(double q) {
    return 2.0 * q * q / (1.0 + std::sqrt(1.0 + 4.0 * q * q));
}

Complex displaced_overlap(int j_to, int j_from, Complex gamma) {
    const double x = std::norm(gamma);
    const double damp = std::exp(-0.5 * x);
    if (j_to >= j_from) {
        const int diff = j_to - j_from;
        return factorial_ratio_sqrt(j_from, j_to) * std::pow(gamma, diff) * damp *
               std::assoc_laguerre(unsigned(j_from), unsigned(diff), x);
    }
    const int diff = j_from - j_to;
    return factorial_ratio_sqrt(j_to, j_from) * std::pow(-std::conj(gamma), diff) * damp *
           std::assoc_laguerre(unsigned(j_to), unsigned(diff), x);
}

IntermediateBlock intermediate_L_multilevel(const ModelParams& params, int n) {
    validate(params);
    if (params.n_dimers != 1) throw Unsupported("multilevel block is a single-dimer construction");
    if (n < 2) throw DomainError("n", "need at least the ground doublet and one excitation");
    if (n > 16) throw DomainError("n", "configured maximum is 16 excitations");

    const DerivedScalars d = derived(params);
    const double q = per_dimer_q(params);
    const Complex gamma{0.0, -2.0 * q};
    const double r_overlap = std::exp(-2.0 * q * q);

    // basis: (up, j) -> j, (down, j) -> n + j
    IntermediateBlock blk;
    blk.matrix = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
    for (int j = 0; j < n; ++j) {
        blk.matrix(j, j) = d.omega_l * j;
        blk.matrix(n + j, n + j) = d.omega_l * j;
    }
    for (int jt = 0; jt < n; ++jt) {
        for (int jf = 0; jf < n; ++jf) {
            const Complex v = -0.5 * params.delta * r_overlap * displaced_overlap(jt, jf, gamma);
            blk.matrix(jt, n + jf) += v;
            blk.matrix(n + jf, jt) += std::conj(v);
        }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(blk.matrix);
    blk.ground_energy = es.eigenvalues()(0);
    Eigen::VectorXcd v = es.eigenvectors().col(0);
    blk.c_up = v.head(n);
    blk.c_down = v.tail(n);

    // L = <r^dag r - l^dag l> in the displaced basis. The r-mode contributes
    // q^2; the l-mode carries the excitations plus the displacement cross term.
    double occ = 0.0;
    Complex lexp_up{0.0, 0.0}, lexp_down{0.0, 0.0};
    for (int j = 0; j < n; ++j) {
        occ += j * (std::norm(blk.c_up(j)) + std::norm(blk.c_down(j)));
        if (j + 1 < n) {
            const double amp = std::sqrt(double(j + 1));
            lexp_up += amp * std::conj(blk.c_up(j)) * blk.c_up(j + 1);
            lexp_down += amp * std::conj(blk.c_down(j)) * blk.c_down(j + 1);
        }
    }
    blk.L = -occ - 2.0 * q * lexp_up.imag() + 2.0 * q * lexp_down.imag();
    return blk;
}

} // namespace cavrotor
