#include "cavrotor/bo.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include <Eigen/Dense>

#include "cavrotor/errors.hpp"
#include "cavrotor/hamiltonian.hpp"
#include "cavrotor/perturbation.hpp"
#include "cavrotor/rpa.hpp"

namespace cavrotor {

namespace {

double dicke_ground_energy(const ModelParams& params, const std::vector<double>& angles,
                           int n_max) {
    Eigen::MatrixXcd h = dicke_fixed_angles(params, angles, n_max);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

} // namespace

PotentialSurface potential_surface(const ModelParams& params, SurfaceSource source, int n_points,
                                   int n_max, int workers) {
    validate(params);
    if (params.n_dimers != 2)
        throw Unsupported("the relative-angle surface is a two-dimer construction");
    if (n_points < 8) throw DomainError("n_points", "grid too small");
    if (workers < 1) workers = 1;

    PotentialSurface surf;
    surf.source = source;
    surf.period = M_PI;
    surf.theta.resize(std::size_t(n_points) + 1);
    surf.energy.resize(std::size_t(n_points) + 1);
    for (int i = 0; i <= n_points; ++i)
        surf.theta[std::size_t(i)] = surf.period * double(i) / double(n_points);

    auto eval = [&](double theta) {
        switch (source) {
            case SurfaceSource::exact_dicke:
                return dicke_ground_energy(params, {0.0, theta}, n_max);
            case SurfaceSource::rpa_angle:
                return rpa_angle_correction(params, {0.0, theta});
            case SurfaceSource::weak_pt: {
                // E4_phase_coeff is the coefficient of g^4 sum_{i!=j} cos^2
                const double c = std::cos(theta);
                const double g4 = std::pow(params.g, 4);
                return weak_corrections(params).E4_phase_coeff * g4 * 2.0 * c * c;
            }
        }
        throw Unsupported("unknown surface source");
    };

    if (source == SurfaceSource::exact_dicke && workers > 1) {
        std::atomic<int> next{0};
        auto run = [&] {
            for (int i = next.fetch_add(1); i < n_points; i = next.fetch_add(1))
                surf.energy[std::size_t(i)] = eval(surf.theta[std::size_t(i)]);
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(run);
        for (auto& t : pool) t.join();
    } else {
        for (int i = 0; i < n_points; ++i) surf.energy[std::size_t(i)] = eval(surf.theta[std::size_t(i)]);
    }
    surf.energy.back() = surf.energy.front(); // exact periodic closure
    return surf;
}

MathieuGround mathieu_ground(const PotentialSurface& surface, double inertia_eff) {
    if (!(inertia_eff > 0.0)) throw DomainError("inertia_eff", "must be > 0");
    const int m = int(surface.theta.size()) - 1; // grid points per period
    if (m < 8 || surface.energy.size() != surface.theta.size())
        throw DomainError("surface", "malformed grid");
    const double period = surface.period;

    // Fourier coefficients of V from the periodic samples (endpoint dropped).
    auto v_hat = [&](int f) {
        Complex acc{0.0, 0.0};
        for (int j = 0; j < m; ++j)
            acc += surface.energy[std::size_t(j)] *
                   std::exp(Complex(0.0, -2.0 * M_PI * f * j / double(m)));
        return acc / double(m);
    };

    auto solve = [&](int M, Eigen::VectorXcd* vec) {
        const int dim = 2 * M + 1;
        Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
        std::vector<Complex> vh(std::size_t(2 * dim), Complex{0.0, 0.0});
        for (int f = -2 * M; f <= 2 * M; ++f) vh[std::size_t(f + 2 * M)] = v_hat(f);
        for (int a = -M; a <= M; ++a) {
            const double ga = 2.0 * M_PI * a / period;
            h(a + M, a + M) += ga * ga / (2.0 * inertia_eff);
            for (int b = -M; b <= M; ++b) h(a + M, b + M) += vh[std::size_t(a - b + 2 * M)];
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
        if (vec) *vec = es.eigenvectors().col(0);
        return es.eigenvalues()(0);
    };

    int M = 16;
    double e_prev = solve(M, nullptr);
    Eigen::VectorXcd coef;
    bool ok = false;
    while (2 * M <= 1024 && 4 * M <= m) {
        M *= 2;
        const double e = solve(M, &coef);
        if (std::abs(e - e_prev) <= 1e-8) {
            e_prev = e;
            ok = true;
            break;
        }
        e_prev = e;
    }
    if (!ok) throw GridTooCoarse("plane-wave basis did not converge within the grid resolution");

    MathieuGround out;
    out.energy = e_prev;
    out.theta = surface.theta;
    out.psi.resize(surface.theta.size());

    // fix the global phase so that the wavefunction is real and nonnegative
    Complex mean{0.0, 0.0};
    for (int a = -M; a <= M; ++a) mean += coef(a + M) * (a == 0 ? 1.0 : 0.0);
    Complex phase = mean == Complex(0.0) ? Complex(1.0, 0.0) : std::conj(mean) / std::abs(mean);
    double norm2 = 0.0;
    for (std::size_t j = 0; j < surface.theta.size(); ++j) {
        Complex psi{0.0, 0.0};
        for (int a = -M; a <= M; ++a)
            psi += coef(a + M) * std::exp(Complex(0.0, 2.0 * M_PI * a * surface.theta[j] / period));
        out.psi[j] = (phase * psi).real() / std::sqrt(period);
    }
    if (out.psi[0] < 0.0)
        for (double& p : out.psi) p = -p;

    const double h_step = period / double(m);
    for (int j = 0; j < m; ++j) norm2 += out.psi[std::size_t(j)] * out.psi[std::size_t(j)] * h_step;
    out.norm_check = norm2;

    Complex z{0.0, 0.0};
    for (int j = 0; j < m; ++j)
        z += out.psi[std::size_t(j)] * out.psi[std::size_t(j)] * h_step *
             std::exp(Complex(0.0, 2.0 * surface.theta[std::size_t(j)]));
    z /= norm2;
    const double az = std::abs(z);
    // below numerical noise the angle is fully delocalized
    out.angle_dispersion = az < 1e-12 ? std::numeric_limits<double>::infinity()
                                       : 0.5 * std::sqrt(-2.0 * std::log(az));
    return out;
}

double bo_deltaL_limit(const ModelParams& params, int n_max) {
    validate(params);
    if (params.n_dimers != 1) throw Unsupported("the plateau is a single-dimer quantity");

    Eigen::MatrixXcd h = dicke_fixed_angles(params, {0.0}, n_max);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    const Eigen::VectorXcd& v = es.eigenvectors().col(0);

    // basis layout of dicke_fixed_angles: ((n_r * (n_max+1)) + n_l) * 2 + spin
    const int nph = n_max + 1;
    double m1 = 0.0, m2 = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const int photon = int(i / 2);
        const int nr = photon / nph;
        const int nl = photon % nph;
        const double l = double(nr - nl);
        const double w = std::norm(v(i));
        m1 += w * l;
        m2 += w * l * l;
    }
    double var = m2 - m1 * m1;
    if (var < 0.0) var = 0.0;
    return std::sqrt(var);
}

} // namespace cavrotor
