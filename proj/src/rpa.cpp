#include "cavrotor/rpa.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "cavrotor/errors.hpp"

namespace cavrotor {

namespace {

// multiply accumulated polynomial by (x - root)
void mul_linear(std::vector<double>& poly, double root) {
    std::vector<double> out(poly.size() + 1, 0.0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
        out[i + 1] += poly[i];
        out[i] -= root * poly[i];
    }
    poly = std::move(out);
}

} // namespace

std::array<double, 5> rpa_polynomial(const ModelParams& params, Complex Z) {
    validate(params);
    const double z2 = std::norm(Z);
    if (z2 > 1.0 + 1e-12) throw DomainError("Z", "|Z| must be <= 1");
    const DerivedScalars d = derived(params);
    const double delta = params.delta, g = params.g;

    std::vector<double> p{1.0};
    mul_linear(p, delta * delta);
    mul_linear(p, delta * delta);
    mul_linear(p, d.omega_r * d.omega_r);
    mul_linear(p, d.omega_l * d.omega_l);

    // -(g^2/2) d x (x - d^2)(x - 1) = -(g^2 d/2)(x^3 - (1 + d^2) x^2 + d^2 x)
    const double c2 = 0.5 * g * g * delta;
    p[3] -= c2;
    p[2] += c2 * (1.0 + delta * delta);
    p[1] -= c2 * delta * delta;

    p[2] += g * g * g * g / 16.0 * (1.0 - z2) * delta * delta;

    return {p[0], p[1], p[2], p[3], p[4]};
}

std::array<double, 4> polariton_frequencies(const ModelParams& params, Complex Z) {
    const std::array<double, 5> c = rpa_polynomial(params, Z);

    Eigen::Matrix4d comp = Eigen::Matrix4d::Zero();
    for (int i = 0; i < 3; ++i) comp(i + 1, i) = 1.0;
    for (int i = 0; i < 4; ++i) comp(i, 3) = -c[std::size_t(i)];
    Eigen::EigenSolver<Eigen::Matrix4d> es(comp);

    // Double roots (the g -> 0 limit has one at delta^2) pick up eigenvalue
    // jitter of order sqrt(machine eps) in the imaginary part; accept a root
    // as real when its real part actually annihilates the polynomial.
    auto poly_at = [&](double x) {
        double acc = 1.0;
        for (int i = 3; i >= 0; --i) acc = acc * x + c[std::size_t(i)];
        return acc;
    };
    auto poly_scale = [&](double x) {
        double acc = std::pow(std::abs(x), 4);
        for (int i = 3; i >= 0; --i) acc += std::abs(c[std::size_t(i)]) * std::pow(std::abs(x), i);
        return std::max(acc, 1.0);
    };

    std::array<double, 4> freqs{};
    for (int i = 0; i < 4; ++i) {
        const Complex root = es.eigenvalues()(i);
        const bool near_real =
            std::abs(root.imag()) <= 1e-8 * std::max(1.0, std::abs(root)) ||
            std::abs(poly_at(root.real())) <= 1e-10 * poly_scale(root.real());
        if (!near_real) throw ComplexRoots("polariton polynomial has a complex zero");
        double x = root.real();
        if (x < -1e-10) throw ComplexRoots("polariton polynomial has a negative zero");
        if (x < 0.0) x = 0.0;
        freqs[std::size_t(i)] = std::sqrt(x);
    }
    std::sort(freqs.begin(), freqs.end());
    return freqs;
}

RpaResult rpa_energy(const ModelParams& params, Complex Z, RpaMethod method) {
    const DerivedScalars d = derived(params);
    RpaResult res;
    res.Z_in = Z;
    res.method = method;
    res.polariton_freqs = polariton_frequencies(params, Z);

    if (method == RpaMethod::closed_form_B0) {
        res.deltaE = rpa_energy_B0_closed(params, std::abs(Z));
        return res;
    }

    if (method == RpaMethod::polynomial) {
        double sum = 0.0;
        for (double w : res.polariton_freqs) sum += w;
        res.deltaE = 0.5 * sum - 0.5 * (d.omega_r + d.omega_l) - params.delta;
        return res;
    }

    // contour route: deltaE = (1/2pi) int_0^inf dw ln det A(-w^2), where
    // det A = 1 - a*s + a^2 * pr * (1 - |Z|^2),
    //   a  = -g^2 d / (4 (x - d^2))
    //   s  = -2 x (x - wr wl) / ((x - wr^2)(x - wl^2))
    //   pr = x^2 / ((x - wr^2)(x - wl^2))
    // evaluated at x = -w^2. On the imaginary axis everything is real and the
    // determinant is the ratio P(x) / [(x - d^2)^2 (x - wr^2)(x - wl^2)].
    const double delta = params.delta, g = params.g;
    const double wr2 = d.omega_r * d.omega_r, wl2 = d.omega_l * d.omega_l;
    const double z2 = std::norm(Z);
    auto log_det = [&](double w) {
        if (w > 1e6) return 0.5 * g * g * delta / (w * w); // large-frequency tail
        const double x = -w * w;
        const double a = -g * g * delta / (4.0 * (x - delta * delta));
        const double ph = (x - wr2) * (x - wl2);
        const double s = -2.0 * x * (x - d.omega_r * d.omega_l) / ph;
        const double pr = x * x / ph;
        return std::log(1.0 - a * s + a * a * pr * (1.0 - z2));
    };
    auto integrand = [&](double theta) {
        const double t = std::tan(theta);
        const double sec2 = 1.0 + t * t;
        return log_det(t) * sec2;
    };
    // the returned error estimate is very conservative here (actual agreement
    // with the root-sum route is ~1e-13); it only gates gross failures
    double error = 0.0;
    const double integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        integrand, 0.0, std::atan(1.0) * 2.0, 12, 1e-12, &error);
    if (!std::isfinite(integral) || error > 1e-6)
        throw QuadratureFailure("log-det frequency integral did not converge");
    res.deltaE = integral / (2.0 * M_PI);
    return res;
}

double rpa_energy_B0_closed(const ModelParams& params, double Z) {
    validate(params);
    if (params.b_field != 0.0) throw NonzeroB("closed form requires B = 0");
    if (Z < 0.0 || Z > 1.0 + 1e-12) throw DomainError("Z", "must lie in [0, 1]");
    const double delta = params.delta, g = params.g;
    const double denom = 4.0 * (delta + 1.0) * (delta + 1.0);
    return 0.5 * (delta + 1.0) *
           (std::sqrt(1.0 + g * g * delta * (1.0 + Z) / denom) +
            std::sqrt(1.0 + g * g * delta * (1.0 - Z) / denom) - 2.0);
}

double rpa_angle_coefficient(const ModelParams& params) {
    validate(params);
    const DerivedScalars d = derived(params);
    const double delta = params.delta, g = params.g;
    const double n = double(params.n_dimers);
    const double wr = d.omega_r, wl = d.omega_l;
    return -(g * g * g * g * delta * delta / (64.0 * n * n)) *
           (2.0 * wr * wl + delta * (wr + wl)) /
           ((wr + wl) * (wr + delta) * (wr + delta) * (wl + delta) * (wl + delta));
}

double rpa_angle_correction(const ModelParams& params, const std::vector<double>& angles) {
    if (angles.size() < 2) throw DomainError("angles", "need at least two dimers");
    if (int(angles.size()) != params.n_dimers)
        throw DomainError("angles", "angle count must match the dimer count");
    double pair_sum = 0.0;
    for (std::size_t i = 0; i < angles.size(); ++i)
        for (std::size_t j = 0; j < angles.size(); ++j) {
            if (i == j) continue;
            const double c = std::cos(angles[i] - angles[j]);
            pair_sum += c * c;
        }
    return rpa_angle_coefficient(params) * pair_sum;
}

} // namespace cavrotor
