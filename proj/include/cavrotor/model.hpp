#ifndef CAVROTOR_MODEL_HPP
#define CAVROTOR_MODEL_HPP

#include <cmath>
#include <complex>
#include <limits>

#include "cavrotor/errors.hpp"

namespace cavrotor {

using Complex = std::complex<double>;

enum class CouplingScaling { constant_density, constant_volume };

/// Physical parameters of the dimer-cavity model. All energies are
/// dimensionless, in units of the cavity frequency. inertia may be
/// +infinity, which denotes the frozen-rotor (Born-Oppenheimer) limit.
struct ModelParams {
    double delta = 1.0;
    double g = 0.0;
    double b_field = 0.0;
    double inertia = std::numeric_limits<double>::infinity();
    int n_dimers = 1;
    CouplingScaling scaling = CouplingScaling::constant_density;

    bool frozen_rotors() const { return std::isinf(inertia); }

    /// Coupling entering the Hamiltonian terms. Under constant mode volume
    /// the 1/sqrt(N) of the interaction term cancels, which is realized here
    /// by scaling g up by sqrt(N).
    double effective_g() const {
        return scaling == CouplingScaling::constant_volume ? g * std::sqrt(double(n_dimers)) : g;
    }

    /// Rotor kinetic energy of a momentum-k state, zero for frozen rotors.
    double rotor_kinetic(long long k) const {
        if (frozen_rotors()) return 0.0;
        return double(k) * double(k) / (2.0 * inertia);
    }
};

struct DerivedScalars {
    double omega_r;     // sqrt(1+B^2) + B
    double omega_l;     // sqrt(1+B^2) - B
    double delta_prime; // delta + 1/(2J)
    double q;           // g / sqrt(8 (omega_r + omega_l))
};

inline ModelParams validate(const ModelParams& p) {
    if (!(p.delta > 0.0)) throw DomainError("delta", "must be > 0");
    if (!(p.g >= 0.0)) throw DomainError("g", "must be >= 0");
    if (std::isnan(p.b_field)) throw DomainError("b_field", "must be a real number");
    if (!(p.inertia > 0.0)) throw DomainError("inertia", "must be > 0 (or infinite)");
    if (p.n_dimers < 1) throw DomainError("n_dimers", "must be >= 1");
    return p;
}

inline DerivedScalars derived(const ModelParams& p) {
    const double s = std::sqrt(1.0 + p.b_field * p.b_field);
    DerivedScalars d;
    d.omega_r = s + p.b_field;
    d.omega_l = s - p.b_field;
    d.delta_prime = p.frozen_rotors() ? p.delta : p.delta + 1.0 / (2.0 * p.inertia);
    d.q = p.g / std::sqrt(8.0 * (d.omega_r + d.omega_l));
    return d;
}

} // namespace cavrotor

#endif
