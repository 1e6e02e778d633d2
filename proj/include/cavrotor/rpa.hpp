#ifndef CAVROTOR_RPA_HPP
#define CAVROTOR_RPA_HPP

#include <array>
#include <vector>

#include "cavrotor/model.hpp"

namespace cavrotor {

enum class RpaMethod { polynomial, contour_integral, closed_form_B0 };

struct RpaResult {
    std::array<double, 4> polariton_freqs{};
    double deltaE = 0.0;
    Complex Z_in{0.0, 0.0};
    RpaMethod method = RpaMethod::polynomial;
};

/// Coefficients (ascending powers, c[4] = 1) of the quartic whose roots are
/// the squared polariton frequencies:
///   P(x) = (x - d^2)^2 (x - wr^2)(x - wl^2)
///        - (g^2/2) d x (x - d^2)(x - 1)
///        + (g^4/16)(1 - |Z|^2) d^2 x^2
std::array<double, 5> rpa_polynomial(const ModelParams& params, Complex Z);

/// Sorted nonnegative square roots of the quartic's zeros. Throws ComplexRoots
/// when a root acquires an imaginary part (or goes genuinely negative),
/// signalling that the harmonic expansion left its stability region.
std::array<double, 4> polariton_frequencies(const ModelParams& params, Complex Z);

/// deltaE = (1/2) sum omega_pol - (1/2)(omega_r + omega_l) - Delta.
/// The contour route evaluates the same quantity as a log-det integral over
/// imaginary frequency and must agree with the root sum to quadrature accuracy.
RpaResult rpa_energy(const ModelParams& params, Complex Z,
                     RpaMethod method = RpaMethod::polynomial);

/// B = 0 closed form:
/// ((d+1)/2) [ sqrt(1 + g^2 d (1+Z)/(4(d+1)^2)) + sqrt(1 + g^2 d (1-Z)/(4(d+1)^2)) - 2 ]
double rpa_energy_B0_closed(const ModelParams& params, double Z);

/// Orientation-dependent g^4 energy for a concrete set of dimer angles:
/// coefficient * sum_{i != j} cos^2(phi_i - phi_j), coefficient <= 0.
double rpa_angle_correction(const ModelParams& params, const std::vector<double>& angles);

/// The shared g^4 coefficient (per cos^2 pair term) at J = infinity; equal to
/// the quartic phase coefficient of the weak-coupling expansion with
/// Delta' = Delta.
double rpa_angle_coefficient(const ModelParams& params);

} // namespace cavrotor

#endif
