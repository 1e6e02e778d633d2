#ifndef CAVROTOR_PERTURBATION_HPP
#define CAVROTOR_PERTURBATION_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cavrotor/model.hpp"

namespace cavrotor {

/// Weak-coupling (g << Delta) closed forms; Delta' = Delta + 1/(2J).
struct WeakPT {
    double E2 = 0.0;             // g^2 energy coefficient
    double E4_phase_coeff = 0.0; // multiplies sum_{i!=j} cos^2(phi_i - phi_j), <= 0
    double L = 0.0;
    double dL = 0.0;
    std::vector<std::string> warnings;
};

/// Strong-coupling (g >> Delta, g >> B) displaced-oscillator results.
struct StrongPT {
    double q = 0.0;
    double E0 = 0.0; // -(Delta/2) e^{-4 q^2}, single dimer
    double L1 = 0.0;
    double dL1 = 0.0;
    double LN = 0.0;
    std::vector<std::string> warnings;
};

struct IntermediateBlock {
    Eigen::MatrixXcd matrix; // 2n x 2n, rows/cols ordered (up,j), (down,j)
    double ground_energy = 0.0;
    Eigen::VectorXcd c_up;
    Eigen::VectorXcd c_down;
    double L = 0.0;
};

WeakPT weak_corrections(const ModelParams& params);
StrongPT strong_corrections(const ModelParams& params);

/// Resonant l-mode frequency at a given displacement parameter:
/// 2 q^2 Delta e^{-4q^2} for one dimer, Delta e^{-2q^2} for two.
double resonant_omega_l_at_q(double delta, double q, int n_dimers);

/// Self-consistent resonant omega_l for the given (Delta, g): q itself
/// depends on B through omega_r + omega_l, with omega_r = 1/omega_l.
double intermediate_resonance(const ModelParams& params);

/// Two-level estimate of the resonant angular momentum, Eq.-level closed form.
double intermediate_L(double q);

/// Displaced-oscillator overlap <j'| D(gamma) |j>.
Complex displaced_overlap(int j_to, int j_from, Complex gamma);

/// Block diagonalization mixing the lowest n l-mode excitations with the
/// ground doublet (single dimer). L is evaluated as <r^dag r - l^dag l>
/// directly in the displaced basis.
IntermediateBlock intermediate_L_multilevel(const ModelParams& params, int n);

} // namespace cavrotor

#endif
