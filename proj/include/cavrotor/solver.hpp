#ifndef CAVROTOR_SOLVER_HPP
#define CAVROTOR_SOLVER_HPP

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cavrotor/hamiltonian.hpp"

namespace cavrotor {

struct GroundStateResult {
    double energy = 0.0;
    Eigen::VectorXcd state;
    int sector = 0;
    bool converged = false;
    double residual = 0.0;
    bool near_degenerate = false; // gap to the next level < 1e-8
};

struct SolverOptions {
    double tol = 1e-9;
    int max_basis = 360;       // Krylov basis cap before a thick restart
    int max_restarts = 80;
    Eigen::Index dense_threshold = 1100;
};

/// Lowest eigenpairs of a Hermitian sparse matrix. Dense solve below
/// dense_threshold; block Lanczos with full reorthogonalization and a
/// deterministic start (normalized all-ones vector) above it.
std::vector<std::pair<double, Eigen::VectorXcd>>
lowest_eigenpairs(const SparseMatrixC& h, int count, const SolverOptions& opts = {});

GroundStateResult ground_state(const HamiltonianBundle& h, double tol = 1e-9);

std::vector<std::pair<double, Eigen::VectorXcd>>
low_spectrum(const HamiltonianBundle& h, int count, double tol = 1e-9);

struct SectorScanResult {
    int best_sector = 0;
    std::vector<std::pair<int, double>> energies;
};

/// Ground energy in every sector of sector_scan_range. Sectors degenerate
/// with the minimum within 1e-9 are resolved toward the smallest |sector|
/// (the frozen-rotor limit is exactly degenerate across sectors).
SectorScanResult ground_sector_scan(const ModelParams& params, const TruncationSpec& trunc,
                                    double tol = 1e-9);

/// Truncation robustness check: recompute the ground state with cutoffs
/// grown by two and compare energies. Passes when the change is below
/// 1e-8 absolute or 1e-4 relative, whichever is looser.
bool ground_energy_converged(const ModelParams& params, const TruncationSpec& trunc,
                             double tol = 1e-9, double* change = nullptr);

} // namespace cavrotor

#endif
