#ifndef CAVROTOR_HAMILTONIAN_HPP
#define CAVROTOR_HAMILTONIAN_HPP

#include <memory>

#include <Eigen/Dense>

#include "cavrotor/hilbert.hpp"
#include "cavrotor/model.hpp"

namespace cavrotor {

enum class Representation { dipole_gauge, circular, corotating };

struct HamiltonianBundle {
    SparseMatrixC matrix;
    Representation representation;
    ModelParams params;
    std::shared_ptr<const BasisCatalog> basis;

    std::size_t dimension() const { return std::size_t(matrix.rows()); }
};

/// Exact normal-mode transformation of the quadratic photon Hamiltonian:
///   r = u1 (a_x - i a_y) - u2 (a_x^dag - i a_y^dag)
///   l = u1 (a_y - i a_x) - u2 (a_y^dag - i a_x^dag)
/// U maps (a_x, a_x^dag, a_y, a_y^dag) to (r, r^dag, l, l^dag).
struct BogoliubovMatrix {
    Eigen::Matrix4cd U;
    double u1;
    double u2;
};

BogoliubovMatrix bogoliubov(double b_field);

/// Hamiltonian in the circular-mode representation. Sector-restricted bases
/// are the primary path: every generated matrix element is checked to stay
/// inside the sector.
HamiltonianBundle build_circular(const ModelParams& params,
                                 std::shared_ptr<const BasisCatalog> basis);

/// Hamiltonian in the dipole gauge, built over the Fock basis of the two
/// linear-polarization modes (the catalog's n_r/n_l slots are read as
/// n_x/n_y). The photonic zero-point (omega_r+omega_l)/2 is subtracted so
/// the spectrum is directly comparable to build_circular.
HamiltonianBundle build_dipole(const ModelParams& params,
                               std::shared_ptr<const BasisCatalog> basis_linear);

/// Co-rotating frame form for a single dimer: the rotor angle is absorbed
/// into the photon phases and k becomes the conserved frame momentum with
/// kinetic term (k - L)^2 / (2J).
HamiltonianBundle build_corotating(const ModelParams& params,
                                   std::shared_ptr<const BasisCatalog> basis);

/// Dicke Hamiltonian with the dimer angles frozen to c-numbers (no rotor
/// degrees of freedom); basis is photons x spins. Used by the
/// Born-Oppenheimer pipeline. Returns the dense matrix.
Eigen::MatrixXcd dicke_fixed_angles(const ModelParams& params, const std::vector<double>& angles,
                                    int n_max);

} // namespace cavrotor

#endif
