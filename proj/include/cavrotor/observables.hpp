#ifndef CAVROTOR_OBSERVABLES_HPP
#define CAVROTOR_OBSERVABLES_HPP

#include <Eigen/Dense>

#include "cavrotor/hilbert.hpp"

namespace cavrotor {

struct ObservableSet {
    double L_opt = 0.0;
    double dL_opt = 0.0;
    double L_mech = 0.0;
    Complex Z{0.0, 0.0}; // <(1/N) sum_j e^{2 i phi_j}>
    double n_r = 0.0;
    double n_l = 0.0;
};

double optical_L(const Eigen::VectorXcd& state, const BasisCatalog& basis);
double optical_dL(const Eigen::VectorXcd& state, const BasisCatalog& basis);
double mechanical_L(const Eigen::VectorXcd& state, const BasisCatalog& basis);

/// Nematic alignment order parameter for classical angles.
Complex alignment_Z(const std::vector<double>& angles);

ObservableSet compute_observables(const Eigen::VectorXcd& state, const BasisCatalog& basis);

} // namespace cavrotor

#endif
