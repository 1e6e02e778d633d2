#ifndef CAVROTOR_BO_HPP
#define CAVROTOR_BO_HPP

#include <vector>

#include "cavrotor/model.hpp"

namespace cavrotor {

/// How the frozen-angle energy surface is evaluated.
enum class SurfaceSource {
    exact_dicke, // dense diagonalization at each angle configuration
    rpa_angle,   // large-N g^4 orientation term
    weak_pt      // weak-coupling quartic phase coefficient
};

/// Ground-state energy over the relative angle of a dimer pair. The grid is
/// uniform on [0, period] with the endpoint duplicated (energy.front() ==
/// energy.back()); the surface is pi-periodic because the coupling is nematic.
struct PotentialSurface {
    std::vector<double> theta;
    std::vector<double> energy;
    SurfaceSource source = SurfaceSource::exact_dicke;
    double period = 0.0;
};

struct MathieuGround {
    double energy = 0.0;
    std::vector<double> theta;
    std::vector<double> psi; // real, nonnegative, normalized on the period
    double angle_dispersion = 0.0;
    double norm_check = 0.0; // trapezoid integral of |psi|^2
};

/// Frozen-rotor energy surface for two dimers as a function of their relative
/// angle; n_points intervals per pi-period, n_max photon cutoff for the
/// exact route. Evaluations fan out over `workers` threads.
PotentialSurface potential_surface(const ModelParams& params, SurfaceSource source,
                                   int n_points = 512, int n_max = 10, int workers = 1);

/// Periodic Schrodinger problem -(1/2I) psi'' + V psi = E psi on the
/// surface's period, solved in the plane-wave basis. The basis is doubled
/// until the ground energy is stable to 1e-8; GridTooCoarse if that never
/// happens. Dispersion is the circular standard deviation of the doubled
/// angle, halved: sigma = (1/2) sqrt(-2 ln |<e^{2 i theta}>|) (infinite for a
/// flat potential).
MathieuGround mathieu_ground(const PotentialSurface& surface, double inertia_eff);

/// Frozen-angle limit of the angular-momentum uncertainty for a single dimer
/// (the large-J plateau). The angle drops out by symmetry.
double bo_deltaL_limit(const ModelParams& params, int n_max = 24);

} // namespace cavrotor

#endif
