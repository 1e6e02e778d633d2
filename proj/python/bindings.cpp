#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cavrotor/bo.hpp"
#include "cavrotor/hamiltonian.hpp"
#include "cavrotor/observables.hpp"
#include "cavrotor/perturbation.hpp"
#include "cavrotor/rpa.hpp"
#include "cavrotor/solver.hpp"

namespace py = pybind11;
using namespace cavrotor;

namespace {

py::dict ground(const ModelParams& params, int n_max, int k_max, int sector, double tol) {
    TruncationSpec t;
    t.n_max = n_max;
    t.k_max = k_max;
    t.sector = sector;
    auto basis = std::make_shared<BasisCatalog>(build_basis(t, params.n_dimers));
    auto h = build_circular(params, basis);
    GroundStateResult g = ground_state(h, tol);
    ObservableSet obs = compute_observables(g.state, *basis);
    py::dict d;
    d["energy"] = g.energy;
    d["L_opt"] = obs.L_opt;
    d["dL_opt"] = obs.dL_opt;
    d["L_mech"] = obs.L_mech;
    d["n_r"] = obs.n_r;
    d["n_l"] = obs.n_l;
    d["sector"] = sector;
    d["converged"] = g.converged;
    d["dimension"] = basis->dimension();
    return d;
}

} // namespace

PYBIND11_MODULE(pycavrotor, m) {
    m.doc() = "quantum dimers rotating in a two-mode chiral cavity";

    py::enum_<CouplingScaling>(m, "CouplingScaling")
        .value("constant_density", CouplingScaling::constant_density)
        .value("constant_volume", CouplingScaling::constant_volume);

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init<>())
        .def_readwrite("delta", &ModelParams::delta)
        .def_readwrite("g", &ModelParams::g)
        .def_readwrite("b_field", &ModelParams::b_field)
        .def_readwrite("inertia", &ModelParams::inertia)
        .def_readwrite("n_dimers", &ModelParams::n_dimers)
        .def_readwrite("scaling", &ModelParams::scaling)
        .def("effective_g", &ModelParams::effective_g);

    m.def("omega_r", [](const ModelParams& p) { return derived(p).omega_r; });
    m.def("omega_l", [](const ModelParams& p) { return derived(p).omega_l; });
    m.def("displacement_q", [](const ModelParams& p) { return derived(p).q; });

    m.def("ground", &ground, py::arg("params"), py::arg("n_max") = 8, py::arg("k_max") = 16,
          py::arg("sector") = 0, py::arg("tol") = 1e-9,
          "sector-restricted exact diagonalization with observables");

    m.def("weak_corrections", [](const ModelParams& p) {
        const WeakPT w = weak_corrections(p);
        py::dict d;
        d["E2"] = w.E2;
        d["E4_phase_coeff"] = w.E4_phase_coeff;
        d["L"] = w.L;
        d["dL"] = w.dL;
        d["warnings"] = w.warnings;
        return d;
    });
    m.def("strong_corrections", [](const ModelParams& p) {
        const StrongPT s = strong_corrections(p);
        py::dict d;
        d["q"] = s.q;
        d["E0"] = s.E0;
        d["L1"] = s.L1;
        d["dL1"] = s.dL1;
        d["LN"] = s.LN;
        d["warnings"] = s.warnings;
        return d;
    });
    m.def("intermediate_resonance", &intermediate_resonance);
    m.def("intermediate_L", &intermediate_L);
    m.def("intermediate_L_multilevel",
          [](const ModelParams& p, int n) { return intermediate_L_multilevel(p, n).L; },
          py::arg("params"), py::arg("n") = 9);

    m.def("polariton_frequencies", [](const ModelParams& p, Complex z) {
        const auto f = polariton_frequencies(p, z);
        return std::vector<double>(f.begin(), f.end());
    });
    m.def("rpa_energy",
          [](const ModelParams& p, Complex z) { return rpa_energy(p, z).deltaE; });
    m.def("rpa_energy_B0_closed", &rpa_energy_B0_closed);
    m.def("rpa_angle_correction", &rpa_angle_correction);

    m.def("bo_deltaL_limit", &bo_deltaL_limit, py::arg("params"), py::arg("n_max") = 24);
    m.def("angle_dispersion",
          [](const ModelParams& p, int n_points, int n_max) {
              PotentialSurface s =
                  potential_surface(p, SurfaceSource::exact_dicke, n_points, n_max);
              return mathieu_ground(s, p.inertia / 2.0).angle_dispersion;
          },
          py::arg("params"), py::arg("n_points") = 256, py::arg("n_max") = 6,
          "relative-angle dispersion of the two-dimer mechanical ground state");
}
