#include <doctest.h>

#include <cmath>
#include <memory>

#include "cavrotor/observables.hpp"
#include "cavrotor/solver.hpp"

using namespace cavrotor;

TEST_CASE("ground-state angular momenta cancel in the zero sector") {
    ModelParams p;
    p.delta = 1.0;
    p.g = 1.2;
    p.b_field = 0.3;
    p.inertia = 100.0;
    TruncationSpec t;
    t.n_max = 5;
    t.k_max = 5;
    t.sector = 0;
    auto basis = std::make_shared<BasisCatalog>(build_basis(t, 1));
    HamiltonianBundle h = build_circular(p, basis);
    GroundStateResult g = ground_state(h);
    REQUIRE(g.converged);
    ObservableSet obs = compute_observables(g.state, *basis);

    CHECK(std::abs(obs.L_opt + obs.L_mech) < 1e-12);
    CHECK(obs.L_opt == doctest::Approx(optical_L(g.state, *basis)).epsilon(1e-13));
    CHECK(obs.L_mech == doctest::Approx(mechanical_L(g.state, *basis)).epsilon(1e-13));
    // B > 0 favors the r mode
    CHECK(obs.L_opt > 0.0);
    CHECK(obs.n_r >= 0.0);
    CHECK(obs.n_l >= 0.0);
    CHECK(obs.dL_opt >= 0.0);
}

TEST_CASE("vacuum observables vanish") {
    TruncationSpec t;
    t.n_max = 2;
    t.k_max = 2;
    auto basis = std::make_shared<BasisCatalog>(build_basis(t, 1));
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index(basis->dimension()));
    // locate |n_r=0, n_l=0, spin down, k=0>
    BasisState vac;
    vac.k = {0};
    auto idx = basis->find(vac);
    REQUIRE(idx.has_value());
    v(Eigen::Index(*idx)) = 1.0;
    ObservableSet obs = compute_observables(v, *basis);
    CHECK(obs.L_opt == doctest::Approx(0.0));
    CHECK(obs.dL_opt == doctest::Approx(0.0));
    CHECK(obs.L_mech == doctest::Approx(0.0));
    CHECK(obs.n_r == doctest::Approx(0.0));
    CHECK(obs.n_l == doctest::Approx(0.0));
}

TEST_CASE("alignment order parameter") {
    CHECK(std::abs(alignment_Z({0.0, 0.0}) - Complex(1.0)) < 1e-14);
    CHECK(std::abs(alignment_Z({0.0, M_PI})) == doctest::Approx(1.0)); // nematic
    CHECK(std::abs(alignment_Z({0.0, M_PI / 2.0})) < 1e-14);
}
