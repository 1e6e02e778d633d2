#include <doctest.h>

#include <cmath>
#include <limits>
#include <memory>

#include "cavrotor/hamiltonian.hpp"
#include "cavrotor/solver.hpp"

using namespace cavrotor;

namespace {

std::shared_ptr<BasisCatalog> make_basis(int n_max, int k_max, std::optional<int> sector,
                                         int n_dimers) {
    TruncationSpec t;
    t.n_max = n_max;
    t.k_max = k_max;
    t.sector = sector;
    return std::make_shared<BasisCatalog>(build_basis(t, n_dimers));
}

} // namespace

TEST_CASE("circular build is hermitian and decouples at g = 0") {
    ModelParams p;
    p.delta = 1.0;
    p.g = 0.0;
    p.b_field = 0.2;
    p.inertia = 5.0;
    auto basis = make_basis(3, 3, std::nullopt, 1);
    HamiltonianBundle h = build_circular(p, basis);
    CHECK(hermiticity_defect(h.matrix) < 1e-14);

    // at g = 0 the matrix is diagonal: wr n_r + wl n_l + (delta/2) sigma_z + k^2/2J
    const DerivedScalars d = derived(p);
    for (std::size_t col = 0; col < basis->dimension(); ++col) {
        const BasisState& s = basis->state(col);
        const double expected = d.omega_r * s.n_r + d.omega_l * s.n_l +
                                0.5 * p.delta * s.sigma_z_sum() + p.rotor_kinetic(s.k[0]);
        CHECK(std::abs(h.matrix.coeff(Eigen::Index(col), Eigen::Index(col)) -
                       Complex(expected)) < 1e-14);
    }
    CHECK(h.matrix.nonZeros() == Eigen::Index(basis->dimension()));
}

TEST_CASE("circular build stays hermitian with coupling on") {
    ModelParams p;
    p.delta = 1.0;
    p.g = 0.8;
    p.b_field = 0.3;
    p.inertia = 10.0;
    p.n_dimers = 2;
    auto basis = make_basis(3, 2, 0, 2);
    HamiltonianBundle h = build_circular(p, basis);
    CHECK(hermiticity_defect(h.matrix) < 1e-13);
}

TEST_CASE("bogoliubov transformation") {
    // symplectic normalization u1^2 - u2^2 = 1/2 for any B
    for (double b : {0.0, 0.1, 0.3, 1.0, 5.0}) {
        BogoliubovMatrix bg = bogoliubov(b);
        CHECK(bg.u1 * bg.u1 - bg.u2 * bg.u2 == doctest::Approx(0.5).epsilon(1e-12));
    }
    BogoliubovMatrix bg = bogoliubov(0.3);
    CHECK(bg.u1 == doctest::Approx(7.072708936567557e-01).epsilon(1e-13));
    CHECK(bg.u2 == doctest::Approx(1.523538690108661e-02).epsilon(1e-13));
    CHECK(bogoliubov(0.0).u2 == doctest::Approx(0.0));
}

TEST_CASE("co-rotating frame reproduces the sector-0 circular ground state") {
    ModelParams p;
    p.delta = 1.0;
    p.g = 0.5;
    p.b_field = 0.2;
    p.inertia = 10.0;

    auto basis_rot = make_basis(6, 0, std::nullopt, 1); // k = 0 frame block
    HamiltonianBundle hrot = build_corotating(p, basis_rot);
    auto basis_circ = make_basis(6, 12, 0, 1);
    HamiltonianBundle hcirc = build_circular(p, basis_circ);
    REQUIRE(basis_rot->dimension() == basis_circ->dimension());

    GroundStateResult grot = ground_state(hrot);
    GroundStateResult gcirc = ground_state(hcirc);
    CHECK(grot.energy == doctest::Approx(gcirc.energy).epsilon(1e-11));

    CHECK_THROWS_AS(build_corotating(p, make_basis(2, 2, 0, 1)), SectorMismatch);
    ModelParams p2 = p;
    p2.n_dimers = 2;
    CHECK_THROWS_AS(build_corotating(p2, make_basis(2, 2, std::nullopt, 2)), Unsupported);
}

TEST_CASE("dipole gauge agrees with the circular basis") {
    ModelParams p;
    p.delta = 1.0;
    p.g = 0.2;
    p.b_field = 0.3;
    p.inertia = 10.0;
    auto basis = make_basis(8, 8, std::nullopt, 1);
    HamiltonianBundle hd = build_dipole(p, basis);
    HamiltonianBundle hc = build_circular(p, basis);
    CHECK(hermiticity_defect(hd.matrix) < 1e-13);
    auto ed = lowest_eigenpairs(hd.matrix, 3, {});
    auto ec = lowest_eigenpairs(hc.matrix, 3, {});
    for (int i = 0; i < 3; ++i)
        CHECK(ed[std::size_t(i)].first ==
              doctest::Approx(ec[std::size_t(i)].first).epsilon(1e-8));
}

TEST_CASE("frozen-angle Dicke matrix") {
    ModelParams p;
    p.delta = 1.0;
    p.g = 0.0;
    p.n_dimers = 2;
    Eigen::MatrixXcd h = dicke_fixed_angles(p, {0.0, 1.0}, 3);
    CHECK(h.rows() == 4 * 4 * 4);
    CHECK((h - h.adjoint()).norm() < 1e-13);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues()(0) == doctest::Approx(-1.0).epsilon(1e-13)); // -N delta / 2

    CHECK_THROWS_AS(dicke_fixed_angles(p, {0.0}, 3), BasisMismatch);
}

TEST_CASE("basis mismatch is rejected") {
    ModelParams p;
    p.n_dimers = 2;
    CHECK_THROWS_AS(build_circular(p, make_basis(2, 2, std::nullopt, 1)), BasisMismatch);
}
