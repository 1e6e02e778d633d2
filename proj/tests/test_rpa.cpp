#include <doctest.h>

#include <cmath>

#include "cavrotor/perturbation.hpp"
#include "cavrotor/rpa.hpp"

using namespace cavrotor;

TEST_CASE("polariton quartic and its roots") {
    ModelParams p;
    p.delta = 1.0;
    p.g = 0.0;
    p.b_field = 0.3;
    const DerivedScalars d = derived(p);

    // decoupled limit: roots are {d^2 (double), wr^2, wl^2}
    auto f0 = polariton_frequencies(p, Complex(1.0, 0.0));
    CHECK(f0[0] == doctest::Approx(d.omega_l).epsilon(1e-7));
    CHECK(f0[1] == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(f0[2] == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(f0[3] == doctest::Approx(d.omega_r).epsilon(1e-7));

    p.g = 0.5;
    auto c = rpa_polynomial(p, Complex(0.4, 0.0));
    CHECK(c[4] == doctest::Approx(1.0));
    auto f = polariton_frequencies(p, Complex(0.4, 0.0));
    CHECK(f[0] == doctest::Approx(7.123430941396779e-01).epsilon(1e-12));
    CHECK(f[1] == doctest::Approx(9.594371482899396e-01).epsilon(1e-12));
    CHECK(f[2] == doctest::Approx(1.042277758144301e+00).epsilon(1e-12));
    CHECK(f[3] == doctest::Approx(1.403817918959033e+00).epsilon(1e-12));
    // each squared frequency annihilates the quartic
    for (double w : f) {
        const double x = w * w;
        double acc = c[4];
        for (int i = 3; i >= 0; --i) acc = acc * x + c[std::size_t(i)];
        CHECK(std::abs(acc) < 1e-10);
    }

    CHECK_THROWS_AS(rpa_polynomial(p, Complex(1.5, 0.0)), DomainError);
}

TEST_CASE("energy correction routes agree") {
    ModelParams p;
    p.delta = 1.0;
    p.g = 0.1;
    p.b_field = 0.0;
    const Complex z{1.0, 0.0};
    const double closed = rpa_energy_B0_closed(p, 1.0);
    CHECK(closed == doctest::Approx(6.248048094752434e-04).epsilon(1e-12));
    CHECK(rpa_energy(p, z, RpaMethod::polynomial).deltaE ==
          doctest::Approx(closed).epsilon(1e-9));
    CHECK(rpa_energy(p, z, RpaMethod::contour_integral).deltaE ==
          doctest::Approx(closed).epsilon(1e-11));

    ModelParams pb = p;
    pb.b_field = 0.3;
    pb.g = 0.5;
    const Complex z2{0.4, 0.0};
    const double poly = rpa_energy(pb, z2, RpaMethod::polynomial).deltaE;
    const double cont = rpa_energy(pb, z2, RpaMethod::contour_integral).deltaE;
    CHECK(poly == doctest::Approx(1.490730887542036e-02).epsilon(1e-12));
    CHECK(cont == doctest::Approx(poly).epsilon(1e-8));

    CHECK_THROWS_AS(rpa_energy_B0_closed(pb, 1.0), NonzeroB);
    CHECK_THROWS_AS(rpa_energy_B0_closed(p, -0.5), DomainError);
}

TEST_CASE("orientation-dependent quartic term") {
    ModelParams p;
    p.delta = 1.0;
    p.g = 0.1;
    p.b_field = 0.2;
    p.n_dimers = 2;
    CHECK(rpa_angle_coefficient(p) == doctest::Approx(-4.741045973896446e-08).epsilon(1e-12));

    // frozen-rotor weak-coupling phase coefficient is the same object
    CHECK(rpa_angle_coefficient(p) ==
          doctest::Approx(weak_corrections(p).E4_phase_coeff * std::pow(p.g, 4)).epsilon(1e-13));

    CHECK(rpa_angle_correction(p, {0.0, 0.0}) ==
          doctest::Approx(-9.482091947792893e-08).epsilon(1e-12));
    // aligned pair is the energy minimum; orthogonal pair costs nothing
    CHECK(std::abs(rpa_angle_correction(p, {0.0, M_PI / 2.0})) < 1e-20);
    CHECK(rpa_angle_correction(p, {0.0, 0.0}) < rpa_angle_correction(p, {0.0, 0.7}));

    CHECK_THROWS_AS(rpa_angle_correction(p, {0.0}), DomainError);

    // at B = 0 the coefficient matches the g^4 Taylor term of the closed form:
    // deltaE ~ g^2 d /(4(d+1)) - g^4 d^2 (1+Z^2)/(128 (d+1)^3) + O(g^6),
    // while the pair sum of N aligned dimers gives coeff * (N^2 - N).
    ModelParams pb0 = p;
    pb0.b_field = 0.0;
    for (double zz : {0.0, 0.5, 1.0}) {
        const double taylor4 = -p.delta * p.delta * (1.0 + zz * zz) /
                               (128.0 * std::pow(p.delta + 1.0, 3)) * std::pow(p.g, 4);
        const double large_n = rpa_angle_coefficient(pb0) *
                               double(pb0.n_dimers * pb0.n_dimers) * (1.0 + zz * zz) / 2.0;
        CHECK(large_n == doctest::Approx(taylor4).epsilon(1e-12));
    }
}
