#include <doctest.h>

#include <cmath>

#include "cavrotor/perturbation.hpp"

using namespace cavrotor;

TEST_CASE("weak-coupling closed forms") {
    ModelParams p;
    p.delta = 1.0;
    p.g = 0.1;
    p.b_field = 0.1;
    WeakPT w = weak_corrections(p);
    CHECK(w.E2 == doctest::Approx(6.218982438812433e-02).epsilon(1e-13));
    CHECK(w.E4_phase_coeff == doctest::Approx(-1.938597574222994e-03).epsilon(1e-13));
    CHECK(w.L == doctest::Approx(3.101756118756792e-05).epsilon(1e-12));
    CHECK(w.dL == doctest::Approx(1.765566855164551e-02).epsilon(1e-12));
    CHECK(w.warnings.empty());

    // B = 0: E2 = 1/16, phase coefficient -1/512 per pair term at delta = 1
    p.b_field = 0.0;
    WeakPT w0 = weak_corrections(p);
    CHECK(w0.E2 == doctest::Approx(0.0625).epsilon(1e-14));
    CHECK(w0.E4_phase_coeff == doctest::Approx(-1.0 / 512.0).epsilon(1e-14));
    CHECK(w0.L == doctest::Approx(0.0)); // no chirality, no angular momentum

    // finite inertia enters through delta' = delta + 1/(2J)
    ModelParams pj = p;
    pj.inertia = 2.0;
    // delta' = 1.25 at B = 0: (1.25/8) * 4.5 / (2 * 2.25 * 2.25) = 5/72
    CHECK(weak_corrections(pj).E2 == doctest::Approx(5.0 / 72.0).epsilon(1e-13));

    // out of regime: a warning is attached, no throw
    ModelParams ploud = p;
    ploud.g = 2.0;
    CHECK(!weak_corrections(ploud).warnings.empty());
}

TEST_CASE("strong-coupling closed forms") {
    ModelParams p;
    p.delta = 1.0;
    p.g = 4.0;
    p.b_field = 0.01;
    StrongPT s = strong_corrections(p);
    CHECK(s.q == doctest::Approx(9.999750015623828e-01).epsilon(1e-13));
    CHECK(s.E0 == doctest::Approx(-9.159651054041243e-03).epsilon(1e-12));
    CHECK(s.L1 == doctest::Approx(7.327354484667496e-04).epsilon(1e-12));
    CHECK(s.dL1 == doctest::Approx(2.706976328532075e-01).epsilon(1e-12));
    CHECK(s.LN == doctest::Approx(s.L1).epsilon(1e-14)); // N = 1

    ModelParams p2 = p;
    p2.n_dimers = 2;
    CHECK(strong_corrections(p2).LN == doctest::Approx(7.357588814232934e-03).epsilon(1e-12));

    ModelParams pweak = p;
    pweak.g = 0.5;
    CHECK(!strong_corrections(pweak).warnings.empty());
}

TEST_CASE("resonance condition") {
    // fixed point of w_l = 2 q^2 delta exp(-4 q^2) with w_r = 1/w_l
    ModelParams p;
    p.delta = 1.0;
    p.g = 4.0;
    double wl = intermediate_resonance(p);
    CHECK(wl == doctest::Approx(1.747029241142963e-01).epsilon(1e-12));
    ModelParams pb = p;
    pb.b_field = 0.5 * (1.0 / wl - wl);
    const DerivedScalars d = derived(pb);
    CHECK(d.omega_l == doctest::Approx(wl).epsilon(1e-10));
    CHECK(resonant_omega_l_at_q(p.delta, d.q, 1) == doctest::Approx(wl).epsilon(1e-10));

    ModelParams p2 = p;
    p2.n_dimers = 2;
    CHECK(intermediate_resonance(p2) == doctest::Approx(4.653292988071457e-01).epsilon(1e-12));

    ModelParams p3 = p;
    p3.n_dimers = 3;
    CHECK_THROWS_AS(intermediate_resonance(p3), Unsupported);
}

TEST_CASE("two-level resonant angular momentum") {
    CHECK(intermediate_L(1.0) == doctest::Approx(2.0 / (1.0 + std::sqrt(5.0))).epsilon(1e-14));
    CHECK(intermediate_L(0.0) == doctest::Approx(0.0));
    // monotone in q, bounded by 1/2 + ... -> 1 as q -> infinity? stays below 1
    CHECK(intermediate_L(0.3) < intermediate_L(0.8));
}

TEST_CASE("displaced oscillator overlaps") {
    const Complex gamma{0.0, -0.7};
    const double a2 = std::norm(gamma);
    // <0|D|0> = e^{-|gamma|^2/2}, <1|D|1> = (1 - |gamma|^2) e^{-|gamma|^2/2}
    CHECK(std::abs(displaced_overlap(0, 0, gamma) - std::exp(-a2 / 2.0)) < 1e-14);
    CHECK(std::abs(displaced_overlap(1, 1, gamma) - (1.0 - a2) * std::exp(-a2 / 2.0)) < 1e-14);
    // column normalization: sum_j |<j|D|0>|^2 = 1
    double sum = 0.0;
    for (int j = 0; j < 60; ++j) sum += std::norm(displaced_overlap(j, 0, gamma));
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    // D(gamma)^dag = D(-gamma)
    CHECK(std::abs(displaced_overlap(3, 5, gamma) - std::conj(displaced_overlap(5, 3, -gamma))) <
          1e-14);
}

TEST_CASE("multilevel block reduces to the two-level form at n = 2") {
    ModelParams p;
    p.delta = 1.0;
    p.g = 4.0;
    double wl = intermediate_resonance(p);
    p.b_field = 0.5 * (1.0 / wl - wl);

    IntermediateBlock b2 = intermediate_L_multilevel(p, 2);
    CHECK(b2.matrix.rows() == 4);
    CHECK(b2.L == doctest::Approx(intermediate_L(derived(p).q)).epsilon(1e-12));

    IntermediateBlock b9 = intermediate_L_multilevel(p, 9);
    CHECK(b9.L == doctest::Approx(3.045983536206679e-01).epsilon(1e-11));
    CHECK(b9.ground_energy == doctest::Approx(-2.108078247128199e-01).epsilon(1e-11));
    CHECK(b9.L > b2.L); // higher excitations only add angular momentum here

    CHECK_THROWS_AS(intermediate_L_multilevel(p, 1), DomainError);
    ModelParams p2 = p;
    p2.n_dimers = 2;
    CHECK_THROWS_AS(intermediate_L_multilevel(p2, 9), Unsupported);
}
