#include <doctest.h>

#include <cmath>
#include <limits>

#include "cavrotor/model.hpp"

using namespace cavrotor;

TEST_CASE("mode frequencies") {
    ModelParams p;
    p.b_field = 0.3;
    const DerivedScalars d = derived(p);
    CHECK(d.omega_r == doctest::Approx(std::sqrt(1.09) + 0.3).epsilon(1e-14));
    CHECK(d.omega_l == doctest::Approx(std::sqrt(1.09) - 0.3).epsilon(1e-14));
    // the product is exactly one for any B
    for (double b : {-2.0, -0.5, 0.0, 0.7, 10.0}) {
        p.b_field = b;
        const DerivedScalars db = derived(p);
        CHECK(db.omega_r * db.omega_l == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(db.omega_r - db.omega_l == doctest::Approx(2.0 * b).epsilon(1e-13));
    }
}

TEST_CASE("rotor-dressed detuning and displacement scale") {
    ModelParams p;
    p.delta = 1.0;
    p.g = 0.1;
    p.inertia = 2.0;
    CHECK(derived(p).delta_prime == doctest::Approx(1.25).epsilon(1e-14));
    p.inertia = std::numeric_limits<double>::infinity();
    CHECK(p.frozen_rotors());
    CHECK(derived(p).delta_prime == doctest::Approx(1.0));
    // q = g / sqrt(8 (wr + wl)); B = 0 gives q = g/4
    p.b_field = 0.0;
    CHECK(derived(p).q == doctest::Approx(0.025).epsilon(1e-14));
}

TEST_CASE("coupling scaling conventions") {
    ModelParams p;
    p.g = 2.0;
    p.n_dimers = 4;
    CHECK(p.effective_g() == doctest::Approx(2.0));
    p.scaling = CouplingScaling::constant_volume;
    CHECK(p.effective_g() == doctest::Approx(4.0));
}

TEST_CASE("rotor kinetic energy") {
    ModelParams p;
    p.inertia = 8.0;
    CHECK(p.rotor_kinetic(4) == doctest::Approx(1.0));
    p.inertia = std::numeric_limits<double>::infinity();
    CHECK(p.rotor_kinetic(100) == 0.0);
}

TEST_CASE("parameter validation") {
    ModelParams p;
    p.delta = 0.0;
    CHECK_THROWS_AS(validate(p), DomainError);
    p.delta = 1.0;
    p.g = -0.1;
    CHECK_THROWS_AS(validate(p), DomainError);
    p.g = 0.0;
    p.inertia = -1.0;
    CHECK_THROWS_AS(validate(p), DomainError);
    p.inertia = 1.0;
    p.n_dimers = 0;
    CHECK_THROWS_AS(validate(p), DomainError);
    p.n_dimers = 1;
    CHECK_NOTHROW(validate(p));
}
