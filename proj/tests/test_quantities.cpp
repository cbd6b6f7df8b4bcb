#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "sga/quantities.hpp"

using namespace sga;

TEST_CASE("dimensionless Morse parameters use the length unit a = 1") {
    const MorseParams p = MorseParams::dimensionless(5.7, 3.0);
    CHECK(p.k0 == 5.7);
    CHECK(p.a == 1.0);
    CHECK(p.r0 == 3.0);
    CHECK(p.cal_E == 1.0);
    CHECK(p.inv_mass_scale == 1.0);
    CHECK(p.V0 == doctest::Approx(32.49).epsilon(1e-14));
}

TEST_CASE("dimensional Morse parameters reproduce the strength parameter") {
    // cal_E = inv_mass_scale / a^2 = 0.5 / 0.0625 = 8, k0 = sqrt(V0 / cal_E) = 0.5
    const MorseParams p = MorseParams::dimensional(2.0, 1.5, 0.25, 0.5);
    CHECK(p.cal_E == doctest::Approx(8.0).epsilon(1e-15));
    CHECK(p.k0 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(p.V0 == 2.0);
    CHECK(p.r0 == 1.5);
}

TEST_CASE("Morse profile and potential") {
    const MorseParams p = MorseParams::dimensionless(5.7, 3.0);
    CHECK(h_of_r(p, p.r0) == p.k0);
    CHECK(h_of_r(p, 4.0) == doctest::Approx(2.0969128146772212).epsilon(1e-15));
    // at the minimum the bracket is k0^2 - 2 k0^2 = -k0^2, i.e. -V0 exactly
    CHECK(morse_potential(p, p.r0) == -p.V0);
    CHECK(std::abs(morse_potential(p, p.r0 + 40.0 * p.a)) < 1e-15);
    // monotonic decay of the profile
    CHECK(h_of_r(p, 5.0) < h_of_r(p, 4.0));
}

TEST_CASE("parameter validation rejects nonpositive inputs") {
    CHECK_THROWS_AS(MorseParams::dimensionless(0.0, 3.0), DomainError);
    CHECK_THROWS_AS(MorseParams::dimensionless(-1.0, 3.0), DomainError);
    CHECK_THROWS_AS(MorseParams::dimensionless(5.7, 0.0), DomainError);
    CHECK_THROWS_AS(MorseParams::dimensional(-2.0, 1.5, 0.25, 0.5), DomainError);
    CHECK_THROWS_AS(MorseParams::dimensional(2.0, 1.5, 0.0, 0.5), DomainError);
}

TEST_CASE("oscillator parameters from the level spacing") {
    const OscParams p = OscParams::from_hbar_omega(1.0, 1.0, 0.0, 0);
    CHECK(p.hbar_omega == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(p.k_stiff == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(p.cal_E == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(p.alpha_ell == 0.0);
    CHECK(p.a_scale == doctest::Approx(std::pow(0.25, 0.25)).epsilon(1e-15));

    const OscParams inverted = OscParams::from_hbar_omega(1.0, 1.0, 0.0, 1, -1);
    CHECK(inverted.k_stiff == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(inverted.alpha_ell == 2.0);
    CHECK(inverted.hbar_omega == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("oscillator parameter validation") {
    CHECK_THROWS_AS(OscParams::make(0.0, 1.0, 0.0, 0), DomainError);
    CHECK_THROWS_AS(OscParams::make(0.5, -1.0, 0.0, 0), DomainError);
    CHECK_THROWS_AS(OscParams::make(0.5, 1.0, 0.0, -1), DomainError);
    // alpha_ell = ell(ell+1) + epsilon must stay >= -1/4
    CHECK_THROWS_AS(OscParams::make(0.5, 1.0, -0.3, 0), DomainError);
    CHECK_NOTHROW(OscParams::make(0.5, 1.0, -0.25, 0));
    CHECK_THROWS_AS(OscParams::from_hbar_omega(1.0, 1.0, 0.0, 0, 2), DomainError);
    CHECK_THROWS_AS(OscParams::from_hbar_omega(0.0, 1.0, 0.0, 0), DomainError);
}

TEST_CASE("Casimir eigenvalues for both realizations") {
    CHECK(casimir_q_alpha(0.0) == -0.1875);
    CHECK(casimir_q_alpha(2.0) == 0.3125);
    CHECK(casimir_q_beta(0.25) == 0.0);
    CHECK(casimir_q_beta(27.04) == doctest::Approx(26.79).epsilon(1e-15));
}

TEST_CASE("tower indices solve lambda(lambda-1) = q") {
    for (double alpha : {-0.25, -0.1, 0.0, 0.3, 2.0, 6.0, 12.04}) {
        const LambdaPair lam = lambda_pair_alpha(alpha);
        const double q = casimir_q_alpha(alpha);
        CHECK(std::abs(lam.minus * (lam.minus - 1.0) - q) <= 1e-12 * (1.0 + std::abs(q)));
        CHECK(std::abs(lam.plus * (lam.plus - 1.0) - q) <= 1e-12 * (1.0 + std::abs(q)));
        CHECK(lam.minus + lam.plus == doctest::Approx(1.0).epsilon(1e-12));
    }
    for (double beta : {0.0, 0.04, 1.0, 4.0, 27.04}) {
        const LambdaPair lam = lambda_pair_beta(beta);
        const double q = casimir_q_beta(beta);
        CHECK(std::abs(lam.minus * (lam.minus - 1.0) - q) <= 1e-12 * (1.0 + std::abs(q)));
        CHECK(std::abs(lam.plus * (lam.plus - 1.0) - q) <= 1e-12 * (1.0 + std::abs(q)));
    }
}

TEST_CASE("tower index values") {
    const LambdaPair at_zero = lambda_pair_alpha(0.0);
    CHECK(at_zero.minus == 0.25);
    CHECK(at_zero.plus == 0.75);
    // alpha = 2 (one unit of angular momentum): sqrt(2.25) = 1.5 exactly
    const LambdaPair at_two = lambda_pair_alpha(2.0);
    CHECK(at_two.minus == -0.25);
    CHECK(at_two.plus == 1.25);
    const LambdaPair deep = lambda_pair_beta(27.04);
    CHECK(deep.plus == doctest::Approx(5.7).epsilon(1e-14));
    CHECK(deep.minus == doctest::Approx(-4.7).epsilon(1e-14));
}

TEST_CASE("tower index domain guards") {
    CHECK_THROWS_AS(lambda_pair_alpha(-0.26), DomainError);
    CHECK_THROWS_AS(lambda_pair_beta(-1e-9), DomainError);
}

TEST_CASE("floor_minus is the largest integer strictly below x") {
    CHECK(floor_minus(5.2) == 5);
    CHECK(floor_minus(3.0) == 2);
    CHECK(floor_minus(0.7) == 0);
    CHECK(floor_minus(0.0) == -1);
    CHECK(floor_minus(-0.5) == -1);
    CHECK(floor_minus(-2.0) == -3);
    CHECK_THROWS_AS(floor_minus(std::nan("")), DomainError);
}

TEST_CASE("highest bound level of a Morse well") {
    CHECK(nu_max(5.7).value() == 5);
    CHECK(nu_max(2.5).value() == 1);
    CHECK(nu_max(0.7).value() == 0);
    CHECK_FALSE(nu_max(0.5).has_value());
    CHECK_FALSE(nu_max(0.3).has_value());
    CHECK_THROWS_AS(nu_max(0.0), DomainError);
    CHECK_THROWS_AS(nu_max(-1.0), DomainError);
}
