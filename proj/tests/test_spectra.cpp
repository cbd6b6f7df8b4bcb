#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <map>
#include <vector>

#include "sga/quantities.hpp"
#include "sga/spectra.hpp"

using namespace sga;

namespace {

const MorseParams kBase = MorseParams::dimensionless(5.7, 3.0);

}  // namespace

TEST_CASE("closed-form levels of the reference well") {
    const SpectrumTable t = morse_spectrum(kBase);
    const std::vector<double> expected{-27.04, -17.64, -10.24, -4.84, -1.44, -0.04};
    REQUIRE(t.levels.size() == expected.size());
    for (size_t i = 0; i < expected.size(); ++i) {
        CHECK(t.levels[i].nu == static_cast<int>(i));
        CHECK(std::abs(t.levels[i].energy - expected[i]) <= 1e-12 * std::abs(expected[i]));
    }
    CHECK(t.system == SystemKind::morse);
    CHECK(t.source == SpectrumSource::closed_form);
}

TEST_CASE("well with exactly two levels") {
    // k0 = 2.5 is dyadic, so the energies -(2.0)^2 and -(1.0)^2 are exact
    const SpectrumTable t = morse_spectrum(MorseParams::dimensionless(2.5, 3.0));
    REQUIRE(t.levels.size() == 2);
    CHECK(t.levels[0].energy == -4.0);
    CHECK(t.levels[1].energy == -1.0);
}

TEST_CASE("shallow wells hold nothing, marginal depth holds one level") {
    CHECK(morse_spectrum(MorseParams::dimensionless(0.3, 3.0)).levels.empty());
    CHECK(morse_spectrum(MorseParams::dimensionless(0.5, 3.0)).levels.empty());
    const SpectrumTable just_one = morse_spectrum(MorseParams::dimensionless(0.7, 3.0));
    REQUIRE(just_one.levels.size() == 1);
    CHECK(just_one.levels[0].energy == doctest::Approx(-0.04).epsilon(1e-12));
}

TEST_CASE("level energies do not depend on the dimensionless well position") {
    const SpectrumTable a = morse_spectrum(MorseParams::dimensionless(5.7, 2.0));
    const SpectrumTable b = morse_spectrum(MorseParams::dimensionless(5.7, 3.0));
    const SpectrumTable c = morse_spectrum(MorseParams::dimensionless(5.7, 5.0));
    REQUIRE(a.levels.size() == b.levels.size());
    REQUIRE(a.levels.size() == c.levels.size());
    for (size_t i = 0; i < a.levels.size(); ++i) {
        // bit-for-bit identical, not merely close
        CHECK(std::memcmp(&a.levels[i].energy, &b.levels[i].energy, sizeof(double)) == 0);
        CHECK(std::memcmp(&a.levels[i].energy, &c.levels[i].energy, sizeof(double)) == 0);
    }
}

TEST_CASE("family member geometry") {
    const EffectivePotential v = effective_potential(-3, kBase);
    CHECK(v.k_m == doctest::Approx(2.7).epsilon(1e-15));
    CHECK(v.r_m == doctest::Approx(3.747214401830221).epsilon(1e-15));
    CHECK(v.depth == doctest::Approx(-7.29).epsilon(1e-12));

    // the minimum value is exactly the recorded depth
    CHECK(v(v.r_m) == v.depth);

    // and it is an actual minimum: sampled values nearby are larger
    double best = 1e300;
    double best_r = 0.0;
    const double step = 0.002;
    for (double r = v.r_m - 1.0; r <= v.r_m + 1.0; r += step) {
        if (v(r) < best) {
            best = v(r);
            best_r = r;
        }
    }
    CHECK(std::abs(best_r - v.r_m) <= step);

    const MorseParams member = v.member_params();
    CHECK(member.k0 == doctest::Approx(2.7).epsilon(1e-12));
    CHECK(member.r0 == v.r_m);
    CHECK(member.a == kBase.a);
    CHECK(member.cal_E == doctest::Approx(kBase.cal_E).epsilon(1e-15));
}

TEST_CASE("family members share the base profile variable") {
    for (int m : {-4, -2, 2}) {
        const EffectivePotential v = effective_potential(m, kBase);
        for (double r : {1.0, 2.5, 3.0, 4.0, 7.5, 15.0}) {
            const double g = v.k_m * std::exp(-(r - v.r_m) / kBase.a);
            const double h = h_of_r(kBase, r);
            CHECK(std::abs(g - h) <= 1e-12 * h);
        }
    }
}

TEST_CASE("family depths deepen monotonically with m") {
    double previous = 1.0;
    for (int m = -5; m <= 3; ++m) {
        const EffectivePotential v = effective_potential(m, kBase);
        CHECK(v.depth < previous);
        previous = v.depth;
    }
    CHECK_THROWS_AS(effective_potential(-6, kBase), DomainError);
}

TEST_CASE("member spectra nest into the base tower") {
    const SpectrumTable base = morse_spectrum(kBase);
    for (int n = 1; n <= 5; ++n) {
        const SpectrumTable member = effective_spectrum(-n, kBase);
        REQUIRE(member.levels.size() + static_cast<size_t>(n) == base.levels.size());
        for (size_t nu = 0; nu < member.levels.size(); ++nu) {
            const double lhs = member.levels[nu].energy;
            const double rhs = base.levels[nu + static_cast<size_t>(n)].energy;
            CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
        }
    }
}

TEST_CASE("each level equals the ground level of its partner member") {
    const SpectrumTable base = morse_spectrum(kBase);
    for (size_t nu = 0; nu < base.levels.size(); ++nu) {
        const SpectrumTable partner = effective_spectrum(-static_cast<int>(nu), kBase);
        REQUIRE(!partner.levels.empty());
        CHECK(std::abs(partner.levels[0].energy - base.levels[nu].energy) <=
              1e-12 * std::abs(base.levels[nu].energy));
    }
}

TEST_CASE("tower lattice for the reference well") {
    const auto points = morse_lattice(kBase, -5);
    CHECK(points.size() == 21);  // 1 + 2 + ... + 6 states across m = -5..0
    std::map<int, int> per_member;
    for (const LatticePoint& pt : points) {
        per_member[pt.m] += 1;
        CHECK_FALSE(pt.marginal);
        const double k_m = kBase.k0 + pt.m;
        CHECK(std::abs(pt.lambda - (k_m - pt.n)) <= 1e-12 * k_m);
        CHECK(pt.lambda > 0.5);
        const SpectrumTable member = effective_spectrum(pt.m, kBase);
        CHECK(pt.energy == member.levels[static_cast<size_t>(pt.n)].energy);
    }
    for (int m = -5; m <= 0; ++m) CHECK(per_member[m] == m + 6);
}

TEST_CASE("lattice marks states sitting exactly at threshold") {
    // k0 = 2.5: members 0, -1, -2 end in a marginal lambda = 1/2 state
    const auto points = morse_lattice(MorseParams::dimensionless(2.5, 3.0), -2);
    CHECK(points.size() == 6);
    int marginal_count = 0;
    for (const LatticePoint& pt : points) {
        if (pt.marginal) {
            ++marginal_count;
            CHECK(pt.lambda == 0.5);
            CHECK(pt.energy == 0.0);
        }
    }
    CHECK(marginal_count == 3);
}

TEST_CASE("lattice bounds") {
    CHECK_THROWS_AS(morse_lattice(MorseParams::dimensionless(2.5, 3.0), -3), DomainError);
    CHECK_THROWS_AS(morse_lattice(kBase, -2, -3), DomainError);
    CHECK_NOTHROW(morse_lattice(kBase, -5, 2));
}

TEST_CASE("oscillator tower spacing is exactly two level-spacing units") {
    for (int ell : {0, 1, 2}) {
        const OscParams p = OscParams::from_hbar_omega(1.0, 1.0, 0.0, ell);
        const SpectrumTable t = oscillator_spectrum(p, 5);
        REQUIRE(t.levels.size() == 5);
        CHECK(t.levels[0].energy == static_cast<double>(ell) + 1.5);
        for (size_t i = 1; i < t.levels.size(); ++i) {
            CHECK(t.levels[i].energy - t.levels[i - 1].energy == 2.0);
        }
    }
    // non-dyadic spacing: same structure within rounding
    const OscParams with_rate = OscParams::from_hbar_omega(0.7, 1.0, 0.0, 0);
    const SpectrumTable t = oscillator_spectrum(with_rate, 3);
    CHECK(t.levels[1].energy - t.levels[0].energy == doctest::Approx(1.4).epsilon(1e-14));
}

TEST_CASE("anharmonic shift moves the whole ladder rigidly") {
    const OscParams p = OscParams::from_hbar_omega(1.0, 1.0, 0.01, 0);
    const SpectrumTable t = oscillator_spectrum(p, 3);
    const double expected = 1.0 + std::sqrt(0.26);
    CHECK(t.levels[0].energy == doctest::Approx(expected).epsilon(1e-15));
    CHECK(t.levels[1].energy - t.levels[0].energy == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("inverted oscillator has no tower") {
    const OscParams p = OscParams::from_hbar_omega(1.0, 1.0, 0.0, 0, -1);
    CHECK_THROWS_AS(oscillator_spectrum(p, 3), DomainError);
}

TEST_CASE("tower index across angular momentum") {
    const OscParams p = OscParams::from_hbar_omega(1.0, 1.0, 0.0, 0);
    const auto levels = oscillator_levels(p, 4, 2);
    REQUIRE(levels.size() == 10);
    for (const OscLadderLevel& lvl : levels) {
        // lambda_plus = (2 ell + 3) / 4, exact because (ell + 1/2)^2 is dyadic
        CHECK(lvl.lambda_plus == 0.25 * (2.0 * lvl.ell + 3.0));
        CHECK(lvl.energy ==
              doctest::Approx(2.0 * lvl.nu + lvl.ell + 1.5).epsilon(1e-14));
    }
    CHECK_THROWS_AS(oscillator_levels(p, -1, 2), DomainError);
    CHECK_THROWS_AS(oscillator_levels(p, 2, 0), DomainError);
}
