#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "sga/grid.hpp"
#include "sga/numerics.hpp"
#include "sga/quantities.hpp"

using namespace sga;

namespace {

std::vector<double> sampled(int n, double lo, double hi, double (*f)(double)) {
    std::vector<double> out(static_cast<size_t>(n));
    const double h = (hi - lo) / static_cast<double>(n - 1);
    for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = f(lo + h * i);
    return out;
}

}  // namespace

TEST_CASE("eigenvalues of the 3x3 second-difference matrix") {
    // tridiag(-1, 2, -1) has eigenvalues 2 - sqrt(2), 2, 2 + sqrt(2)
    const std::vector<double> diag{2.0, 2.0, 2.0};
    const std::vector<double> off{-1.0, -1.0};
    const EigenResult r = eigen_lowest(diag, off, 3, true);
    const double s2 = std::sqrt(2.0);
    REQUIRE(r.values.size() == 3);
    CHECK(r.values[0] == doctest::Approx(2.0 - s2).epsilon(1e-12));
    CHECK(r.values[1] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.values[2] == doctest::Approx(2.0 + s2).epsilon(1e-12));
    for (double res : r.residuals) CHECK(res <= 1e-10 * 4.0);
}

TEST_CASE("fully degenerate diagonal matrix keeps usable vectors") {
    const std::vector<double> diag(5, 3.7);
    const std::vector<double> off(4, 0.0);
    const EigenResult r = eigen_lowest(diag, off, 5, true);
    for (double v : r.values) CHECK(v == doctest::Approx(3.7).epsilon(1e-13));
    for (double res : r.residuals) CHECK(res <= 1e-10 * 3.7);
    // inside an exactly degenerate cluster the basis is only approximately
    // orthogonal; the residual contract is the hard guarantee
    for (size_t i = 0; i < r.vectors.size(); ++i) {
        for (size_t j = 0; j <= i; ++j) {
            double dot = 0.0;
            for (size_t k = 0; k < r.vectors[i].size(); ++k) {
                dot += r.vectors[i][k] * r.vectors[j][k];
            }
            CHECK(std::abs(dot - (i == j ? 1.0 : 0.0)) <= 1e-4);
        }
    }
}

TEST_CASE("free particle between hard walls") {
    const Grid grid(0.01, 10.0, 2000, Coordinate::radial);
    const TridiagonalOperator T = discretize([](double) { return 0.0; }, 1.0, grid);
    const EigenResult r = eigen_lowest(T, 3, true);
    // Dirichlet nodes sit one spacing outside both grid ends
    const double length = grid.x_max() - grid.x_min() + 2.0 * grid.spacing();
    const double base = std::numbers::pi * std::numbers::pi / (length * length);
    CHECK(std::abs(r.values[0] - base) <= 0.01 * base);
    CHECK(std::abs(r.values[1] - 4.0 * base) <= 0.01 * 4.0 * base);
    CHECK(std::abs(r.values[2] - 9.0 * base) <= 0.01 * 9.0 * base);
    CHECK(count_below(T, 5.0 * base) == 2);
    CHECK(count_below(T, 0.0) == 0);

    // well-separated eigenvalues give a near-orthonormal basis; the bound
    // residual / gap is about 5e-5 here, the observed quality is far better
    for (size_t i = 0; i < r.vectors.size(); ++i) {
        for (size_t j = 0; j <= i; ++j) {
            double dot = 0.0;
            for (size_t k = 0; k < r.vectors[i].size(); ++k) {
                dot += r.vectors[i][k] * r.vectors[j][k];
            }
            CHECK(std::abs(dot - (i == j ? 1.0 : 0.0)) <= 1e-6);
        }
    }
}

TEST_CASE("eigensolver reports residuals within its contract") {
    const Grid grid(0.05, 12.0, 1500, Coordinate::radial);
    const TridiagonalOperator T =
        discretize([](double r) { return 0.5 * (r - 6.0) * (r - 6.0); }, 1.0, grid);
    const EigenResult r = eigen_lowest(T, 6, true);
    REQUIRE(r.residuals.size() == 6);
    for (double res : r.residuals) CHECK(res <= 1e-10 * T.inf_norm());
    for (size_t i = 1; i < r.values.size(); ++i) CHECK(r.values[i] >= r.values[i - 1]);
}

TEST_CASE("discretize folds the centrifugal term into the diagonal") {
    const Grid grid(0.1, 8.0, 64, Coordinate::radial);
    const double ks = 0.7;
    const auto v = [](double r) { return -1.0 / r; };
    const TridiagonalOperator with_term = discretize(v, ks, grid, Centrifugal{2, 0.01});
    const TridiagonalOperator by_hand = discretize(
        [&](double r) { return v(r) + ks * (6.0 + 0.01) / (r * r); }, ks, grid);
    REQUIRE(with_term.diag.size() == by_hand.diag.size());
    for (size_t i = 0; i < with_term.diag.size(); ++i) {
        CHECK(with_term.diag[i] ==
              doctest::Approx(by_hand.diag[i]).epsilon(1e-14));
    }
    CHECK(with_term.off == by_hand.off);
}

TEST_CASE("discretize insists on a radial grid") {
    const Grid scaled(0.1, 8.0, 64, Coordinate::scaled);
    CHECK_THROWS_AS(discretize([](double) { return 0.0; }, 1.0, scaled), GridMismatch);
}

TEST_CASE("bound state solver on the reference well") {
    const MorseParams p = MorseParams::dimensionless(5.7, 3.0);
    const Grid grid(0.4, 28.0, 4000, Coordinate::radial);
    const auto v = [&p](double r) { return morse_potential(p, r); };
    const BoundStates bs = bound_states(v, p.inv_mass_scale, 0.0, grid, 10);
    REQUIRE(bs.energies.size() == 6);
    CHECK(bs.energies[0] == doctest::Approx(-27.04).epsilon(1e-3));
    REQUIRE(bs.states.size() == 6);

    // each state carries unit norm of r*Psi in the Simpson sense
    for (const GridFunction& psi : bs.states) {
        std::vector<double> w(static_cast<size_t>(psi.size()));
        for (int i = 0; i < psi.size(); ++i) {
            const double u = std::abs(psi[i]) * grid.point(i);
            w[static_cast<size_t>(i)] = u * u;
        }
        CHECK(integrate_simpson(w, grid.spacing()) == doctest::Approx(1.0).epsilon(1e-8));
    }

    // ground state is nodeless and phase-fixed positive
    double low = 0.0;
    for (int i = 0; i < bs.states[0].size(); ++i) {
        low = std::min(low, bs.states[0][i].real());
    }
    CHECK(low >= -1e-10 * bs.states[0].max_abs());
}

TEST_CASE("wells too shallow to bind anything") {
    for (double k0 : {0.3, 0.5}) {
        const MorseParams p = MorseParams::dimensionless(k0, 3.0);
        const Grid grid(0.05, 28.0, 3000, Coordinate::radial);
        const auto v = [&p](double r) { return morse_potential(p, r); };
        const BoundStates bs = bound_states(v, 1.0, 0.0, grid, 4);
        CHECK(bs.energies.empty());
        CHECK(bs.states.empty());
    }
}

TEST_CASE("Simpson rule") {
    SUBCASE("exact for a parabola") {
        const auto f = sampled(101, 0.0, 1.0, [](double x) { return x * x; });
        CHECK(integrate_simpson(f, 0.01) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    }
    SUBCASE("constant integrand") {
        const std::vector<double> f(21, 2.5);
        CHECK(integrate_simpson(f, 0.1) == doctest::Approx(5.0).epsilon(1e-14));
    }
    SUBCASE("Gaussian against the error function") {
        const int n = 2001;
        const double lo = -6.0, hi = 6.0;
        const auto f = sampled(n, lo, hi, [](double x) { return std::exp(-x * x); });
        const double exact = std::sqrt(std::numbers::pi) * std::erf(6.0);
        CHECK(integrate_simpson(f, (hi - lo) / (n - 1)) ==
              doctest::Approx(exact).epsilon(1e-10));
    }
    SUBCASE("even sample count falls back to a trapezoid on the last panel") {
        // exact for a linear integrand regardless of the patch
        const auto lin = sampled(4, 0.0, 1.0, [](double x) { return x; });
        CHECK(integrate_simpson(lin, 1.0 / 3.0) == doctest::Approx(0.5).epsilon(1e-14));
        const auto sq = sampled(1000, 0.0, 1.0, [](double x) { return x * x; });
        CHECK(integrate_simpson(sq, 1.0 / 999.0) ==
              doctest::Approx(1.0 / 3.0).epsilon(1e-8));
    }
    SUBCASE("complex samples") {
        const int n = 1001;
        std::vector<std::complex<double>> f(static_cast<size_t>(n));
        const double h = std::numbers::pi / (n - 1);
        for (int i = 0; i < n; ++i) {
            f[static_cast<size_t>(i)] = std::exp(std::complex<double>(0.0, h * i));
        }
        const std::complex<double> got = integrate_simpson(f, h);
        CHECK(std::abs(got.real()) <= 1e-10);
        CHECK(got.imag() == doctest::Approx(2.0).epsilon(1e-10));
    }
    SUBCASE("too few samples") {
        CHECK_THROWS_AS(integrate_simpson(std::vector<double>{1.0, 2.0}, 0.1),
                        TooFewSamples);
    }
}

TEST_CASE("convergence order fits") {
    SUBCASE("clean second order") {
        const std::vector<double> errors{1e-2, 2.5e-3, 6.25e-4};
        const std::vector<double> spacings{0.4, 0.2, 0.1};
        CHECK(convergence_order(errors, spacings) == doctest::Approx(2.0).epsilon(1e-12));
    }
    SUBCASE("spacings from doubled point counts are accepted") {
        // grids with 500/1000/2000 points have ratios (n-1)/(2n-1), not exactly 2
        const std::vector<double> spacings{1.0 / 499.0, 1.0 / 999.0, 1.0 / 1999.0};
        std::vector<double> errors;
        for (double h : spacings) errors.push_back(3.0 * h * h);
        CHECK(convergence_order(errors, spacings) == doctest::Approx(2.0).epsilon(1e-6));
    }
    SUBCASE("rejects spacings off the geometric ladder") {
        CHECK_THROWS_AS(
            convergence_order({1e-2, 2.5e-3, 6.25e-4}, {0.4, 0.2, 0.11}), DomainError);
    }
    SUBCASE("needs at least three refinements") {
        CHECK_THROWS_AS(convergence_order({1e-2, 2.5e-3}, {0.4, 0.2}), TooFewSamples);
    }
    SUBCASE("rejects errors at rounding level or non-positive") {
        CHECK_THROWS_AS(convergence_order({1e-16, 1e-17, 1e-18}, {0.4, 0.2, 0.1}),
                        DegenerateData);
        CHECK_THROWS_AS(convergence_order({1e-2, 0.0, 6.25e-4}, {0.4, 0.2, 0.1}),
                        DegenerateData);
    }
}
