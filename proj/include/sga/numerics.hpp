#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "sga/errors.hpp"
#include "sga/grid.hpp"

namespace sga {

/// Optional centrifugal term: adds kinetic_scale * (ell*(ell+1) + epsilon) / r^2
/// to the discretized potential.
struct Centrifugal {
    int ell = 0;
    double epsilon = 0.0;
};

/// Real symmetric tridiagonal matrix tied to the grid it was built on.
struct TridiagonalOperator {
    std::vector<double> diag;
    std::vector<double> off;  // off.size() == diag.size() - 1
    Grid grid;

    double inf_norm() const;
};

/// Three-point finite-difference Hamiltonian for
///   -kinetic_scale * u'' + V(r) u  (Dirichlet ends, reduced radial form),
/// with the centrifugal term folded into the diagonal when present.
/// The grid must discretize the radial coordinate.
TridiagonalOperator discretize(const std::function<double(double)>& potential,
                               double kinetic_scale, const Grid& grid,
                               std::optional<Centrifugal> centrifugal = std::nullopt);

struct EigenResult {
    std::vector<double> values;
    std::vector<std::vector<double>> vectors;   // empty unless requested
    std::vector<double> residuals;              // ||T v - lambda v|| per pair
};

/// Lowest `count` eigenvalues (and optionally vectors) of a symmetric
/// tridiagonal matrix via Sturm-sequence bisection plus inverse iteration
/// with reorthogonalization inside near-degenerate clusters.
///
/// Contract: eigenvalues to 1e-12 * ||T||_inf; residuals <= 1e-10 * ||T||_inf.
/// Throws ConvergenceFailure (with the offending index) if either is missed.
EigenResult eigen_lowest(const TridiagonalOperator& T, int count, bool want_vectors);

/// Same solver on raw symmetric tridiagonal data (off.size() == diag.size() - 1).
EigenResult eigen_lowest(const std::vector<double>& diag, const std::vector<double>& off,
                         int count, bool want_vectors);

/// Number of eigenvalues of T strictly below `threshold` (Sturm count).
int count_below(const TridiagonalOperator& T, double threshold);

/// Bound states of a radial problem. energies are the eigenvalues below the
/// asymptote; states hold the full wavefunction Psi = u/r normalized so that
/// the integral of |r Psi|^2 dr is 1 (Simpson), phase fixed positive.
struct BoundStates {
    std::vector<double> energies;
    std::vector<GridFunction> states;
};

/// Finds every eigenvalue below `asymptote` (capped at max_count) of the
/// radial Hamiltonian and returns normalized wavefunctions.
BoundStates bound_states(const std::function<double(double)>& potential, double kinetic_scale,
                         double asymptote, const Grid& grid, int max_count,
                         std::optional<Centrifugal> centrifugal = std::nullopt);

/// Composite Simpson rule for uniformly spaced samples. An even sample count
/// gets a trapezoid patch on the last interval. Throws TooFewSamples for
/// fewer than 3 samples.
double integrate_simpson(const std::vector<double>& values, double spacing);
std::complex<double> integrate_simpson(const std::vector<std::complex<double>>& values,
                                       double spacing);

/// Least-squares slope of log(error) against log(spacing). Needs at least 3
/// spacings in geometric progression to 0.1% (TooFewSamples / DomainError
/// otherwise); the slack admits refinement by doubled point counts.
/// Throws DegenerateData when any error is non-finite, <= 0, or below 1e-15
/// (already at rounding level, slope meaningless).
double convergence_order(const std::vector<double>& errors, const std::vector<double>& spacings);

}  // namespace sga
