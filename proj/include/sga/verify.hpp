#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sga/grid.hpp"
#include "sga/quantities.hpp"

namespace sga {

/// One self-check. `tolerance` is the bound `measured` was held against; the
/// direction (upper or lower bound) follows from the check itself, e.g.
/// residuals must stay below it and overlaps above it. `order` is filled by
/// checks that fit a convergence order across grid refinements.
struct CheckResult {
    std::string name;
    bool passed;
    double measured;
    double tolerance;
    std::optional<double> order;
};

enum class VerifySuite { algebra, spectra, ladder, oracle, all };

/// Throws DomainError on an unknown suite name.
VerifySuite parse_suite(const std::string& name);
std::string suite_name(VerifySuite suite);

struct VerifyOptions {
    MorseParams morse = MorseParams::dimensionless(5.7, 3.0);
    OscParams oscillator = OscParams::from_hbar_omega(1.0, 1.0, 0.0, 0);
    std::uint32_t seed = 12345;
    /// Refinement ladder for convergence fits; spacing must halve exactly.
    std::vector<int> n_points{2001, 4001, 8001};
    int bump_count = 20;
};

/// Shape of one localized real test function.
struct BumpShape {
    double center;
    double width;
};

BumpShape random_bump_shape(std::mt19937& rng, double c_lo, double c_hi, double w_lo,
                            double w_hi);

/// exp(-(x - center)^2 / (2 width^2)) sampled on the grid.
GridFunction sample_bump(const Grid& grid, const BumpShape& shape);

/// All checks of one suite, in a fixed order, deterministic for a fixed seed.
std::vector<CheckResult> run_verify(VerifySuite suite, const VerifyOptions& options);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace sga
