#pragma once

#include "sga/grid.hpp"
#include "sga/quantities.hpp"

namespace sga {

/// True when the shallowest bound level sits within 0.1 energy units
/// (in units of cal_E) of the dissociation threshold, so its tail needs the
/// long grid to resolve. False when the well holds no level at all.
bool needs_extended_grid(const MorseParams& p);

/// Radial solver grid for a Morse well. The left edge is placed where the
/// profile h(r) reaches max(40, 4 k0), deep inside the repulsive wall, and
/// clamped to stay strictly positive; the right edge extends 25 length units
/// past the minimum, or 50 when `extended` is set (near-threshold levels).
/// n_points <= 0 picks the default: 6000 plain, 12000 extended.
Grid default_morse_grid(const MorseParams& p, bool extended = false, int n_points = 0);

/// Tighter radial grid for ladder and eigencondition work: same wall-side
/// edge rule, right edge at r0 + 15 a. Deep levels live well inside it and
/// the profile weight 1 / (2 h) stays moderate throughout.
Grid morse_ladder_grid(const MorseParams& p, int n_points = 8000);

/// Window for probing operator identities with localized test functions:
/// [r0 - 2.3 a, r0 + 5 a], clamped strictly positive on the left.
Grid morse_probe_grid(const MorseParams& p, int n_points = 4001);

/// Radial solver grid for the oscillator well: right edge at three times the
/// classical turning point of the highest requested level, left edge at
/// r_max / (100 n_points), effectively the origin. Requires k_stiff > 0.
Grid default_oscillator_grid(const OscParams& p, int count, int n_points = 6000);

/// Window on the scaled coordinate for probing the oscillator realization
/// away from both the origin and the far tail.
Grid oscillator_probe_grid(int n_points = 4001);

}  // namespace sga
