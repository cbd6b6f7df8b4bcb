#include "sga/grids.hpp"

#include <algorithm>
#include <cmath>

namespace sga {

namespace {

/// Left grid edge: where the profile climbs to max(40, 4 k0). The second
/// term keeps the edge on the wall side of the minimum for very deep wells.
double wall_side_edge(const MorseParams& p) {
    const double h_target = std::max(40.0, 4.0 * p.k0);
    return std::max(0.05 * p.a, p.r0 - p.a * std::log(h_target / p.k0));
}

}  // namespace

bool needs_extended_grid(const MorseParams& p) {
    const auto top = nu_max(p.k0);
    if (!top) return false;
    const double s_top = p.k0 - 0.5 - static_cast<double>(*top);
    return s_top * s_top < 0.1;
}

Grid default_morse_grid(const MorseParams& p, bool extended, int n_points) {
    if (n_points <= 0) n_points = extended ? 12000 : 6000;
    const double span = extended ? 50.0 : 25.0;
    return Grid(wall_side_edge(p), p.r0 + span * p.a, n_points, Coordinate::radial);
}

Grid morse_ladder_grid(const MorseParams& p, int n_points) {
    return Grid(wall_side_edge(p), p.r0 + 15.0 * p.a, n_points, Coordinate::radial);
}

Grid morse_probe_grid(const MorseParams& p, int n_points) {
    const double lo = std::max(0.05 * p.a, p.r0 - 2.3 * p.a);
    return Grid(lo, p.r0 + 5.0 * p.a, n_points, Coordinate::radial);
}

Grid default_oscillator_grid(const OscParams& p, int count, int n_points) {
    if (count < 1) throw DomainError("default_oscillator_grid requires count >= 1");
    if (!(p.k_stiff > 0.0)) {
        throw DomainError("default_oscillator_grid requires a confining well (k_stiff > 0)");
    }
    const double shift = std::sqrt((p.ell + 0.5) * (p.ell + 0.5) + p.epsilon);
    const double e_top = p.hbar_omega * (2.0 * (count - 1) + 1.0 + shift);
    // Three classical turning radii of the topmost requested level: far enough
    // out that the Dirichlet wall no longer moves the low eigenvalues. The
    // left edge sits well inside the first spacing so the reduced function,
    // which vanishes linearly at the origin for s waves, is not clipped.
    const double r_max = 3.0 * std::sqrt(2.0 * e_top / p.k_stiff);
    return Grid(r_max / (100.0 * n_points), r_max, n_points, Coordinate::radial);
}

Grid oscillator_probe_grid(int n_points) {
    return Grid(0.5, 10.5, n_points, Coordinate::scaled);
}

}  // namespace sga
