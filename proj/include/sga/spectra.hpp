#pragma once

#include <vector>

#include "sga/quantities.hpp"

namespace sga {

enum class SpectrumSource { closed_form, oracle };

enum class SystemKind { morse, oscillator };

struct SpectrumLevel {
    int nu;
    double energy;
};

/// Ordered level list; `index` is the family member m for Morse tables and
/// the partial wave ell for oscillator tables.
struct SpectrumTable {
    SystemKind system = SystemKind::morse;
    int index = 0;
    SpectrumSource source = SpectrumSource::closed_form;
    std::vector<SpectrumLevel> levels;
};

/// Morse bound levels E_nu = -cal_E (k0 - 1/2 - nu)^2, nu = 0..nu_max(k0).
/// Empty table when the well is too shallow to bind anything.
SpectrumTable morse_spectrum(const MorseParams& p);

/// Radial oscillator levels for the params' ell and epsilon:
/// E_nu = hbar_omega (2 nu + 1 + sqrt((ell + 1/2)^2 + epsilon)), nu = 0..count-1.
/// Requires k_stiff > 0 (the inverted well has no bound tower).
SpectrumTable oscillator_spectrum(const OscParams& p, int count);

/// Member m of the equal-shape family built on a base well: depth index
/// k_m = k0 + m, minimum moved to r_m = r0 - a ln(k_m / k0) so the profile
/// variable h(r) is shared by every member.
struct EffectivePotential {
    MorseParams base;
    int m;
    double k_m;
    double r_m;
    double depth;  // value at the minimum, -cal_E k_m^2

    /// V(r) = cal_E (g^2 - 2 k_m g), g = k_m exp(-(r - r_m)/a).
    double operator()(double r) const;

    /// Standalone Morse parameters describing this member.
    MorseParams member_params() const;
};

/// Throws DomainError when k0 + m <= 0 (no well left).
EffectivePotential effective_potential(int m, const MorseParams& p);

/// Bound levels of a family member; empty when k_m <= 1/2.
SpectrumTable effective_spectrum(const EffectivePotential& v);
SpectrumTable effective_spectrum(int m, const MorseParams& p);

/// One node of the family/tower lattice. Rows of constant energy are single
/// towers: lambda = k0 - nu_base = k_m - n, where n is the level index inside
/// member m and nu_base = n - m indexes the equal-energy level of the base
/// well. Equal-energy ladder edges connect (m, n) to (m+1, n+1).
struct LatticePoint {
    double lambda;
    int n;
    int m;
    double energy;
    bool marginal;  // s = k_m - 1/2 - n is exactly 0: zero-binding edge state
};

/// Lattice nodes for family members m = m_min..m_max (m_max defaults to the
/// base well). Requires m_min >= -floor_minus(k0) so every member keeps
/// k_m > 0. Nodes appear only where s = k_m - 1/2 - n >= 0; the s = 0 edge
/// states are included but flagged marginal.
std::vector<LatticePoint> morse_lattice(const MorseParams& p, int m_min, int m_max = 0);

/// Oscillator levels arranged for the ladder diagram: within a fixed ell the
/// raising operator steps nu by 1 and the energy by exactly 2 hbar_omega.
struct OscLadderLevel {
    int ell;
    int nu;
    double energy;
    double lambda_plus;  // Bargmann index of the ell tower
};

std::vector<OscLadderLevel> oscillator_levels(const OscParams& p, int ell_max, int count_per_ell);

}  // namespace sga
