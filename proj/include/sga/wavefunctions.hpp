#pragma once

#include <complex>
#include <vector>

#include "sga/algebra.hpp"
#include "sga/grid.hpp"
#include "sga/spectra.hpp"

namespace sga {

/// Coefficients c_j of the terminating confluent hypergeometric series
/// 1F1(-nu; b; xi) = sum_{j=0..nu} c_j xi^j, by the recurrence
/// c_{j+1} = c_j (j - nu) / ((b + j)(j + 1)), c_0 = 1.
/// Throws DomainError when b lands on a pole (nonpositive integer reached
/// before the series terminates).
std::vector<double> hyp1f1_coefficients(int nu, double b);

/// Value of the terminating series 1F1(a; b; xi) for nonpositive integer
/// a = -nu, summed by an ascending recurrence on the term itself:
/// t_{j+1} = t_j (j + a) xi / ((b + j)(j + 1)).
double hyp1f1_terminating(int a, double b, double xi);

/// Closed-form bound state nu of one family member:
///   r Psi(r) = sign * N * exp(-g) g^s 1F1(-nu; 2s+1; 2g),
/// g the member's profile variable and s = k_m - 1/2 - nu its binding index.
/// N normalizes the integral of |r Psi|^2 dr to 1 on the stored grid; sign
/// makes the first non-negligible sample of r Psi positive.
struct MorseEigenstate {
    EffectivePotential potential;
    int nu;
    double s;
    double energy;
    std::vector<double> poly_coeffs;
    double norm_constant;
    double sign;
    Grid grid;
    bool tail_ok;  // both grid edges carry < 1e-10 of the peak amplitude

    double r_psi(double r) const;
    double psi(double r) const;
    GridFunction sample_psi() const;    // full wavefunction Psi on the grid
    GridFunction sample_r_psi() const;  // reduced function r Psi on the grid
};

/// Throws DomainError when level nu is not bound in this member (s <= 0).
MorseEigenstate morse_state(int nu, const EffectivePotential& member, const Grid& grid);

/// Inner-product weight: plain dr for reduced functions u = r Psi, r^2 dr for
/// full wavefunctions Psi.
enum class OverlapWeight { plain_dr, r2_dr };

/// Weighted inner product of two states. `normalized` reports whether both
/// inputs carried unit norm in the chosen weight; when it is set, |value| can
/// exceed 1 only by rounding (within 1e-10).
struct Overlap {
    std::complex<double> value;
    bool normalized;
};

Overlap overlap(const GridFunction& f, const GridFunction& g, OverlapWeight weight);

/// Lowest |overlap| at which a ladder-built state is still accepted.
inline constexpr double ladder_overlap_floor = 0.999;

/// || J0 f - mu f || / || f || over the stencil-clean interior: how well f
/// solves the eigencondition literally. Meaningful on grids whose right edge
/// keeps the profile weight 1/(2h) moderate (e.g. morse_ladder_grid).
double eigencondition_residual(const MorseRealization& realization, const GridFunction& f,
                               double mu);

/// || 2h (J0 - mu) f || / || 2h mu f ||, the same defect measured against the
/// profile-weighted operator. Stays meaningful on long solver grids where the
/// far tail makes the literal J0 application ill-conditioned.
double weighted_eigencondition_residual(const MorseRealization& realization,
                                        const GridFunction& f, double mu);

/// Walk level nu of the base well along its fixed-Casimir tower by m_steps
/// ladder applications (raising for m_steps > 0, lowering for m_steps < 0)
/// and return the resulting normalized full wavefunction. The result solves
/// the eigencondition J0 f = (k0 + m_steps) f in the realization whose
/// Casimir matches the tower of level nu. Lowering past the bottom of the
/// tower annihilates the state; that case is detected by the collapse of the
/// step output (norm ratio below 1e-3) and reported as EmptyResult.
GridFunction ladder_state(int nu, int m_steps, const MorseParams& p, const Grid& grid);

/// Level nu of the base well built by the algebra instead of the closed form:
/// start from the ground state of family member m = -nu (same energy as the
/// target level), then raise nu times inside the fixed-Casimir tower, stepping
/// the J0 eigenvalue from k0 - nu up to k0. The state is renormalized after
/// every step; step_residuals records the profile-weighted eigencondition
/// defect after each raise.
struct LadderResult {
    GridFunction state;
    std::vector<double> step_residuals;
    Overlap overlap;               // against the closed-form level, r^2 dr weight
    double energy;                 // closed-form energy of the target level
    double partner_ground_energy;  // ground energy of member -nu (equal in theory)
};

LadderResult susy_ladder(int nu, const MorseParams& p, const Grid& grid);

/// The equivalence demonstration reduced to its headline number: overlap of
/// the nu-fold raised partner ground state with the analytic level nu.
Overlap susy_partner_check(int nu, const MorseParams& p, const Grid& grid);

}  // namespace sga
