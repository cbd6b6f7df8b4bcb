#pragma once

#include <complex>
#include <functional>

#include "sga/grid.hpp"
#include "sga/quantities.hpp"

namespace sga {

/// Second-order finite-difference first derivative (central stencil inside,
/// one-sided at the two end rows). Adds 2 to the boundary taint counter.
GridFunction derivative(const GridFunction& f);

/// Second-order finite-difference second derivative, same boundary policy.
GridFunction second_derivative(const GridFunction& f);

/// Oscillator realization of the so(2,1) triple on the scaled coordinate y:
///   K0 = -d^2/dy^2 + alpha/y^2 + y^2/16
///   K1 = K0 - y^2/8
///   K2 = (-i/2) (y d/dy + 1/2)
/// Requires alpha >= -1/4 so both tower indices are real.
struct OscRealization {
    double alpha;

    explicit OscRealization(double alpha_value);
};

/// Morse realization of the so(2,1) triple on the radial coordinate r, with
/// profile h(r) = k0 exp(-(r-r0)/a) and radial Laplacian
/// Lap_r = d^2/dr^2 + (2/r) d/dr:
///   J0 = (1/(2h)) (-a^2 Lap_r + beta + h^2)
///   J1 = J0 - h
///   J2 = i (a d/dr + a/r - 1/2)
/// Requires beta >= 0.
struct MorseRealization {
    MorseParams params;
    double beta;

    MorseRealization(const MorseParams& p, double beta_value);
};

/// which = 0, 1, 2 selects K0, K1, K2. Grid must be Coordinate::scaled.
GridFunction apply_K(int which, const OscRealization& realization, const GridFunction& f);

/// which = 0, 1, 2 selects J0, J1, J2. Grid must be Coordinate::radial and
/// h(r) must not underflow anywhere on it (division by 2h).
GridFunction apply_J(int which, const MorseRealization& realization, const GridFunction& f);

/// Conjugated Morse generator acting on reduced functions R = r Psi, built by
/// the defining composition r J_which (R / r).
GridFunction apply_K_morse(int which, const MorseRealization& realization, const GridFunction& f);

enum class LadderSign { raise, lower };

/// Literal ladder operators G1 +/- i G2 for either realization. i G2 is a real
/// operator, so real inputs give real outputs up to rounding.
GridFunction apply_K_ladder(LadderSign sign, const OscRealization& realization,
                            const GridFunction& f);
GridFunction apply_J_ladder(LadderSign sign, const MorseRealization& realization,
                            const GridFunction& f);

/// Ladder step with the J0 part replaced by its known eigenvalue:
///   (J1 +/- i J2) f = mu f - h f -/+ (a f' + (a/r) f - f/2)   when J0 f = mu f.
/// First order in d/dr, so it avoids the exponential noise amplification the
/// literal form suffers from the 1/(2h) factor on fine grids.
GridFunction apply_J_ladder_on_eigenstate(LadderSign sign, const MorseRealization& realization,
                                          const GridFunction& f, double j0_eigenvalue);

using OperatorFn = std::function<GridFunction(const GridFunction&)>;

/// || (A(Bf) - B(Af)) - scale * expected(f) || / || f ||, both norms over the
/// interior (`exclude` cells per end dropped; two stencil applications taint
/// two cells per end each).
double commutator_residual(const OperatorFn& A, const OperatorFn& B, const OperatorFn& expected,
                           std::complex<double> scale, const GridFunction& f, int exclude = 4);

/// Casimir Q = G0^2 - G1^2 - G2^2 built by composing the generator stencils.
GridFunction apply_casimir(const OscRealization& realization, const GridFunction& f);
GridFunction apply_casimir(const MorseRealization& realization, const GridFunction& f);

/// || Q f - q f ||_interior / || f ||_interior with q the closed-form Casimir
/// value of the realization.
double casimir_residual(const OscRealization& realization, const GridFunction& f, int exclude = 4);
double casimir_residual(const MorseRealization& realization, const GridFunction& f,
                        int exclude = 4);

/// Physical Morse Hamiltonian acting on the full wavefunction Psi(r):
///   H = -(hbar^2/2M) Lap_r + cal_E (h^2 - 2 k0 h).
GridFunction apply_H_S(const MorseParams& params, const GridFunction& f);

/// Radial Hamiltonian -(hbar^2/2M) Lap_r f + V(r) f for an arbitrary local
/// potential (used for the effective-family members).
GridFunction apply_radial_hamiltonian(const std::function<double(double)>& potential,
                                      double inv_mass_scale, const GridFunction& f);

/// The Morse Hamiltonian assembled from the algebra, cal_E (2h (J0 - k0) - beta).
/// Shares the Lap_r stencil with apply_H_S, so the two agree to rounding for
/// every beta, not just in the continuum limit.
GridFunction apply_H_S_algebraic(const MorseRealization& realization, const GridFunction& f);

/// Oscillator Hamiltonian on the scaled coordinate,
///   cal_E (-f'' + (alpha_ell/y^2) f + sgn(k) (y^2/16) f),
/// i.e. cal_E K0 for k > 0 and cal_E K1 for k < 0, with cal_E = 2 hbar omega.
GridFunction apply_H_ell(const OscParams& params, const GridFunction& f);

/// Row-wise agreement of the conjugation r J_i (f/r) with the directly
/// discretized conjugated operators
///   K0 = (1/(2h)) (-a^2 d^2/dr^2 + beta + h^2),  K1 = K0 - h,
///   K2 = i (a d/dr - 1/2).
/// Each residual is max over interior rows of |difference| divided by the
/// absolute-value evaluation of the direct stencil at that row, the standard
/// backward-error measure. The K0/K1 rows cancel discretely and sit at
/// rounding level; the K2 row carries an O(h^2) defect from the failure of
/// the discrete product rule on the first-derivative stencil.
struct SimilarityResiduals {
    double k0;
    double k1;
    double k2;

    double max_value() const { return k0 > k1 ? (k0 > k2 ? k0 : k2) : (k1 > k2 ? k1 : k2); }
};

SimilarityResiduals similarity_residuals(const MorseRealization& realization,
                                         const GridFunction& f, int exclude = 4);

}  // namespace sga
