#pragma once

#include <optional>

#include "sga/errors.hpp"

namespace sga {

/// Parameters of the Morse well V(r) = cal_E (h^2 - 2 k0 h), h(r) = k0 exp(-(r-r0)/a).
///
/// cal_E = hbar^2 / (2 M a^2) is the natural energy unit; k0 = sqrt(V0 / cal_E)
/// measures the well depth in those units. inv_mass_scale holds hbar^2 / (2M).
struct MorseParams {
    double V0;
    double r0;
    double a;
    double inv_mass_scale;
    double cal_E;
    double k0;

    static MorseParams dimensional(double V0, double r0, double a, double inv_mass_scale);
    /// Unit-normalized family: a = 1, cal_E = 1, V0 = k0^2, r0 = r0_over_a.
    static MorseParams dimensionless(double k0, double r0_over_a);
};

/// Morse profile variable h(r) = k0 exp(-(r - r0)/a).
double h_of_r(const MorseParams& p, double r);

/// Morse well value V(r) = cal_E (h^2 - 2 k0 h); V(r0) = -V0.
double morse_potential(const MorseParams& p, double r);

/// Parameters of the radial oscillator
///   hbar^2/(2M) [-u'' + alpha_ell / r^2 u] + (k/2) r^2 u
/// with the centrifugal strength perturbed to alpha_ell = ell(ell+1) + epsilon.
/// k_stiff may be negative (inverted oscillator); derived scales use |k|:
/// hbar_omega = sqrt(2 * inv_mass_scale * |k|), a_scale^4 = inv_mass_scale/(8|k|),
/// cal_E = 2 hbar_omega.
struct OscParams {
    double k_stiff;
    double inv_mass_scale;
    double epsilon;
    int ell;
    double hbar_omega;
    double a_scale;
    double cal_E;
    double alpha_ell;

    static OscParams make(double k_stiff, double inv_mass_scale, double epsilon, int ell);
    static OscParams from_hbar_omega(double hbar_omega, double inv_mass_scale, double epsilon,
                                     int ell, int k_sign = 1);
};

/// Bargmann indices of the two discrete-series towers attached to one
/// coupling value; they always sum to 1.
struct LambdaPair {
    double minus;
    double plus;
};

/// Casimir value q(alpha) = alpha/4 - 3/16 for the oscillator realization.
double casimir_q_alpha(double alpha);

/// Casimir value q(beta) = beta - 1/4 for the Morse realization.
double casimir_q_beta(double beta);

/// lambda_{-+}(alpha) = 1/2 -+ (1/2) sqrt(alpha + 1/4); requires alpha >= -1/4.
LambdaPair lambda_pair_alpha(double alpha);

/// lambda_{-+}(beta) = 1/2 -+ sqrt(beta); requires beta >= 0.
LambdaPair lambda_pair_beta(double beta);

/// Largest integer strictly less than x. Differs from floor only at integers:
/// floor_minus(3.0) = 2.
long floor_minus(double x);

/// Highest bound level index floor_minus(k0 - 1/2), or empty when the well is
/// too shallow to bind (k0 <= 1/2). Throws DomainError for k0 <= 0.
std::optional<int> nu_max(double k0);

}  // namespace sga
