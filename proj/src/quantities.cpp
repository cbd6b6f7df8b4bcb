#include "sga/quantities.hpp"

#include <cmath>
#include <string>

namespace sga {

namespace {

void require_finite_positive(double v, const char* name) {
    if (!std::isfinite(v) || v <= 0.0) {
        throw DomainError(std::string(name) + " must be finite and positive");
    }
}

}  // namespace

MorseParams MorseParams::dimensional(double V0, double r0, double a, double inv_mass_scale) {
    require_finite_positive(V0, "V0");
    require_finite_positive(r0, "r0");
    require_finite_positive(a, "a");
    require_finite_positive(inv_mass_scale, "inv_mass_scale");
    MorseParams p;
    p.V0 = V0;
    p.r0 = r0;
    p.a = a;
    p.inv_mass_scale = inv_mass_scale;
    p.cal_E = inv_mass_scale / (a * a);
    p.k0 = std::sqrt(V0 / p.cal_E);
    return p;
}

MorseParams MorseParams::dimensionless(double k0, double r0_over_a) {
    require_finite_positive(k0, "k0");
    require_finite_positive(r0_over_a, "r0_over_a");
    return dimensional(k0 * k0, r0_over_a, 1.0, 1.0);
}

double h_of_r(const MorseParams& p, double r) {
    return p.k0 * std::exp(-(r - p.r0) / p.a);
}

double morse_potential(const MorseParams& p, double r) {
    const double h = h_of_r(p, r);
    return p.cal_E * (h * h - 2.0 * p.k0 * h);
}

OscParams OscParams::make(double k_stiff, double inv_mass_scale, double epsilon, int ell) {
    if (!std::isfinite(k_stiff) || k_stiff == 0.0) {
        throw DomainError("k_stiff must be finite and nonzero");
    }
    require_finite_positive(inv_mass_scale, "inv_mass_scale");
    if (!std::isfinite(epsilon)) throw DomainError("epsilon must be finite");
    if (ell < 0) throw DomainError("ell must be >= 0");
    OscParams p;
    p.k_stiff = k_stiff;
    p.inv_mass_scale = inv_mass_scale;
    p.epsilon = epsilon;
    p.ell = ell;
    const double abs_k = std::abs(k_stiff);
    p.hbar_omega = std::sqrt(2.0 * inv_mass_scale * abs_k);
    p.a_scale = std::pow(inv_mass_scale / (8.0 * abs_k), 0.25);
    p.cal_E = 2.0 * p.hbar_omega;
    p.alpha_ell = static_cast<double>(ell) * static_cast<double>(ell + 1) + epsilon;
    if (p.alpha_ell < -0.25) {
        throw DomainError("epsilon pushes alpha_ell below -1/4; tower indices would be complex");
    }
    return p;
}

OscParams OscParams::from_hbar_omega(double hbar_omega, double inv_mass_scale, double epsilon,
                                     int ell, int k_sign) {
    require_finite_positive(hbar_omega, "hbar_omega");
    require_finite_positive(inv_mass_scale, "inv_mass_scale");
    if (k_sign != 1 && k_sign != -1) throw DomainError("k_sign must be +1 or -1");
    const double k = hbar_omega * hbar_omega / (2.0 * inv_mass_scale);
    return make(k_sign > 0 ? k : -k, inv_mass_scale, epsilon, ell);
}

double casimir_q_alpha(double alpha) { return alpha / 4.0 - 3.0 / 16.0; }

double casimir_q_beta(double beta) { return beta - 0.25; }

LambdaPair lambda_pair_alpha(double alpha) {
    if (!(alpha >= -0.25)) {
        throw DomainError("lambda_pair_alpha requires alpha >= -1/4, got " +
                          std::to_string(alpha));
    }
    const double root = 0.5 * std::sqrt(alpha + 0.25);
    return {0.5 - root, 0.5 + root};
}

LambdaPair lambda_pair_beta(double beta) {
    if (!(beta >= 0.0)) {
        throw DomainError("lambda_pair_beta requires beta >= 0, got " + std::to_string(beta));
    }
    const double root = std::sqrt(beta);
    return {0.5 - root, 0.5 + root};
}

long floor_minus(double x) {
    if (!std::isfinite(x)) throw DomainError("floor_minus requires a finite argument");
    const double fl = std::floor(x);
    if (fl == x) return static_cast<long>(fl) - 1L;
    return static_cast<long>(fl);
}

std::optional<int> nu_max(double k0) {
    if (!std::isfinite(k0) || k0 <= 0.0) {
        throw DomainError("nu_max requires k0 > 0");
    }
    const long top = floor_minus(k0 - 0.5);
    if (top < 0) return std::nullopt;
    return static_cast<int>(top);
}

}  // namespace sga
