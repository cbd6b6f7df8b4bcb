#include "sga/spectra.hpp"

#include <cmath>
#include <string>

namespace sga {

namespace {

double morse_level(double cal_E, double k, int nu) {
    const double s = k - 0.5 - static_cast<double>(nu);
    return -cal_E * s * s;
}

}  // namespace

SpectrumTable morse_spectrum(const MorseParams& p) {
    SpectrumTable t;
    t.system = SystemKind::morse;
    t.index = 0;
    t.source = SpectrumSource::closed_form;
    const auto top = nu_max(p.k0);
    if (!top) return t;
    for (int nu = 0; nu <= *top; ++nu) {
        t.levels.push_back({nu, morse_level(p.cal_E, p.k0, nu)});
    }
    return t;
}

SpectrumTable oscillator_spectrum(const OscParams& p, int count) {
    if (count < 1) throw DomainError("oscillator_spectrum requires count >= 1");
    if (p.k_stiff <= 0.0) {
        throw DomainError("oscillator_spectrum requires k_stiff > 0; the inverted "
                          "well has no bound tower");
    }
    SpectrumTable t;
    t.system = SystemKind::oscillator;
    t.index = p.ell;
    t.source = SpectrumSource::closed_form;
    const double half = static_cast<double>(p.ell) + 0.5;
    const double shift = std::sqrt(half * half + p.epsilon);
    for (int nu = 0; nu < count; ++nu) {
        t.levels.push_back({nu, p.hbar_omega * (2.0 * static_cast<double>(nu) + 1.0 + shift)});
    }
    return t;
}

double EffectivePotential::operator()(double r) const {
    const double g = k_m * std::exp(-(r - r_m) / base.a);
    return base.cal_E * (g * g - 2.0 * k_m * g);
}

MorseParams EffectivePotential::member_params() const {
    return MorseParams::dimensional(base.cal_E * k_m * k_m, r_m, base.a, base.inv_mass_scale);
}

EffectivePotential effective_potential(int m, const MorseParams& p) {
    const double k_m = p.k0 + static_cast<double>(m);
    if (!(k_m > 0.0)) {
        throw DomainError("family member m = " + std::to_string(m) +
                          " has no well: k0 + m <= 0");
    }
    EffectivePotential v;
    v.base = p;
    v.m = m;
    v.k_m = k_m;
    v.r_m = p.r0 - p.a * std::log(k_m / p.k0);
    v.depth = -p.cal_E * k_m * k_m;
    return v;
}

SpectrumTable effective_spectrum(const EffectivePotential& v) {
    SpectrumTable t;
    t.system = SystemKind::morse;
    t.index = v.m;
    t.source = SpectrumSource::closed_form;
    const auto top = nu_max(v.k_m);
    if (!top) return t;
    for (int nu = 0; nu <= *top; ++nu) {
        t.levels.push_back({nu, morse_level(v.base.cal_E, v.k_m, nu)});
    }
    return t;
}

SpectrumTable effective_spectrum(int m, const MorseParams& p) {
    return effective_spectrum(effective_potential(m, p));
}

std::vector<LatticePoint> morse_lattice(const MorseParams& p, int m_min, int m_max) {
    if (m_min > m_max) throw DomainError("morse_lattice requires m_min <= m_max");
    const long deepest_drop = -floor_minus(p.k0);
    if (m_min < deepest_drop) {
        throw DomainError("morse_lattice: m_min = " + std::to_string(m_min) +
                          " empties the well; smallest allowed is " +
                          std::to_string(deepest_drop));
    }
    std::vector<LatticePoint> out;
    for (int m = m_min; m <= m_max; ++m) {
        const EffectivePotential v = effective_potential(m, p);
        const double edge = v.k_m - 0.5;
        if (edge < 0.0) continue;
        const int top = static_cast<int>(std::floor(edge));
        for (int n = 0; n <= top; ++n) {
            const double s = edge - static_cast<double>(n);
            out.push_back({v.k_m - static_cast<double>(n), n, m,
                           morse_level(p.cal_E, v.k_m, n), s == 0.0});
        }
    }
    return out;
}

std::vector<OscLadderLevel> oscillator_levels(const OscParams& p, int ell_max,
                                              int count_per_ell) {
    if (ell_max < 0) throw DomainError("oscillator_levels requires ell_max >= 0");
    if (count_per_ell < 1) throw DomainError("oscillator_levels requires count_per_ell >= 1");
    std::vector<OscLadderLevel> out;
    for (int ell = 0; ell <= ell_max; ++ell) {
        const OscParams member =
            OscParams::make(p.k_stiff, p.inv_mass_scale, p.epsilon, ell);
        const LambdaPair lam = lambda_pair_alpha(member.alpha_ell);
        const SpectrumTable t = oscillator_spectrum(member, count_per_ell);
        for (const SpectrumLevel& lvl : t.levels) {
            out.push_back({ell, lvl.nu, lvl.energy, lam.plus});
        }
    }
    return out;
}

}  // namespace sga
