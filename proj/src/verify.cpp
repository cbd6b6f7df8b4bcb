#include "sga/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>

#include "sga/algebra.hpp"
#include "sga/grids.hpp"
#include "sga/numerics.hpp"
#include "sga/spectra.hpp"
#include "sga/wavefunctions.hpp"

namespace sga {

namespace {

constexpr double kResidualTol = 1e-4;
constexpr double kExactTol = 1e-12;
constexpr double kEigenTol = 1e-3;
constexpr double kOrderLo = 1.7;
constexpr double kOrderHi = 2.3;

double uniform(std::mt19937& rng, double lo, double hi) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

/// || got - want ||_interior / || want ||_interior.
double rel_norm_diff(const GridFunction& got, const GridFunction& want, int exclude = 4) {
    GridFunction diff = got;
    diff -= want;
    const double den = want.interior_norm(exclude);
    if (!(den > 0.0)) throw DegenerateData("reference function vanishes on the interior");
    return diff.interior_norm(exclude) / den;
}

double rel_diff(double got, double want) {
    const double den = std::abs(want);
    if (!(den > 0.0)) return std::abs(got - want);
    return std::abs(got - want) / den;
}

struct Checker {
    const VerifyOptions& opt;
    std::mt19937 rng;
    std::vector<CheckResult> results;

    explicit Checker(const VerifyOptions& options) : opt(options), rng(options.seed) {}

    void add(std::string name, bool passed, double measured, double tolerance,
             std::optional<double> order = std::nullopt) {
        results.push_back(
            CheckResult{std::move(name), passed, measured, tolerance, order});
    }

    std::vector<BumpShape> draw_shapes(int count, double c_lo, double c_hi, double w_lo,
                                       double w_hi) {
        std::vector<BumpShape> shapes;
        shapes.reserve(static_cast<size_t>(count));
        for (int i = 0; i < count; ++i) {
            shapes.push_back(random_bump_shape(rng, c_lo, c_hi, w_lo, w_hi));
        }
        return shapes;
    }
};

/// Probe windows for the randomized test functions, per realization.
struct ProbeRanges {
    double c_lo, c_hi, w_lo, w_hi;
};

ProbeRanges oscillator_ranges() { return {3.0, 6.0, 0.6, 1.0}; }

ProbeRanges morse_ranges(const MorseParams& p) {
    return {p.r0 + 0.1 * p.a, p.r0 + 2.7 * p.a, 0.4 * p.a, 0.6 * p.a};
}

struct CommutatorCase {
    const char* tag;
    int a;
    int b;
    int expected;
    std::complex<double> scale;
};

// [G0,G1] = i G2, [G2,G0] = i G1, [G1,G2] = -i G0 for both realizations.
constexpr CommutatorCase kCommutatorCases[] = {
    {"01", 0, 1, 2, {0.0, 1.0}},
    {"20", 2, 0, 1, {0.0, 1.0}},
    {"12", 1, 2, 0, {0.0, -1.0}},
};

template <typename ApplyFn>
void commutator_check(Checker& ck, const std::string& name, const ApplyFn& apply,
                      const std::vector<Grid>& grids, const std::vector<double>& spacings,
                      const CommutatorCase& cc, const ProbeRanges& pr) {
    const OperatorFn op_a = [&apply, &cc](const GridFunction& f) { return apply(cc.a, f); };
    const OperatorFn op_b = [&apply, &cc](const GridFunction& f) { return apply(cc.b, f); };
    const OperatorFn op_e = [&apply, &cc](const GridFunction& f) { return apply(cc.expected, f); };

    double worst_residual = 0.0;
    double worst_order = 2.0;
    double worst_order_gap = -1.0;
    bool orders_ok = true;
    for (const BumpShape& shape : ck.draw_shapes(ck.opt.bump_count, pr.c_lo, pr.c_hi, pr.w_lo,
                                                 pr.w_hi)) {
        std::vector<double> errors;
        errors.reserve(grids.size());
        for (const Grid& g : grids) {
            errors.push_back(commutator_residual(op_a, op_b, op_e, cc.scale,
                                                 sample_bump(g, shape)));
        }
        const double order = convergence_order(errors, spacings);
        if (std::abs(order - 2.0) > worst_order_gap) {
            worst_order_gap = std::abs(order - 2.0);
            worst_order = order;
        }
        if (order < kOrderLo || order > kOrderHi) orders_ok = false;
        worst_residual = std::max(worst_residual, errors.back());
    }
    ck.add(name, orders_ok && worst_residual <= kResidualTol, worst_residual, kResidualTol,
           worst_order);
}

void run_algebra(Checker& ck) {
    const MorseParams& mp = ck.opt.morse;
    const OscRealization osc_real(ck.opt.oscillator.alpha_ell);
    const double beta = (mp.k0 - 0.5) * (mp.k0 - 0.5);
    const MorseRealization mor_real(mp, beta);

    std::vector<Grid> osc_grids, mor_grids;
    std::vector<double> osc_spacings, mor_spacings;
    for (int n : ck.opt.n_points) {
        osc_grids.push_back(oscillator_probe_grid(n));
        mor_grids.push_back(morse_probe_grid(mp, n));
        osc_spacings.push_back(osc_grids.back().spacing());
        mor_spacings.push_back(mor_grids.back().spacing());
    }
    const ProbeRanges osc_pr = oscillator_ranges();
    const ProbeRanges mor_pr = morse_ranges(mp);

    const auto apply_osc = [&osc_real](int which, const GridFunction& f) {
        return apply_K(which, osc_real, f);
    };
    const auto apply_mor = [&mor_real](int which, const GridFunction& f) {
        return apply_J(which, mor_real, f);
    };

    for (const CommutatorCase& cc : kCommutatorCases) {
        commutator_check(ck, std::string("oscillator_commutator_") + cc.tag, apply_osc,
                         osc_grids, osc_spacings, cc, osc_pr);
    }
    for (const CommutatorCase& cc : kCommutatorCases) {
        commutator_check(ck, std::string("morse_commutator_") + cc.tag, apply_mor, mor_grids,
                         mor_spacings, cc, mor_pr);
    }

    {
        double worst = 0.0;
        for (const BumpShape& shape : ck.draw_shapes(ck.opt.bump_count, osc_pr.c_lo, osc_pr.c_hi,
                                                     osc_pr.w_lo, osc_pr.w_hi)) {
            worst = std::max(worst,
                             casimir_residual(osc_real, sample_bump(osc_grids.back(), shape)));
        }
        ck.add("oscillator_casimir", worst <= kResidualTol, worst, kResidualTol);
    }
    {
        double worst = 0.0;
        for (const BumpShape& shape : ck.draw_shapes(ck.opt.bump_count, mor_pr.c_lo, mor_pr.c_hi,
                                                     mor_pr.w_lo, mor_pr.w_hi)) {
            worst = std::max(worst,
                             casimir_residual(mor_real, sample_bump(mor_grids.back(), shape)));
        }
        ck.add("morse_casimir", worst <= kResidualTol, worst, kResidualTol);
    }

    {
        double worst = 0.0;
        for (const BumpShape& shape :
             ck.draw_shapes(10, osc_pr.c_lo, osc_pr.c_hi, osc_pr.w_lo, osc_pr.w_hi)) {
            const GridFunction f = sample_bump(osc_grids.back(), shape);
            worst = std::max(worst, apply_K_ladder(LadderSign::raise, osc_real, f).imag_fraction());
            worst = std::max(worst, apply_K_ladder(LadderSign::lower, osc_real, f).imag_fraction());
        }
        ck.add("oscillator_ladder_reality", worst <= kExactTol, worst, kExactTol);
    }
    {
        double worst = 0.0;
        for (const BumpShape& shape :
             ck.draw_shapes(10, mor_pr.c_lo, mor_pr.c_hi, mor_pr.w_lo, mor_pr.w_hi)) {
            const GridFunction f = sample_bump(mor_grids.back(), shape);
            worst = std::max(worst, apply_J_ladder(LadderSign::raise, mor_real, f).imag_fraction());
            worst = std::max(worst, apply_J_ladder(LadderSign::lower, mor_real, f).imag_fraction());
        }
        ck.add("morse_ladder_reality", worst <= kExactTol, worst, kExactTol);
    }

    {
        const Grid& g = osc_grids.back();
        double worst = 0.0;
        for (const BumpShape& shape :
             ck.draw_shapes(5, osc_pr.c_lo, osc_pr.c_hi, osc_pr.w_lo, osc_pr.w_hi)) {
            const GridFunction f = sample_bump(g, shape);
            const GridFunction got = apply_K(1, osc_real, f);
            GridFunction ref = apply_K(0, osc_real, f);
            for (int i = 0; i < f.size(); ++i) {
                const double y = g.point(i);
                ref[i] -= (y * y / 8.0) * f[i];
            }
            worst = std::max(worst, rel_norm_diff(got, ref));
        }
        ck.add("oscillator_shift_identity", worst <= kExactTol, worst, kExactTol);
    }
    {
        const Grid& g = mor_grids.back();
        double worst = 0.0;
        for (const BumpShape& shape :
             ck.draw_shapes(5, mor_pr.c_lo, mor_pr.c_hi, mor_pr.w_lo, mor_pr.w_hi)) {
            const GridFunction f = sample_bump(g, shape);
            const GridFunction got = apply_J(1, mor_real, f);
            GridFunction ref = apply_J(0, mor_real, f);
            for (int i = 0; i < f.size(); ++i) {
                ref[i] -= h_of_r(mp, g.point(i)) * f[i];
            }
            worst = std::max(worst, rel_norm_diff(got, ref));
        }
        ck.add("morse_shift_identity", worst <= kExactTol, worst, kExactTol);
    }

    {
        const Grid& g = mor_grids.back();
        double worst = 0.0;
        for (const BumpShape& shape :
             ck.draw_shapes(5, mor_pr.c_lo, mor_pr.c_hi, mor_pr.w_lo, mor_pr.w_hi)) {
            const GridFunction f = sample_bump(g, shape);
            worst = std::max(worst,
                             rel_norm_diff(apply_H_S(mp, f), apply_H_S_algebraic(mor_real, f)));
        }
        ck.add("hamiltonian_composition", worst <= kExactTol, worst, kExactTol);
    }

    {
        const OscParams& base = ck.opt.oscillator;
        const OscParams confining = OscParams::from_hbar_omega(
            base.hbar_omega, base.inv_mass_scale, base.epsilon, base.ell, 1);
        const OscParams inverted = OscParams::from_hbar_omega(
            base.hbar_omega, base.inv_mass_scale, base.epsilon, base.ell, -1);
        const Grid& g = osc_grids.back();
        double worst_conf = 0.0;
        double worst_inv = 0.0;
        for (const BumpShape& shape :
             ck.draw_shapes(5, osc_pr.c_lo, osc_pr.c_hi, osc_pr.w_lo, osc_pr.w_hi)) {
            const GridFunction f = sample_bump(g, shape);
            {
                GridFunction ref = apply_K(0, OscRealization(confining.alpha_ell), f);
                ref *= confining.cal_E;
                worst_conf = std::max(worst_conf, rel_norm_diff(apply_H_ell(confining, f), ref));
            }
            {
                GridFunction ref = apply_K(1, OscRealization(inverted.alpha_ell), f);
                ref *= inverted.cal_E;
                worst_inv = std::max(worst_inv, rel_norm_diff(apply_H_ell(inverted, f), ref));
            }
        }
        ck.add("scaled_hamiltonian_confining", worst_conf <= kExactTol, worst_conf, kExactTol);
        ck.add("scaled_hamiltonian_inverted", worst_inv <= kExactTol, worst_inv, kExactTol);
    }

    {
        double worst_rows = 0.0;
        std::vector<double> k2_defects;
        const std::vector<BumpShape> shapes =
            ck.draw_shapes(5, mor_pr.c_lo, mor_pr.c_hi, mor_pr.w_lo, mor_pr.w_hi);
        for (const BumpShape& shape : shapes) {
            const SimilarityResiduals sr =
                similarity_residuals(mor_real, sample_bump(mor_grids.back(), shape));
            worst_rows = std::max(worst_rows, std::max(sr.k0, sr.k1));
        }
        ck.add("reduced_map_rows", worst_rows <= kExactTol, worst_rows, kExactTol);

        for (const Grid& g : mor_grids) {
            k2_defects.push_back(
                similarity_residuals(mor_real, sample_bump(g, shapes.front())).k2);
        }
        // The defect itself shrinks as h^2; the row weight carries the 1/h of
        // the derivative stencil, so the normalized measure falls off as h^3.
        const double order = convergence_order(k2_defects, mor_spacings);
        const double finest = k2_defects.back();
        ck.add("reduced_map_k2_defect", order >= 2.5 && order <= 3.5 && finest <= kResidualTol,
               finest, kResidualTol, order);
    }
}

void run_spectra(Checker& ck) {
    const MorseParams canonical = MorseParams::dimensionless(5.7, 3.0);
    const MorseParams& p = ck.opt.morse;

    {
        static const double frozen[6] = {-27.04, -17.64, -10.24, -4.84, -1.44, -0.04};
        const SpectrumTable t = morse_spectrum(canonical);
        double worst = 0.0;
        bool ok = t.levels.size() == 6;
        if (ok) {
            for (size_t i = 0; i < 6; ++i) {
                worst = std::max(worst, rel_diff(t.levels[i].energy, frozen[i]));
            }
        }
        ck.add("base_levels_frozen", ok && worst <= kExactTol, worst, kExactTol);
    }

    {
        int mismatches = 0;
        for (int m = -5; m <= 0; ++m) {
            const double k_m = canonical.k0 + m;
            const size_t want =
                k_m > 0.5 ? static_cast<size_t>(floor_minus(k_m) + 1) : 0;
            if (effective_spectrum(m, canonical).levels.size() != want) ++mismatches;
        }
        ck.add("member_counts_closed", mismatches == 0, static_cast<double>(mismatches), 0.0);
    }

    {
        const size_t total = morse_spectrum(MorseParams::dimensionless(0.3, 3.0)).levels.size() +
                             morse_spectrum(MorseParams::dimensionless(0.5, 3.0)).levels.size();
        ck.add("shallow_wells_closed", total == 0, static_cast<double>(total), 0.0);
    }

    {
        const SpectrumTable t = morse_spectrum(MorseParams::dimensionless(2.5, 3.0));
        double worst = 1.0;
        if (t.levels.size() == 2) {
            worst = std::max(rel_diff(t.levels[0].energy, -4.0),
                             rel_diff(t.levels[1].energy, -1.0));
        }
        ck.add("two_levels_closed", worst <= kExactTol, worst, kExactTol);
    }

    {
        const SpectrumTable t = morse_spectrum(p);
        double worst = 0.0;
        for (const SpectrumLevel& level : t.levels) {
            const double s_spec = std::sqrt(-level.energy / p.cal_E);
            const double s_index = p.k0 - 0.5 - static_cast<double>(level.nu);
            const double s_tower = (p.k0 - static_cast<double>(level.nu)) - 0.5;
            worst = std::max(worst, rel_diff(s_spec, s_index));
            worst = std::max(worst, rel_diff(s_tower, s_index));
        }
        ck.add("level_lambda_consistency", worst <= kExactTol, worst, kExactTol);
    }

    {
        double worst = 0.0;
        for (int m = -5; m < 0; ++m) {
            if (!(p.k0 + m > 0.0)) continue;
            const SpectrumTable low = effective_spectrum(m, p);
            for (int n = 1; n <= -m; ++n) {
                const SpectrumTable high = effective_spectrum(m + n, p);
                for (size_t nu = 0; nu < low.levels.size(); ++nu) {
                    worst = std::max(worst, rel_diff(high.levels[nu + static_cast<size_t>(n)].energy,
                                                     low.levels[nu].energy));
                }
            }
        }
        ck.add("tower_nesting", worst <= kExactTol, worst, kExactTol);
    }

    {
        const SpectrumTable base_table = morse_spectrum(p);
        double worst = 0.0;
        for (const SpectrumLevel& level : base_table.levels) {
            const SpectrumTable partner = effective_spectrum(-level.nu, p);
            worst = std::max(worst, rel_diff(partner.levels.front().energy, level.energy));
        }
        ck.add("partner_ground_degeneracy", worst <= kExactTol, worst, kExactTol);
    }

    {
        const Grid grid = default_morse_grid(p);
        double worst = 0.0;
        for (int m = -5; m <= 0; ++m) {
            if (!(p.k0 + m > 0.0)) continue;
            const EffectivePotential member = effective_potential(m, p);
            for (int i = 0; i < grid.n_points(); i += 7) {
                const double r = grid.point(i);
                const double g_m = member.k_m * std::exp(-(r - member.r_m) / p.a);
                worst = std::max(worst, rel_diff(g_m, h_of_r(p, r)));
            }
        }
        ck.add("profile_invariance", worst <= kExactTol, worst, kExactTol);
    }

    {
        int violations = 0;
        double previous = 1.0;
        for (int m = -5; m <= 0; ++m) {
            if (!(p.k0 + m > 0.0)) continue;
            const double depth = effective_potential(m, p).depth;
            if (previous <= 0.0 && !(depth < previous)) ++violations;
            previous = depth;
        }
        ck.add("depth_monotone", violations == 0, static_cast<double>(violations), 0.0);
    }

    {
        int structural = 0;
        double worst = 0.0;
        const int m_min = static_cast<int>(std::max<long>(-5, -floor_minus(p.k0)));
        const std::vector<LatticePoint> lattice = morse_lattice(p, m_min);
        for (int m = m_min; m <= 0; ++m) {
            if (!(p.k0 + m > 0.0)) continue;
            const SpectrumTable table = effective_spectrum(m, p);
            size_t column = 0;
            size_t marginals = 0;
            for (const LatticePoint& pt : lattice) {
                if (pt.m != m) continue;
                ++column;
                if (pt.marginal) ++marginals;
                const double k_m = p.k0 + m;
                worst = std::max(worst, rel_diff(pt.lambda, k_m - pt.n));
                const double s = k_m - 0.5 - static_cast<double>(pt.n);
                if (pt.marginal != (s == 0.0)) ++structural;
                if (pt.marginal) continue;
                if (!(pt.lambda > 0.5)) ++structural;
                worst = std::max(
                    worst,
                    rel_diff(pt.energy, table.levels[static_cast<size_t>(pt.n)].energy));
            }
            if (column != table.levels.size() + marginals) ++structural;
        }
        ck.add("lattice_structure", structural == 0 && worst <= kExactTol,
               structural == 0 ? worst : static_cast<double>(structural), kExactTol);
    }

    {
        const OscParams& osc = ck.opt.oscillator;
        double worst = 0.0;
        for (int ell = 0; ell <= 4; ++ell) {
            const OscParams po = OscParams::from_hbar_omega(osc.hbar_omega, osc.inv_mass_scale,
                                                            0.0, ell);
            // lambda_plus = ell/2 + 3/4, so the tower base energy is
            // 2 hbar_omega lambda_plus = hbar_omega (ell + 3/2).
            const double plus = lambda_pair_alpha(po.alpha_ell).plus;
            worst = std::max(worst, std::abs(plus - (0.5 * ell + 0.75)));
        }
        ck.add("oscillator_tower_index", worst <= kExactTol, worst, kExactTol);
    }

    {
        double worst = 0.0;
        for (int ell = 0; ell <= 2; ++ell) {
            const OscParams po = OscParams::from_hbar_omega(1.0, 1.0, 0.0, ell);
            const SpectrumTable t = oscillator_spectrum(po, 5);
            for (size_t nu = 0; nu + 1 < t.levels.size(); ++nu) {
                const double gap = t.levels[nu + 1].energy - t.levels[nu].energy;
                worst = std::max(worst, std::abs(gap - 2.0 * po.hbar_omega));
            }
        }
        ck.add("oscillator_spacing_exact", worst == 0.0, worst, 0.0);
    }
}

void run_ladder(Checker& ck) {
    const MorseParams& p = ck.opt.morse;
    const auto top = nu_max(p.k0);
    ck.add("ladder_levels_present", top.has_value(),
           top ? static_cast<double>(*top + 1) : 0.0, 1.0);
    if (!top) return;

    {
        const Grid grid = morse_ladder_grid(p);
        const EffectivePotential base = effective_potential(0, p);
        double worst = 0.0;
        for (int nu = 0; nu <= *top; ++nu) {
            const double s = p.k0 - 0.5 - static_cast<double>(nu);
            const MorseRealization realization(p, s * s);
            const GridFunction f = morse_state(nu, base, grid).sample_psi();
            worst = std::max(worst, eigencondition_residual(realization, f, p.k0));
        }
        ck.add("analytic_eigencondition", worst <= kEigenTol, worst, kEigenTol);
    }

    {
        double worst = 0.0;
        for (int m = -5; m <= 0; ++m) {
            if (!(p.k0 + m > 0.0)) continue;
            const EffectivePotential member = effective_potential(m, p);
            const SpectrumTable table = effective_spectrum(member);
            if (table.levels.empty()) continue;
            const Grid grid = morse_ladder_grid(member.member_params());
            const auto member_v = [&member](double r) { return member(r); };
            for (const SpectrumLevel& level : table.levels) {
                const GridFunction psi = morse_state(level.nu, member, grid).sample_psi();
                GridFunction defect = apply_radial_hamiltonian(member_v, p.inv_mass_scale, psi);
                GridFunction scaled = psi;
                scaled *= level.energy;
                defect -= scaled;
                worst = std::max(worst, defect.interior_norm(4) / psi.interior_norm(4));
            }
        }
        ck.add("member_hamiltonian_residual", worst <= kEigenTol, worst, kEigenTol);
    }

    {
        const Grid grid = default_morse_grid(p, true);
        double worst_deep = 1.0;
        double worst_threshold = 1.0;
        double worst_energy = 0.0;
        double worst_step = 0.0;
        for (int nu = 1; nu <= *top; ++nu) {
            const LadderResult result = susy_ladder(nu, p, grid);
            const double value = std::abs(result.overlap.value);
            if (nu <= 3) {
                worst_deep = std::min(worst_deep, value);
            } else {
                worst_threshold = std::min(worst_threshold, value);
            }
            worst_energy =
                std::max(worst_energy, rel_diff(result.partner_ground_energy, result.energy));
            for (double r : result.step_residuals) worst_step = std::max(worst_step, r);
        }
        ck.add("susy_overlap_deep", worst_deep >= 0.9999, worst_deep, 0.9999);
        if (*top >= 4) {
            ck.add("susy_overlap_threshold", worst_threshold >= ladder_overlap_floor,
                   worst_threshold, ladder_overlap_floor);
        }
        ck.add("susy_energy_degeneracy", worst_energy <= kExactTol, worst_energy, kExactTol);
        // Steps through near-threshold towers on the long grid carry larger
        // finite-difference defects than the deep-level walks, hence the
        // looser diagnostic bound.
        ck.add("susy_step_residuals", worst_step <= 5e-3, worst_step, 5e-3);
    }

    {
        const Grid grid = default_morse_grid(p);
        const int nu_probe = std::min(2, *top);
        const GridFunction built = ladder_state(nu_probe, 0, p, grid);
        const GridFunction target =
            morse_state(nu_probe, effective_potential(0, p), grid).sample_psi();
        const Overlap ov = overlap(built, target, OverlapWeight::r2_dr);
        const double measured = std::abs(1.0 - std::abs(ov.value));
        ck.add("ladder_zero_steps_identity", ov.normalized && measured <= kExactTol, measured,
               kExactTol);
    }

    if (*top >= 1) {
        const Grid grid = default_morse_grid(p);
        const GridFunction raised = ladder_state(1, 2, p, grid);
        const GridFunction target =
            morse_state(3, effective_potential(2, p), grid).sample_psi();
        const double value = std::abs(overlap(raised, target, OverlapWeight::r2_dr).value);
        ck.add("ladder_raise_matches_member", value >= 1.0 - 1e-4, value, 1.0 - 1e-4);
    }

    {
        const Grid grid = default_morse_grid(p);
        const int nu_probe = std::min(1, *top);
        bool annihilated = false;
        try {
            ladder_state(nu_probe, -(nu_probe + 1), p, grid);
        } catch (const EmptyResult&) {
            annihilated = true;
        }
        ck.add("ladder_annihilation_detected", annihilated, annihilated ? 1.0 : 0.0, 1.0);
    }
}

void run_oracle(Checker& ck) {
    const MorseParams base = MorseParams::dimensionless(5.7, 3.0);

    {
        const SpectrumTable closed = morse_spectrum(base);
        const Grid grid = default_morse_grid(base, needs_extended_grid(base));
        const auto potential = [&base](double r) { return morse_potential(base, r); };
        const BoundStates oracle = bound_states(potential, base.inv_mass_scale, 0.0, grid,
                                                static_cast<int>(closed.levels.size()) + 2);
        double worst_deep = 1.0;
        double threshold_gap = 1.0;
        if (oracle.energies.size() == closed.levels.size()) {
            worst_deep = 0.0;
            for (size_t nu = 0; nu + 1 < closed.levels.size(); ++nu) {
                worst_deep = std::max(worst_deep,
                                      std::abs(oracle.energies[nu] - closed.levels[nu].energy));
            }
            threshold_gap =
                std::abs(oracle.energies.back() - closed.levels.back().energy);
        }
        ck.add("base_levels_vs_oracle", worst_deep <= 1e-3, worst_deep, 1e-3);
        ck.add("threshold_level_vs_oracle", threshold_gap <= 5e-3, threshold_gap, 5e-3);
    }

    {
        int mismatches = 0;
        for (int m = -5; m <= 0; ++m) {
            const EffectivePotential member = effective_potential(m, base);
            const MorseParams mp = member.member_params();
            const Grid grid = default_morse_grid(mp, needs_extended_grid(mp));
            const auto member_v = [&member](double r) { return member(r); };
            const TridiagonalOperator T = discretize(member_v, base.inv_mass_scale, grid);
            const int want = member.k_m > 0.5 ? static_cast<int>(floor_minus(member.k_m)) + 1 : 0;
            if (count_below(T, 0.0) != want) ++mismatches;
        }
        ck.add("member_counts_vs_oracle", mismatches == 0, static_cast<double>(mismatches), 0.0);
    }

    {
        int total = 0;
        for (double k0 : {0.3, 0.5}) {
            const MorseParams shallow = MorseParams::dimensionless(k0, 3.0);
            const auto potential = [&shallow](double r) { return morse_potential(shallow, r); };
            const TridiagonalOperator T =
                discretize(potential, shallow.inv_mass_scale, default_morse_grid(shallow));
            total += count_below(T, 0.0);
        }
        ck.add("shallow_wells_oracle", total == 0, static_cast<double>(total), 0.0);
    }

    {
        const MorseParams two = MorseParams::dimensionless(2.5, 3.0);
        const auto potential = [&two](double r) { return morse_potential(two, r); };
        const Grid grid = default_morse_grid(two, true);
        const TridiagonalOperator T = discretize(potential, two.inv_mass_scale, grid);
        const int below_window = count_below(T, -1e-4);
        const EigenResult third = eigen_lowest(T, 3, false);
        const bool clear = below_window == 2 && third.values[2] > 0.0;
        ck.add("threshold_window_clear", clear, third.values[2], 0.0);
    }

    {
        double worst = 0.0;
        for (int ell = 0; ell <= 2; ++ell) {
            const OscParams po = OscParams::from_hbar_omega(1.0, 1.0, 0.0, ell);
            const SpectrumTable closed = oscillator_spectrum(po, 4);
            const Grid grid = default_oscillator_grid(po, 4);
            const auto potential = [&po](double r) { return 0.5 * po.k_stiff * r * r; };
            const TridiagonalOperator T = discretize(potential, po.inv_mass_scale, grid,
                                                     Centrifugal{ell, 0.0});
            const EigenResult oracle = eigen_lowest(T, 4, false);
            for (size_t nu = 0; nu < 4; ++nu) {
                worst = std::max(worst,
                                 rel_diff(oracle.values[nu], closed.levels[nu].energy));
            }
        }
        ck.add("oscillator_levels_vs_oracle", worst <= 1e-4, worst, 1e-4);
    }

    {
        const OscParams po = OscParams::from_hbar_omega(1.0, 1.0, 0.01, 0);
        const double closed = oscillator_spectrum(po, 1).levels.front().energy;
        const Grid grid = default_oscillator_grid(po, 1);
        const auto potential = [&po](double r) { return 0.5 * po.k_stiff * r * r; };
        const TridiagonalOperator T =
            discretize(potential, po.inv_mass_scale, grid, Centrifugal{0, po.epsilon});
        const EigenResult oracle = eigen_lowest(T, 1, false);
        const double measured = rel_diff(oracle.values.front(), closed);
        ck.add("anharmonic_shift_vs_oracle", measured <= 1e-4, measured, 1e-4);
    }
}

}  // namespace

VerifySuite parse_suite(const std::string& name) {
    if (name == "algebra") return VerifySuite::algebra;
    if (name == "spectra") return VerifySuite::spectra;
    if (name == "ladder") return VerifySuite::ladder;
    if (name == "oracle") return VerifySuite::oracle;
    if (name == "all") return VerifySuite::all;
    throw DomainError("unknown verify suite: " + name);
}

std::string suite_name(VerifySuite suite) {
    switch (suite) {
        case VerifySuite::algebra: return "algebra";
        case VerifySuite::spectra: return "spectra";
        case VerifySuite::ladder: return "ladder";
        case VerifySuite::oracle: return "oracle";
        case VerifySuite::all: return "all";
    }
    return "all";
}

BumpShape random_bump_shape(std::mt19937& rng, double c_lo, double c_hi, double w_lo,
                            double w_hi) {
    const double center = uniform(rng, c_lo, c_hi);
    const double width = uniform(rng, w_lo, w_hi);
    return BumpShape{center, width};
}

GridFunction sample_bump(const Grid& grid, const BumpShape& shape) {
    return GridFunction::sample(grid, [&shape](double x) {
        const double t = (x - shape.center) / shape.width;
        return std::complex<double>(std::exp(-0.5 * t * t), 0.0);
    });
}

std::vector<CheckResult> run_verify(VerifySuite suite, const VerifyOptions& options) {
    if (options.n_points.size() < 3) {
        throw TooFewSamples("verify needs at least three grid sizes for its order fits");
    }
    if (options.bump_count < 1) {
        throw DomainError("verify needs at least one probe function");
    }
    Checker ck(options);
    const bool everything = suite == VerifySuite::all;
    if (everything || suite == VerifySuite::algebra) run_algebra(ck);
    if (everything || suite == VerifySuite::spectra) run_spectra(ck);
    if (everything || suite == VerifySuite::ladder) run_ladder(ck);
    if (everything || suite == VerifySuite::oracle) run_oracle(ck);
    return std::move(ck.results);
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.passed; });
}

}  // namespace sga
