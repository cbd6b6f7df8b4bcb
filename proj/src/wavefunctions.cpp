#include "sga/wavefunctions.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "sga/algebra.hpp"
#include "sga/numerics.hpp"

namespace sga {

namespace {

double horner(const std::vector<double>& coeffs, double x) {
    double acc = 0.0;
    for (size_t j = coeffs.size(); j-- > 0;) {
        acc = acc * x + coeffs[j];
    }
    return acc;
}

/// Integral of |r f|^2 dr on the function's own grid (reduced-function norm
/// squared for a full wavefunction f).
double reduced_weight(const GridFunction& f) {
    const Grid& g = f.grid();
    std::vector<double> t2(static_cast<size_t>(f.size()));
    for (int i = 0; i < f.size(); ++i) {
        const double t = std::abs(f[i]) * g.point(i);
        t2[static_cast<size_t>(i)] = t * t;
    }
    return integrate_simpson(t2, g.spacing());
}

void normalize_reduced(GridFunction& f) {
    const double integral = reduced_weight(f);
    if (!(integral > 0.0) || !std::isfinite(integral)) {
        throw DegenerateData("state has no weight to normalize");
    }
    f *= 1.0 / std::sqrt(integral);
}

}  // namespace

std::vector<double> hyp1f1_coefficients(int nu, double b) {
    if (nu < 0) throw DomainError("hyp1f1_coefficients requires nu >= 0");
    std::vector<double> c(static_cast<size_t>(nu) + 1);
    c[0] = 1.0;
    for (int j = 0; j < nu; ++j) {
        const double bj = b + static_cast<double>(j);
        if (bj == 0.0) {
            throw DomainError("series parameter b = " + std::to_string(b) +
                              " hits a pole before terminating");
        }
        c[static_cast<size_t>(j) + 1] = c[static_cast<size_t>(j)] *
                                        (static_cast<double>(j - nu)) /
                                        (bj * static_cast<double>(j + 1));
    }
    return c;
}

double hyp1f1_terminating(int a, double b, double xi) {
    if (a > 0) {
        throw DomainError("hyp1f1_terminating needs a nonpositive first argument, got " +
                          std::to_string(a));
    }
    const int nu = -a;
    double term = 1.0;
    double sum = 1.0;
    for (int j = 0; j < nu; ++j) {
        const double bj = b + static_cast<double>(j);
        if (bj == 0.0) {
            throw DomainError("series parameter b = " + std::to_string(b) +
                              " hits a pole before terminating");
        }
        term *= static_cast<double>(j - nu) * xi / (bj * static_cast<double>(j + 1));
        sum += term;
    }
    return sum;
}

double eigencondition_residual(const MorseRealization& realization, const GridFunction& f,
                               double mu) {
    GridFunction num = apply_J(0, realization, f);
    for (int i = 0; i < f.size(); ++i) num[i] -= mu * f[i];
    const double den = f.interior_norm(4);
    if (!(den > 0.0)) throw DegenerateData("eigencondition reference vanishes");
    return num.interior_norm(4) / den;
}

double weighted_eigencondition_residual(const MorseRealization& realization,
                                        const GridFunction& f, double mu) {
    GridFunction num = apply_J(0, realization, f);
    GridFunction den = GridFunction::zeros(f.grid());
    const Grid& g = f.grid();
    for (int i = 0; i < f.size(); ++i) {
        const double w = 2.0 * h_of_r(realization.params, g.point(i));
        num[i] = w * (num[i] - mu * f[i]);
        den[i] = w * mu * f[i];
    }
    den.set_boundary_taint(num.boundary_taint());
    const double d = den.interior_norm(4);
    if (!(d > 0.0)) throw DegenerateData("eigencondition reference vanishes");
    return num.interior_norm(4) / d;
}

double MorseEigenstate::r_psi(double r) const {
    const double g = potential.k_m * std::exp(-(r - potential.r_m) / potential.base.a);
    return sign * norm_constant * std::exp(-g) * std::pow(g, s) * horner(poly_coeffs, 2.0 * g);
}

double MorseEigenstate::psi(double r) const { return r_psi(r) / r; }

GridFunction MorseEigenstate::sample_psi() const {
    return GridFunction::sample(grid, [this](double r) {
        return std::complex<double>{psi(r), 0.0};
    });
}

GridFunction MorseEigenstate::sample_r_psi() const {
    return GridFunction::sample(grid, [this](double r) {
        return std::complex<double>{r_psi(r), 0.0};
    });
}

MorseEigenstate morse_state(int nu, const EffectivePotential& member, const Grid& grid) {
    if (nu < 0) throw DomainError("morse_state requires nu >= 0");
    if (grid.tag() != Coordinate::radial) {
        throw GridMismatch("morse_state needs a radial grid");
    }
    const double s = member.k_m - 0.5 - static_cast<double>(nu);
    if (!(s > 0.0)) {
        throw DomainError("level nu = " + std::to_string(nu) +
                          " is not bound in this member (binding index <= 0)");
    }
    MorseEigenstate st{member,
                       nu,
                       s,
                       -member.base.cal_E * s * s,
                       hyp1f1_coefficients(nu, 2.0 * s + 1.0),
                       1.0,
                       1.0,
                       grid,
                       true};

    const int n = grid.n_points();
    std::vector<double> t(static_cast<size_t>(n));
    double peak = 0.0;
    for (int i = 0; i < n; ++i) {
        t[static_cast<size_t>(i)] = st.r_psi(grid.point(i));
        peak = std::max(peak, std::abs(t[static_cast<size_t>(i)]));
    }
    if (!(peak > 0.0) || !std::isfinite(peak)) {
        throw DegenerateData("closed-form state evaluates to nothing on this grid");
    }
    std::vector<double> t2(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) t2[static_cast<size_t>(i)] = t[static_cast<size_t>(i)] * t[static_cast<size_t>(i)];
    st.norm_constant = 1.0 / std::sqrt(integrate_simpson(t2, grid.spacing()));
    for (int i = 0; i < n; ++i) {
        if (std::abs(t[static_cast<size_t>(i)]) > 1e-12 * peak) {
            st.sign = t[static_cast<size_t>(i)] > 0.0 ? 1.0 : -1.0;
            break;
        }
    }
    st.tail_ok = std::abs(t[0]) <= 1e-10 * peak &&
                 std::abs(t[static_cast<size_t>(n - 1)]) <= 1e-10 * peak;
    return st;
}

Overlap overlap(const GridFunction& f, const GridFunction& g, OverlapWeight weight) {
    require_same_grid(f, g, "overlap");
    const Grid& gr = f.grid();
    const int n = f.size();
    std::vector<std::complex<double>> cross(static_cast<size_t>(n));
    std::vector<double> wf(static_cast<size_t>(n)), wg(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double r = gr.point(i);
        const double w = (weight == OverlapWeight::r2_dr) ? r * r : 1.0;
        cross[static_cast<size_t>(i)] = std::conj(f[i]) * g[i] * w;
        wf[static_cast<size_t>(i)] = std::norm(f[i]) * w;
        wg[static_cast<size_t>(i)] = std::norm(g[i]) * w;
    }
    Overlap out;
    out.value = integrate_simpson(cross, gr.spacing());
    const double nf = integrate_simpson(wf, gr.spacing());
    const double ng = integrate_simpson(wg, gr.spacing());
    if (!(nf > 0.0) || !(ng > 0.0)) {
        throw DegenerateData("overlap of a state with no weight");
    }
    out.normalized = std::abs(nf - 1.0) <= 1e-8 && std::abs(ng - 1.0) <= 1e-8;
    return out;
}

GridFunction ladder_state(int nu, int m_steps, const MorseParams& p, const Grid& grid) {
    if (nu < 0) throw DomainError("ladder_state requires nu >= 0");
    const auto top = nu_max(p.k0);
    if (!top || nu > *top) {
        throw DomainError("level nu = " + std::to_string(nu) + " is not bound in the base well");
    }

    const double s_nu = p.k0 - 0.5 - static_cast<double>(nu);
    const MorseRealization realization(p, s_nu * s_nu);

    GridFunction f = morse_state(nu, effective_potential(0, p), grid).sample_psi();
    const LadderSign sign = m_steps >= 0 ? LadderSign::raise : LadderSign::lower;
    const double direction = m_steps >= 0 ? 1.0 : -1.0;
    const int steps = std::abs(m_steps);
    for (int j = 0; j < steps; ++j) {
        const double mu = p.k0 + direction * static_cast<double>(j);
        GridFunction next = apply_J_ladder_on_eigenstate(sign, realization, f, mu);
        const double ratio = std::sqrt(reduced_weight(next)) / std::abs(mu);
        if (ratio <= 1e-3) {
            throw EmptyResult("ladder step annihilates the state: lowering went past the "
                              "bottom of the tower of level nu = " +
                              std::to_string(nu));
        }
        normalize_reduced(next);
        fix_phase_first_nonzero(next);
        f = std::move(next);
    }
    return f;
}

LadderResult susy_ladder(int nu, const MorseParams& p, const Grid& grid) {
    if (nu < 0) throw DomainError("susy_ladder requires nu >= 0");
    const auto top = nu_max(p.k0);
    if (!top || nu > *top) {
        throw DomainError("level nu = " + std::to_string(nu) + " is not bound in the base well");
    }

    const EffectivePotential partner = effective_potential(-nu, p);
    const MorseEigenstate ground = morse_state(0, partner, grid);
    const MorseEigenstate target = morse_state(nu, effective_potential(0, p), grid);

    const double s_nu = p.k0 - 0.5 - static_cast<double>(nu);
    const MorseRealization realization(p, s_nu * s_nu);

    GridFunction f = ground.sample_psi();
    std::vector<double> residuals;
    residuals.reserve(static_cast<size_t>(nu));
    for (int j = 0; j < nu; ++j) {
        const double mu = p.k0 - static_cast<double>(nu) + static_cast<double>(j);
        GridFunction next =
            apply_J_ladder_on_eigenstate(LadderSign::raise, realization, f, mu);
        normalize_reduced(next);
        fix_phase_first_nonzero(next);
        residuals.push_back(weighted_eigencondition_residual(realization, next, mu + 1.0));
        f = std::move(next);
    }

    const Overlap ov = overlap(f, target.sample_psi(), OverlapWeight::r2_dr);
    return LadderResult{std::move(f), std::move(residuals), ov, target.energy, ground.energy};
}

Overlap susy_partner_check(int nu, const MorseParams& p, const Grid& grid) {
    return susy_ladder(nu, p, grid).overlap;
}

}  // namespace sga
