#include "sga/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace sga {

namespace {

using cplx = std::complex<double>;
constexpr cplx kI{0.0, 1.0};

void require_tag(const GridFunction& f, Coordinate tag, const char* where) {
    if (f.grid().tag() != tag) {
        throw GridMismatch(std::string(where) + ": grid carries the wrong coordinate");
    }
    if (f.grid().x_min() <= 0.0) {
        throw DomainError(std::string(where) + ": coordinate must stay strictly positive");
    }
}

double profile_or_throw(const MorseParams& p, double r, const char* where) {
    const double h = h_of_r(p, r);
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw DomainError(std::string(where) + ": profile h(r) underflows at r = " +
                          std::to_string(r));
    }
    return h;
}

/// f'' + (2/r) f', the radial part of the 3-D Laplacian on the full wavefunction.
GridFunction radial_laplacian(const GridFunction& f) {
    GridFunction d1 = derivative(f);
    GridFunction d2 = second_derivative(f);
    const Grid& g = f.grid();
    for (int i = 0; i < f.size(); ++i) {
        d2[i] += 2.0 / g.point(i) * d1[i];
    }
    return d2;
}

double interior_or_throw(const GridFunction& f, int exclude, const char* what) {
    const double nm = f.interior_norm(exclude);
    if (!(nm > 0.0)) {
        throw DegenerateData(std::string(what) + " vanishes on the interior");
    }
    return nm;
}

}  // namespace

GridFunction derivative(const GridFunction& f) {
    const Grid& g = f.grid();
    const int n = f.size();
    const double inv2h = 1.0 / (2.0 * g.spacing());
    std::vector<cplx> out(static_cast<size_t>(n));
    out[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) * inv2h;
    for (int i = 1; i < n - 1; ++i) {
        out[static_cast<size_t>(i)] = (f[i + 1] - f[i - 1]) * inv2h;
    }
    out[static_cast<size_t>(n - 1)] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) * inv2h;
    return GridFunction(g, std::move(out), f.boundary_taint() + 2);
}

GridFunction second_derivative(const GridFunction& f) {
    const Grid& g = f.grid();
    const int n = f.size();
    const double invh2 = 1.0 / (g.spacing() * g.spacing());
    std::vector<cplx> out(static_cast<size_t>(n));
    out[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) * invh2;
    for (int i = 1; i < n - 1; ++i) {
        out[static_cast<size_t>(i)] = (f[i + 1] - 2.0 * f[i] + f[i - 1]) * invh2;
    }
    out[static_cast<size_t>(n - 1)] =
        (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) * invh2;
    return GridFunction(g, std::move(out), f.boundary_taint() + 2);
}

OscRealization::OscRealization(double alpha_value) : alpha(alpha_value) {
    if (!(alpha >= -0.25)) {
        throw DomainError("oscillator realization requires alpha >= -1/4, got " +
                          std::to_string(alpha));
    }
}

MorseRealization::MorseRealization(const MorseParams& p, double beta_value)
    : params(p), beta(beta_value) {
    if (!(beta >= 0.0)) {
        throw DomainError("Morse realization requires beta >= 0, got " + std::to_string(beta));
    }
}

GridFunction apply_K(int which, const OscRealization& realization, const GridFunction& f) {
    require_tag(f, Coordinate::scaled, "apply_K");
    const Grid& g = f.grid();
    const int n = f.size();
    if (which == 2) {
        GridFunction d1 = derivative(f);
        for (int i = 0; i < n; ++i) {
            const double y = g.point(i);
            d1[i] = -0.5 * kI * (y * d1[i] + 0.5 * f[i]);
        }
        return d1;
    }
    if (which == 0 || which == 1) {
        GridFunction d2 = second_derivative(f);
        const double quad = (which == 0) ? 1.0 / 16.0 : -1.0 / 16.0;
        for (int i = 0; i < n; ++i) {
            const double y = g.point(i);
            d2[i] = -d2[i] + (realization.alpha / (y * y) + quad * y * y) * f[i];
        }
        return d2;
    }
    throw DomainError("apply_K index must be 0, 1, or 2");
}

GridFunction apply_J(int which, const MorseRealization& realization, const GridFunction& f) {
    require_tag(f, Coordinate::radial, "apply_J");
    const Grid& g = f.grid();
    const int n = f.size();
    const MorseParams& p = realization.params;
    if (which == 2) {
        GridFunction d1 = derivative(f);
        for (int i = 0; i < n; ++i) {
            const double r = g.point(i);
            d1[i] = kI * (p.a * d1[i] + (p.a / r - 0.5) * f[i]);
        }
        return d1;
    }
    if (which == 0 || which == 1) {
        GridFunction lap = radial_laplacian(f);
        const double a2 = p.a * p.a;
        for (int i = 0; i < n; ++i) {
            const double h = profile_or_throw(p, g.point(i), "apply_J");
            cplx v = (-a2 * lap[i] + (realization.beta + h * h) * f[i]) / (2.0 * h);
            if (which == 1) v -= h * f[i];
            lap[i] = v;
        }
        return lap;
    }
    throw DomainError("apply_J index must be 0, 1, or 2");
}

GridFunction apply_K_morse(int which, const MorseRealization& realization,
                           const GridFunction& f) {
    require_tag(f, Coordinate::radial, "apply_K_morse");
    const Grid& g = f.grid();
    std::vector<cplx> over_r(static_cast<size_t>(f.size()));
    for (int i = 0; i < f.size(); ++i) over_r[static_cast<size_t>(i)] = f[i] / g.point(i);
    GridFunction out = apply_J(which, realization, GridFunction(g, std::move(over_r),
                                                                f.boundary_taint()));
    for (int i = 0; i < out.size(); ++i) out[i] *= g.point(i);
    return out;
}

GridFunction apply_K_ladder(LadderSign sign, const OscRealization& realization,
                            const GridFunction& f) {
    GridFunction g1 = apply_K(1, realization, f);
    GridFunction g2 = apply_K(2, realization, f);
    const cplx c = (sign == LadderSign::raise) ? kI : -kI;
    g2 *= c;
    g1 += g2;
    return g1;
}

GridFunction apply_J_ladder(LadderSign sign, const MorseRealization& realization,
                            const GridFunction& f) {
    GridFunction g1 = apply_J(1, realization, f);
    GridFunction g2 = apply_J(2, realization, f);
    const cplx c = (sign == LadderSign::raise) ? kI : -kI;
    g2 *= c;
    g1 += g2;
    return g1;
}

GridFunction apply_J_ladder_on_eigenstate(LadderSign sign, const MorseRealization& realization,
                                          const GridFunction& f, double j0_eigenvalue) {
    require_tag(f, Coordinate::radial, "apply_J_ladder_on_eigenstate");
    const Grid& g = f.grid();
    const MorseParams& p = realization.params;
    GridFunction d1 = derivative(f);
    const double s = (sign == LadderSign::raise) ? -1.0 : 1.0;
    for (int i = 0; i < f.size(); ++i) {
        const double r = g.point(i);
        const double h = h_of_r(p, r);
        d1[i] = (j0_eigenvalue - h) * f[i] + s * (p.a * d1[i] + (p.a / r - 0.5) * f[i]);
    }
    return d1;
}

double commutator_residual(const OperatorFn& A, const OperatorFn& B, const OperatorFn& expected,
                           std::complex<double> scale, const GridFunction& f, int exclude) {
    GridFunction ab = A(B(f));
    const GridFunction ba = B(A(f));
    GridFunction ex = expected(f);
    ex *= scale;
    ab -= ba;
    ab -= ex;
    const double den = interior_or_throw(f, exclude, "commutator test function");
    return ab.interior_norm(exclude) / den;
}

GridFunction apply_casimir(const OscRealization& realization, const GridFunction& f) {
    GridFunction q = apply_K(0, realization, apply_K(0, realization, f));
    q -= apply_K(1, realization, apply_K(1, realization, f));
    q -= apply_K(2, realization, apply_K(2, realization, f));
    return q;
}

GridFunction apply_casimir(const MorseRealization& realization, const GridFunction& f) {
    GridFunction q = apply_J(0, realization, apply_J(0, realization, f));
    q -= apply_J(1, realization, apply_J(1, realization, f));
    q -= apply_J(2, realization, apply_J(2, realization, f));
    return q;
}

namespace {

template <typename Realization>
double casimir_residual_impl(const Realization& realization, double q_value,
                             const GridFunction& f, int exclude) {
    GridFunction qf = apply_casimir(realization, f);
    GridFunction ref = f;
    ref *= cplx{q_value, 0.0};
    qf -= ref;
    const double den = interior_or_throw(f, exclude, "Casimir test function");
    return qf.interior_norm(exclude) / den;
}

}  // namespace

double casimir_residual(const OscRealization& realization, const GridFunction& f, int exclude) {
    return casimir_residual_impl(realization, casimir_q_alpha(realization.alpha), f, exclude);
}

double casimir_residual(const MorseRealization& realization, const GridFunction& f, int exclude) {
    return casimir_residual_impl(realization, casimir_q_beta(realization.beta), f, exclude);
}

GridFunction apply_radial_hamiltonian(const std::function<double(double)>& potential,
                                      double inv_mass_scale, const GridFunction& f) {
    require_tag(f, Coordinate::radial, "apply_radial_hamiltonian");
    GridFunction lap = radial_laplacian(f);
    const Grid& g = f.grid();
    for (int i = 0; i < f.size(); ++i) {
        const double v = potential(g.point(i));
        if (!std::isfinite(v)) {
            throw DomainError("potential is not finite at r = " + std::to_string(g.point(i)));
        }
        lap[i] = -inv_mass_scale * lap[i] + v * f[i];
    }
    return lap;
}

GridFunction apply_H_S(const MorseParams& params, const GridFunction& f) {
    return apply_radial_hamiltonian([&params](double r) { return morse_potential(params, r); },
                                    params.inv_mass_scale, f);
}

GridFunction apply_H_S_algebraic(const MorseRealization& realization, const GridFunction& f) {
    const MorseParams& p = realization.params;
    GridFunction j0 = apply_J(0, realization, f);
    const Grid& g = f.grid();
    for (int i = 0; i < f.size(); ++i) {
        const double h = h_of_r(p, g.point(i));
        j0[i] = p.cal_E * (2.0 * h * (j0[i] - p.k0 * f[i]) - realization.beta * f[i]);
    }
    return j0;
}

GridFunction apply_H_ell(const OscParams& params, const GridFunction& f) {
    require_tag(f, Coordinate::scaled, "apply_H_ell");
    const Grid& g = f.grid();
    GridFunction d2 = second_derivative(f);
    const double quad = params.k_stiff > 0.0 ? 1.0 / 16.0 : -1.0 / 16.0;
    for (int i = 0; i < f.size(); ++i) {
        const double y = g.point(i);
        d2[i] = params.cal_E *
                (-d2[i] + (params.alpha_ell / (y * y) + quad * y * y) * f[i]);
    }
    return d2;
}

SimilarityResiduals similarity_residuals(const MorseRealization& realization,
                                         const GridFunction& f, int exclude) {
    require_tag(f, Coordinate::radial, "similarity_residuals");
    const Grid& g = f.grid();
    const MorseParams& p = realization.params;
    const int n = f.size();
    const double hg = g.spacing();
    const double a2 = p.a * p.a;

    std::vector<cplx> over_r(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) over_r[static_cast<size_t>(i)] = f[i] / g.point(i);
    const GridFunction f_over_r(g, std::move(over_r), f.boundary_taint());

    const int lo = std::max(exclude, 1);
    const int hi = n - 1 - std::max(exclude, 1);
    if (lo >= hi) throw DomainError("similarity_residuals: no interior rows left");

    SimilarityResiduals out{0.0, 0.0, 0.0};
    for (int which = 0; which < 3; ++which) {
        GridFunction conjugated = apply_J(which, realization, f_over_r);
        for (int i = 0; i < n; ++i) conjugated[i] *= g.point(i);

        double worst = 0.0;
        if (which == 2) {
            const GridFunction d1 = derivative(f);
            for (int i = lo; i <= hi; ++i) {
                const cplx direct = kI * (p.a * d1[i] - 0.5 * f[i]);
                const double den = p.a * (std::abs(f[i + 1]) + std::abs(f[i - 1])) / (2.0 * hg) +
                                   0.5 * std::abs(f[i]);
                if (den == 0.0) continue;
                worst = std::max(worst, std::abs(conjugated[i] - direct) / den);
            }
            out.k2 = worst;
        } else {
            const GridFunction d2 = second_derivative(f);
            for (int i = lo; i <= hi; ++i) {
                const double h = h_of_r(p, g.point(i));
                cplx direct = (-a2 * d2[i] + (realization.beta + h * h) * f[i]) / (2.0 * h);
                double den =
                    (a2 * (std::abs(f[i + 1]) + 2.0 * std::abs(f[i]) + std::abs(f[i - 1])) /
                         (hg * hg) +
                     (realization.beta + h * h) * std::abs(f[i])) /
                    (2.0 * h);
                if (which == 1) {
                    direct -= h * f[i];
                    den += h * std::abs(f[i]);
                }
                if (den == 0.0) continue;
                worst = std::max(worst, std::abs(conjugated[i] - direct) / den);
            }
            if (which == 0) out.k0 = worst;
            if (which == 1) out.k1 = worst;
        }
    }
    return out;
}

}  // namespace sga
