#include "sga/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace sga {

namespace {

constexpr double kEvalRelTol = 1e-12;   // eigenvalue accuracy, times ||T||_inf
constexpr double kResRelTol = 1e-10;    // residual bound, times ||T||_inf

double pivot_floor(const std::vector<double>& off) {
    double max_e2 = 1.0;
    for (double e : off) max_e2 = std::max(max_e2, e * e);
    return std::numeric_limits<double>::min() * max_e2;
}

double inf_norm_raw(const std::vector<double>& diag, const std::vector<double>& off) {
    const size_t n = diag.size();
    double m = 0.0;
    for (size_t i = 0; i < n; ++i) {
        double row = std::abs(diag[i]);
        if (i > 0) row += std::abs(off[i - 1]);
        if (i + 1 < n) row += std::abs(off[i]);
        m = std::max(m, row);
    }
    return m;
}

/// Number of eigenvalues strictly below x (Sturm sequence with pivot guard).
int sturm_count(const std::vector<double>& diag, const std::vector<double>& off, double x,
                double pivmin) {
    const size_t n = diag.size();
    double t = diag[0] - x;
    if (std::abs(t) <= pivmin) t = -pivmin;
    int count = t < 0.0 ? 1 : 0;
    for (size_t i = 1; i < n; ++i) {
        t = diag[i] - x - off[i - 1] * off[i - 1] / t;
        if (std::abs(t) <= pivmin) t = -pivmin;
        if (t < 0.0) ++count;
    }
    return count;
}

/// k-th smallest eigenvalue (0-indexed) by bisection on the Sturm count.
double bisect_eigenvalue(const std::vector<double>& diag, const std::vector<double>& off, int k,
                         double lo, double hi, double pivmin, double norm) {
    const double tol = std::max(1e-14 * norm, 4.0 * std::numeric_limits<double>::min());
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (sturm_count(diag, off, mid, pivmin) >= k + 1) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

struct ShiftedFactor {
    std::vector<double> dl, d, du, du2;
    std::vector<char> swapped;
};

/// LU factorization of (T - shift I) with row interchanges, tridiagonal layout.
ShiftedFactor factor_shifted(const std::vector<double>& diag, const std::vector<double>& off,
                             double shift, double pivmin) {
    const size_t n = diag.size();
    ShiftedFactor f;
    f.dl.assign(off.begin(), off.end());
    f.d.resize(n);
    for (size_t i = 0; i < n; ++i) f.d[i] = diag[i] - shift;
    f.du.assign(off.begin(), off.end());
    f.du2.assign(n >= 2 ? n - 2 : 0, 0.0);
    f.swapped.assign(n >= 1 ? n - 1 : 0, 0);
    for (size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(f.d[i]) >= std::abs(f.dl[i])) {
            if (std::abs(f.d[i]) <= pivmin) f.d[i] = pivmin;
            const double fact = f.dl[i] / f.d[i];
            f.dl[i] = fact;
            f.d[i + 1] -= fact * f.du[i];
            if (i + 2 < n) f.du2[i] = 0.0;
        } else {
            const double fact = f.d[i] / f.dl[i];
            f.d[i] = f.dl[i];
            f.dl[i] = fact;
            const double temp = f.du[i];
            f.du[i] = f.d[i + 1];
            f.d[i + 1] = temp - fact * f.d[i + 1];
            if (i + 2 < n) {
                f.du2[i] = f.du[i + 1];
                f.du[i + 1] = -fact * f.du[i + 1];
            }
            f.swapped[i] = 1;
        }
    }
    if (n >= 1 && std::abs(f.d[n - 1]) <= pivmin) f.d[n - 1] = pivmin;
    return f;
}

void solve_factored(const ShiftedFactor& f, std::vector<double>& b) {
    const size_t n = f.d.size();
    for (size_t i = 0; i + 1 < n; ++i) {
        if (!f.swapped[i]) {
            b[i + 1] -= f.dl[i] * b[i];
        } else {
            const double temp = b[i];
            b[i] = b[i + 1];
            b[i + 1] = temp - f.dl[i] * b[i];
        }
    }
    b[n - 1] /= f.d[n - 1];
    if (n >= 2) b[n - 2] = (b[n - 2] - f.du[n - 2] * b[n - 1]) / f.d[n - 2];
    for (size_t ip = n; ip >= 3; --ip) {
        const size_t i = ip - 3;
        b[i] = (b[i] - f.du[i] * b[i + 1] - f.du2[i] * b[i + 2]) / f.d[i];
    }
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

/// ||T v - lambda v||_2 for unit v.
double pair_residual(const std::vector<double>& diag, const std::vector<double>& off,
                     double lambda, const std::vector<double>& v) {
    const size_t n = diag.size();
    double s = 0.0;
    for (size_t i = 0; i < n; ++i) {
        double r = (diag[i] - lambda) * v[i];
        if (i > 0) r += off[i - 1] * v[i - 1];
        if (i + 1 < n) r += off[i] * v[i + 1];
        s += r * r;
    }
    return std::sqrt(s);
}

std::vector<double> random_unit(size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<double> v(n);
    for (auto& x : v) {
        x = static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5;
    }
    const double nm = norm2(v);
    for (auto& x : v) x /= nm;
    return v;
}

EigenResult eigen_lowest_raw(const std::vector<double>& diag, const std::vector<double>& off,
                             int count, bool want_vectors) {
    const size_t n = diag.size();
    if (n < 1 || off.size() + 1 != n) {
        throw DomainError("eigen_lowest needs diag size n >= 1 and off size n - 1");
    }
    if (count < 1 || static_cast<size_t>(count) > n) {
        throw DomainError("eigen_lowest count out of range");
    }
    const double norm = inf_norm_raw(diag, off);
    const double pivmin = pivot_floor(off);

    double lo = diag[0], hi = diag[0];
    for (size_t i = 0; i < n; ++i) {
        double radius = 0.0;
        if (i > 0) radius += std::abs(off[i - 1]);
        if (i + 1 < n) radius += std::abs(off[i]);
        lo = std::min(lo, diag[i] - radius);
        hi = std::max(hi, diag[i] + radius);
    }
    const double pad = std::max(1e-12 * norm, 2.0 * pivmin);
    lo -= pad;
    hi += pad;

    EigenResult out;
    out.values.resize(static_cast<size_t>(count));
    for (int k = 0; k < count; ++k) {
        out.values[static_cast<size_t>(k)] = bisect_eigenvalue(diag, off, k, lo, hi, pivmin, norm);
    }
    if (!want_vectors) return out;

    const double res_tol = kResRelTol * norm;
    const double cluster_tol = std::max(1e-8 * norm, 16.0 * pivmin);
    out.vectors.resize(static_cast<size_t>(count));
    out.residuals.resize(static_cast<size_t>(count));
    for (int k = 0; k < count; ++k) {
        const double lam = out.values[static_cast<size_t>(k)];
        std::vector<int> cluster;
        for (int j = 0; j < k; ++j) {
            if (std::abs(out.values[static_cast<size_t>(j)] - lam) <= cluster_tol) {
                cluster.push_back(j);
            }
        }
        const ShiftedFactor f = factor_shifted(diag, off, lam, pivmin);
        std::vector<double> v = random_unit(n, 0x5eedu + static_cast<unsigned>(k));
        double best_res = std::numeric_limits<double>::infinity();
        std::vector<double> best_v;
        for (int it = 0; it < 12; ++it) {
            solve_factored(f, v);
            for (int j : cluster) {
                const auto& w = out.vectors[static_cast<size_t>(j)];
                const double c = dot(v, w);
                for (size_t i = 0; i < n; ++i) v[i] -= c * w[i];
            }
            const double nm = norm2(v);
            if (!(nm > 0.0) || !std::isfinite(nm)) {
                v = random_unit(n, 0xabcdu + static_cast<unsigned>(k * 31 + it));
                continue;
            }
            for (auto& x : v) x /= nm;
            const double res = pair_residual(diag, off, lam, v);
            if (res < best_res) {
                best_res = res;
                best_v = v;
            }
            if (res <= 0.05 * res_tol) break;
        }
        if (!(best_res <= res_tol)) {
            throw ConvergenceFailure("inverse iteration residual " + std::to_string(best_res) +
                                         " exceeds " + std::to_string(res_tol),
                                     k);
        }
        // Deterministic sign: largest-magnitude component positive.
        size_t imax = 0;
        for (size_t i = 1; i < n; ++i) {
            if (std::abs(best_v[i]) > std::abs(best_v[imax])) imax = i;
        }
        if (best_v[imax] < 0.0) {
            for (auto& x : best_v) x = -x;
        }
        out.vectors[static_cast<size_t>(k)] = std::move(best_v);
        out.residuals[static_cast<size_t>(k)] = best_res;
    }
    (void)kEvalRelTol;
    return out;
}

}  // namespace

double TridiagonalOperator::inf_norm() const { return inf_norm_raw(diag, off); }

TridiagonalOperator discretize(const std::function<double(double)>& potential,
                               double kinetic_scale, const Grid& grid,
                               std::optional<Centrifugal> centrifugal) {
    if (!std::isfinite(kinetic_scale) || kinetic_scale <= 0.0) {
        throw DomainError("discretize requires kinetic_scale > 0");
    }
    if (grid.tag() != Coordinate::radial) {
        throw GridMismatch("discretize operates on radial grids only");
    }
    const int n = grid.n_points();
    const double h = grid.spacing();
    const double inv_h2 = 1.0 / (h * h);
    // Interior nodes only; homogeneous Dirichlet values at both grid ends.
    TridiagonalOperator T{std::vector<double>(static_cast<size_t>(n - 2)),
                          std::vector<double>(static_cast<size_t>(n - 3), -kinetic_scale * inv_h2),
                          grid};
    double alpha = 0.0;
    if (centrifugal) {
        alpha = static_cast<double>(centrifugal->ell) * static_cast<double>(centrifugal->ell + 1) +
                centrifugal->epsilon;
    }
    for (int i = 1; i <= n - 2; ++i) {
        const double r = grid.point(i);
        double v = potential(r);
        if (centrifugal) v += kinetic_scale * alpha / (r * r);
        if (!std::isfinite(v)) {
            throw DomainError("potential is not finite at r = " + std::to_string(r));
        }
        T.diag[static_cast<size_t>(i - 1)] = 2.0 * kinetic_scale * inv_h2 + v;
    }
    return T;
}

EigenResult eigen_lowest(const TridiagonalOperator& T, int count, bool want_vectors) {
    return eigen_lowest_raw(T.diag, T.off, count, want_vectors);
}

EigenResult eigen_lowest(const std::vector<double>& diag, const std::vector<double>& off,
                         int count, bool want_vectors) {
    return eigen_lowest_raw(diag, off, count, want_vectors);
}

int count_below(const TridiagonalOperator& T, double threshold) {
    return sturm_count(T.diag, T.off, threshold, pivot_floor(T.off));
}

BoundStates bound_states(const std::function<double(double)>& potential, double kinetic_scale,
                         double asymptote, const Grid& grid, int max_count,
                         std::optional<Centrifugal> centrifugal) {
    if (max_count < 0) throw DomainError("bound_states requires max_count >= 0");
    const TridiagonalOperator T = discretize(potential, kinetic_scale, grid, centrifugal);
    const int below = count_below(T, asymptote);
    const int m = std::min(below, max_count);
    BoundStates out;
    if (m == 0) return out;
    const EigenResult eig = eigen_lowest(T, m, true);
    out.energies = eig.values;
    const int n = grid.n_points();
    const double h = grid.spacing();
    for (int k = 0; k < m; ++k) {
        std::vector<std::complex<double>> u(static_cast<size_t>(n), 0.0);
        std::vector<double> u2(static_cast<size_t>(n), 0.0);
        for (int i = 1; i <= n - 2; ++i) {
            const double value = eig.vectors[static_cast<size_t>(k)][static_cast<size_t>(i - 1)];
            u[static_cast<size_t>(i)] = value;
            u2[static_cast<size_t>(i)] = value * value;
        }
        const double nm = std::sqrt(integrate_simpson(u2, h));
        if (!(nm > 0.0)) throw DegenerateData("bound state has zero norm");
        GridFunction rpsi(grid, std::move(u));
        rpsi *= 1.0 / nm;
        fix_phase_first_nonzero(rpsi);
        std::vector<std::complex<double>> psi(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            psi[static_cast<size_t>(i)] = rpsi[i] / grid.point(i);
        }
        out.states.emplace_back(grid, std::move(psi));
    }
    return out;
}

double integrate_simpson(const std::vector<double>& values, double spacing) {
    const size_t n = values.size();
    if (n < 3) throw TooFewSamples("Simpson integration needs at least 3 samples");
    if (!(spacing > 0.0) || !std::isfinite(spacing)) {
        throw DomainError("Simpson integration requires positive spacing");
    }
    const bool odd_count = (n % 2 == 1);
    const size_t last = odd_count ? n - 1 : n - 2;  // last node of the Simpson block
    double s = values[0] + values[last];
    for (size_t i = 1; i < last; ++i) {
        s += values[i] * ((i % 2 == 1) ? 4.0 : 2.0);
    }
    double total = s * spacing / 3.0;
    if (!odd_count) {
        // Even sample count: trapezoid patch on the last interval.
        total += spacing * 0.5 * (values[n - 2] + values[n - 1]);
    }
    return total;
}

std::complex<double> integrate_simpson(const std::vector<std::complex<double>>& values,
                                       double spacing) {
    const size_t n = values.size();
    if (n < 3) throw TooFewSamples("Simpson integration needs at least 3 samples");
    std::vector<double> re(n), im(n);
    for (size_t i = 0; i < n; ++i) {
        re[i] = values[i].real();
        im[i] = values[i].imag();
    }
    return {integrate_simpson(re, spacing), integrate_simpson(im, spacing)};
}

double convergence_order(const std::vector<double>& errors, const std::vector<double>& spacings) {
    if (errors.size() != spacings.size()) {
        throw DomainError("convergence_order needs matching sample counts");
    }
    if (errors.size() < 3) throw TooFewSamples("convergence_order needs at least 3 samples");
    for (size_t i = 2; i < spacings.size(); ++i) {
        const double r1 = spacings[i - 1] / spacings[i - 2];
        const double r2 = spacings[i] / spacings[i - 1];
        // 0.1% slack admits refinement by doubled point counts, where the
        // spacing ratio is (n-1)/(2n-1) rather than exactly 1/2.
        if (!(std::abs(r2 - r1) <= 1e-3 * std::abs(r1))) {
            throw DomainError("convergence_order requires spacings in geometric progression");
        }
    }
    std::vector<double> xs, ys;
    for (size_t i = 0; i < errors.size(); ++i) {
        const double e = errors[i];
        const double h = spacings[i];
        if (!(h > 0.0) || !std::isfinite(h)) {
            throw DomainError("convergence_order requires positive spacings");
        }
        if (!std::isfinite(e) || e <= 0.0 || e < 1e-15) {
            throw DegenerateData("error sample at or below rounding level, order fit unreliable");
        }
        xs.push_back(std::log(h));
        ys.push_back(std::log(e));
    }
    const double n = static_cast<double>(xs.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double denom = n * sxx - sx * sx;
    if (std::abs(denom) < 1e-12) throw DegenerateData("spacings too close for an order fit");
    return (n * sxy - sx * sy) / denom;
}

}  // namespace sga
