#include "sga/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace sga {

Grid::Grid(double x_min, double x_max, int n_points, Coordinate tag)
    : x_min_(x_min), x_max_(x_max), n_(n_points), tag_(tag) {
    if (!std::isfinite(x_min) || !std::isfinite(x_max)) {
        throw DomainError("grid endpoints must be finite");
    }
    if (x_min >= x_max) {
        throw DomainError("grid requires x_min < x_max");
    }
    if (n_points < 8) {
        throw DomainError("grid requires at least 8 points, got " + std::to_string(n_points));
    }
    if (tag == Coordinate::radial && x_min <= 0.0) {
        throw DomainError("radial grid requires x_min > 0");
    }
    spacing_ = (x_max - x_min) / static_cast<double>(n_points - 1);
}

std::vector<double> Grid::points() const {
    std::vector<double> out(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) out[static_cast<size_t>(i)] = point(i);
    return out;
}

GridFunction::GridFunction(Grid grid, std::vector<std::complex<double>> values, int boundary_taint)
    : grid_(grid), values_(std::move(values)), taint_(boundary_taint) {
    if (static_cast<int>(values_.size()) != grid_.n_points()) {
        throw GridMismatch("value count " + std::to_string(values_.size()) +
                           " does not match grid size " + std::to_string(grid_.n_points()));
    }
}

GridFunction GridFunction::sample(const Grid& grid,
                                  const std::function<std::complex<double>(double)>& f) {
    std::vector<std::complex<double>> v(static_cast<size_t>(grid.n_points()));
    for (int i = 0; i < grid.n_points(); ++i) v[static_cast<size_t>(i)] = f(grid.point(i));
    return GridFunction(grid, std::move(v));
}

GridFunction GridFunction::zeros(const Grid& grid) {
    return GridFunction(grid,
                        std::vector<std::complex<double>>(static_cast<size_t>(grid.n_points())));
}

double GridFunction::norm() const {
    double s = 0.0;
    for (const auto& v : values_) s += std::norm(v);
    return std::sqrt(s);
}

double GridFunction::interior_norm(int exclude) const {
    const int n = size();
    if (exclude < 0 || 2 * exclude >= n) {
        throw DomainError("interior_norm exclusion swallows the whole grid");
    }
    double s = 0.0;
    for (int i = exclude; i < n - exclude; ++i) s += std::norm(values_[static_cast<size_t>(i)]);
    return std::sqrt(s);
}

double GridFunction::max_abs() const {
    double m = 0.0;
    for (const auto& v : values_) m = std::max(m, std::abs(v));
    return m;
}

double GridFunction::imag_fraction() const {
    double si = 0.0, sa = 0.0;
    for (const auto& v : values_) {
        si += v.imag() * v.imag();
        sa += std::norm(v);
    }
    if (sa == 0.0) return 0.0;
    return std::sqrt(si / sa);
}

GridFunction& GridFunction::operator+=(const GridFunction& rhs) {
    require_same_grid(*this, rhs, "operator+=");
    for (size_t i = 0; i < values_.size(); ++i) values_[i] += rhs.values_[i];
    taint_ = std::max(taint_, rhs.taint_);
    return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& rhs) {
    require_same_grid(*this, rhs, "operator-=");
    for (size_t i = 0; i < values_.size(); ++i) values_[i] -= rhs.values_[i];
    taint_ = std::max(taint_, rhs.taint_);
    return *this;
}

GridFunction& GridFunction::operator*=(std::complex<double> c) {
    for (auto& v : values_) v *= c;
    return *this;
}

GridFunction operator+(GridFunction lhs, const GridFunction& rhs) {
    lhs += rhs;
    return lhs;
}

GridFunction operator-(GridFunction lhs, const GridFunction& rhs) {
    lhs -= rhs;
    return lhs;
}

GridFunction operator*(std::complex<double> c, GridFunction f) {
    f *= c;
    return f;
}

void require_same_grid(const GridFunction& a, const GridFunction& b, const char* where) {
    if (a.grid() != b.grid()) {
        throw GridMismatch(std::string(where) + ": operands live on different grids");
    }
}

void fix_phase_first_nonzero(GridFunction& f) {
    const double cutoff = 1e-12 * f.max_abs();
    for (int i = 0; i < f.size(); ++i) {
        const std::complex<double> v = f[i];
        if (std::abs(v) > cutoff) {
            const std::complex<double> phase = std::abs(v) / v;
            f *= phase;
            return;
        }
    }
}

}  // namespace sga
