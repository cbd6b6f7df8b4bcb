#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "sga/errors.hpp"

namespace sga {

/// Which coordinate a grid discretizes: the physical radial coordinate r
/// (a length, strictly positive) or the dimensionless oscillator variable y = r/a.
enum class Coordinate { radial, scaled };

/// Uniform one-dimensional grid, x_i = x_min + i*spacing, i = 0..n_points-1.
class Grid {
public:
    Grid(double x_min, double x_max, int n_points, Coordinate tag);

    double x_min() const { return x_min_; }
    double x_max() const { return x_max_; }
    int n_points() const { return n_; }
    Coordinate tag() const { return tag_; }
    double spacing() const { return spacing_; }
    double point(int i) const { return x_min_ + spacing_ * static_cast<double>(i); }
    std::vector<double> points() const;

    bool operator==(const Grid& other) const {
        return x_min_ == other.x_min_ && x_max_ == other.x_max_ && n_ == other.n_ &&
               tag_ == other.tag_;
    }
    bool operator!=(const Grid& other) const { return !(*this == other); }

private:
    double x_min_, x_max_, spacing_;
    int n_;
    Coordinate tag_;
};

/// Complex-valued samples on a Grid.
///
/// boundary_taint counts cells per end whose values came from one-sided
/// stencils (directly or through composition); interior norms exclude them.
class GridFunction {
public:
    GridFunction(Grid grid, std::vector<std::complex<double>> values, int boundary_taint = 0);

    static GridFunction sample(const Grid& grid,
                               const std::function<std::complex<double>(double)>& f);
    static GridFunction zeros(const Grid& grid);

    const Grid& grid() const { return grid_; }
    const std::vector<std::complex<double>>& values() const { return values_; }
    std::vector<std::complex<double>>& values() { return values_; }
    std::complex<double> operator[](int i) const { return values_[static_cast<size_t>(i)]; }
    std::complex<double>& operator[](int i) { return values_[static_cast<size_t>(i)]; }
    int size() const { return static_cast<int>(values_.size()); }

    int boundary_taint() const { return taint_; }
    void set_boundary_taint(int cells) { taint_ = cells; }

    /// Plain Euclidean norm of the sample vector.
    double norm() const;
    /// Euclidean norm excluding `exclude` cells at each end.
    double interior_norm(int exclude) const;
    double max_abs() const;
    /// ||Im f|| / ||f||; 0 for an identically real function.
    double imag_fraction() const;

    GridFunction& operator+=(const GridFunction& rhs);
    GridFunction& operator-=(const GridFunction& rhs);
    GridFunction& operator*=(std::complex<double> c);

private:
    Grid grid_;
    std::vector<std::complex<double>> values_;
    int taint_ = 0;
};

GridFunction operator+(GridFunction lhs, const GridFunction& rhs);
GridFunction operator-(GridFunction lhs, const GridFunction& rhs);
GridFunction operator*(std::complex<double> c, GridFunction f);

/// Throws GridMismatch unless both functions share a grid.
void require_same_grid(const GridFunction& a, const GridFunction& b, const char* where);

/// Rescales f by a unit phase (a sign, for real data) so its first sample with
/// |value| > 1e-12 * max|f| is real and positive.
void fix_phase_first_nonzero(GridFunction& f);

}  // namespace sga
