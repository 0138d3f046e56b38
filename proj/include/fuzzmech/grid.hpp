#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fuzzmech {

using Complex = std::complex<double>;

// Uniform sampling of a D-dimensional box (D = 1..3), spacing h = length/n
// per axis. Row-major linearization, axis 0 slowest. Coordinates start at
// `origin` (default: box centered on 0).
class UniformGrid {
 public:
  UniformGrid(int dim, std::array<int, 3> n, std::array<double, 3> length,
              std::array<bool, 3> periodic, std::array<double, 3> origin);

  static UniformGrid line(int n, double length, bool periodic = true);
  static UniformGrid square(int n, double length, bool periodic = true);
  static UniformGrid cube(int n, double length, bool periodic = true);

  int dim() const { return dim_; }
  int n(int axis) const { return n_[axis]; }
  double length(int axis) const { return length_[axis]; }
  double origin(int axis) const { return origin_[axis]; }
  bool periodic(int axis) const { return periodic_[axis]; }
  bool all_periodic() const;

  double spacing(int axis) const { return length_[axis] / n_[axis]; }
  double cell_volume() const;
  std::size_t size() const { return size_; }

  double coord(int axis, int index) const { return origin_[axis] + spacing(axis) * index; }

  std::size_t index(std::array<int, 3> idx) const;
  std::array<int, 3> unravel(std::size_t linear) const;

  // Momentum-space dual: n points, spacing 2*pi/length, ascending from
  // -pi*n/length. Requires a periodic axis set.
  UniformGrid momentum_dual() const;

  bool same_shape(const UniformGrid& other) const;

 private:
  int dim_;
  std::array<int, 3> n_;
  std::array<double, 3> length_;
  std::array<double, 3> origin_;
  std::array<bool, 3> periodic_;
  std::size_t size_;
};

template <class T>
class Field {
 public:
  explicit Field(UniformGrid grid, T fill = T{})
      : grid_(std::move(grid)), values_(grid_.size(), fill) {}
  Field(UniformGrid grid, std::vector<T> values) : grid_(std::move(grid)), values_(std::move(values)) {
    if (values_.size() != grid_.size()) throw std::invalid_argument("field size mismatch");
  }

  const UniformGrid& grid() const { return grid_; }
  const std::vector<T>& values() const { return values_; }
  std::vector<T>& values() { return values_; }
  T operator[](std::size_t i) const { return values_[i]; }
  T& operator[](std::size_t i) { return values_[i]; }
  std::size_t size() const { return values_.size(); }
  const T* data() const { return values_.data(); }
  T* data() { return values_.data(); }

  // Applies f(x0[,x1[,x2]]) at every grid point.
  template <class F>
  static Field sampled(const UniformGrid& g, F&& f) {
    Field out(g);
    const int d = g.dim();
    std::size_t lin = 0;
    std::array<int, 3> idx{0, 0, 0};
    for (int i0 = 0; i0 < g.n(0); ++i0) {
      idx[0] = i0;
      for (int i1 = 0; i1 < (d > 1 ? g.n(1) : 1); ++i1) {
        idx[1] = i1;
        for (int i2 = 0; i2 < (d > 2 ? g.n(2) : 1); ++i2, ++lin) {
          idx[2] = i2;
          std::array<double, 3> x{g.coord(0, i0), d > 1 ? g.coord(1, i1) : 0.0,
                                  d > 2 ? g.coord(2, i2) : 0.0};
          out[lin] = f(x);
        }
      }
    }
    return out;
  }

 private:
  UniformGrid grid_;
  std::vector<T> values_;
};

using RealField = Field<double>;
using ComplexField = Field<Complex>;

bool all_finite(const RealField& f);
bool all_finite(const ComplexField& f);

// |eta|^2 as a real field on the same grid.
RealField abs2_field(const ComplexField& eta);

double max_abs(const RealField& f);

}  // namespace fuzzmech
