#include "fuzzmech/grid.hpp"

#include <cmath>

#include "fuzzmech/kernels.hpp"

namespace fuzzmech {

UniformGrid::UniformGrid(int dim, std::array<int, 3> n, std::array<double, 3> length,
                         std::array<bool, 3> periodic, std::array<double, 3> origin)
    : dim_(dim), n_(n), length_(length), origin_(origin), periodic_(periodic) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("grid dim must be 1..3");
  size_ = 1;
  for (int a = 0; a < 3; ++a) {
    if (a >= dim) {
      n_[a] = 1;
      length_[a] = 1.0;
      origin_[a] = 0.0;
      periodic_[a] = false;
      continue;
    }
    if (n_[a] < 8) throw std::invalid_argument("grid needs n >= 8 per axis");
    if (!(length_[a] > 0.0)) throw std::invalid_argument("grid length must be positive");
    size_ *= static_cast<std::size_t>(n_[a]);
  }
  if (size_ > (std::size_t{1} << 28)) throw std::invalid_argument("grid too large");
}

UniformGrid UniformGrid::line(int n, double length, bool periodic) {
  return UniformGrid(1, {n, 1, 1}, {length, 1, 1}, {periodic, false, false},
                     {-length / 2, 0, 0});
}

UniformGrid UniformGrid::square(int n, double length, bool periodic) {
  return UniformGrid(2, {n, n, 1}, {length, length, 1}, {periodic, periodic, false},
                     {-length / 2, -length / 2, 0});
}

UniformGrid UniformGrid::cube(int n, double length, bool periodic) {
  return UniformGrid(3, {n, n, n}, {length, length, length}, {periodic, periodic, periodic},
                     {-length / 2, -length / 2, -length / 2});
}

bool UniformGrid::all_periodic() const {
  for (int a = 0; a < dim_; ++a)
    if (!periodic_[a]) return false;
  return true;
}

double UniformGrid::cell_volume() const {
  double v = 1.0;
  for (int a = 0; a < dim_; ++a) v *= spacing(a);
  return v;
}

std::size_t UniformGrid::index(std::array<int, 3> idx) const {
  std::size_t lin = 0;
  for (int a = 0; a < dim_; ++a) lin = lin * n_[a] + static_cast<std::size_t>(idx[a]);
  return lin;
}

std::array<int, 3> UniformGrid::unravel(std::size_t linear) const {
  std::array<int, 3> idx{0, 0, 0};
  for (int a = dim_ - 1; a >= 0; --a) {
    idx[a] = static_cast<int>(linear % n_[a]);
    linear /= n_[a];
  }
  return idx;
}

UniformGrid UniformGrid::momentum_dual() const {
  if (!all_periodic()) throw std::invalid_argument("momentum dual needs periodic grid");
  std::array<double, 3> len{1, 1, 1}, org{0, 0, 0};
  for (int a = 0; a < dim_; ++a) {
    const double dp = 2.0 * M_PI / length_[a];
    len[a] = dp * n_[a];
    org[a] = -M_PI * n_[a] / length_[a];
  }
  return UniformGrid(dim_, n_, len, periodic_, org);
}

bool UniformGrid::same_shape(const UniformGrid& other) const {
  if (dim_ != other.dim_) return false;
  for (int a = 0; a < dim_; ++a)
    if (n_[a] != other.n_[a]) return false;
  return true;
}

bool all_finite(const RealField& f) {
  for (double v : f.values())
    if (!std::isfinite(v)) return false;
  return true;
}

bool all_finite(const ComplexField& f) {
  for (const Complex& v : f.values())
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

RealField abs2_field(const ComplexField& eta) {
  RealField w(eta.grid());
  kernels::ops().abs2(eta.data(), w.data(), eta.size());
  return w;
}

double max_abs(const RealField& f) {
  double m = 0.0;
  for (double v : f.values()) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace fuzzmech
