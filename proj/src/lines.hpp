#pragma once

#include <cstddef>

#include "fuzzmech/grid.hpp"

namespace fuzzmech::lines {

// Iterates every 1-D line of the grid along `axis`, gathering into a
// contiguous scratch buffer and scattering back after `fn(scratch, n)` ran.
template <class T, class F>
void for_each_line(const UniformGrid& g, T* data, int axis, F&& fn) {
  const int n = g.n(axis);
  std::size_t stride = 1;
  for (int a = g.dim() - 1; a > axis; --a) stride *= static_cast<std::size_t>(g.n(a));
  const std::size_t block = stride * static_cast<std::size_t>(n);
  const std::size_t nblocks = g.size() / block;

  std::vector<T> scratch(static_cast<std::size_t>(n));
  for (std::size_t b = 0; b < nblocks; ++b) {
    for (std::size_t s = 0; s < stride; ++s) {
      T* base = data + b * block + s;
      for (int i = 0; i < n; ++i) scratch[static_cast<std::size_t>(i)] = base[i * stride];
      fn(scratch.data(), n);
      for (int i = 0; i < n; ++i) base[i * stride] = scratch[static_cast<std::size_t>(i)];
    }
  }
}

}  // namespace fuzzmech::lines
