#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "fuzzmech/grid.hpp"

namespace fuzzmech {

// One term -coeff * d^order/dx^order of the free evolution operator.
// Orders are even and >= 2; the derived physical value is a single
// order-2 term with coeff 1/(2 mu).
struct KineticTerm {
  int order;
  double coeff;
};

using PotentialFn = std::function<double(const std::array<double, 3>&, double)>;

class Hamiltonian {
 public:
  // Derived Schrodinger form: only b_2 = 1/(2 mu).
  Hamiltonian(double mu, RealField potential);
  Hamiltonian(double mu, RealField potential, std::vector<KineticTerm> terms);

  double mu() const { return mu_; }
  const std::vector<KineticTerm>& terms() const { return terms_; }
  const UniformGrid& grid() const { return potential_.grid(); }

  bool time_dependent() const { return static_cast<bool>(potential_fn_); }
  const RealField& static_potential() const { return potential_; }
  RealField potential_at(double t) const;

  // Attaches U(x, t); the stored field becomes the t = 0 sample.
  void set_time_dependent_potential(PotentialFn fn);

  // Symbol of the kinetic part evaluated at |k|^2.
  double kinetic_symbol(double k2) const;

  bool single_b2_term() const;

 private:
  double mu_;
  RealField potential_;
  std::vector<KineticTerm> terms_;
  PotentialFn potential_fn_;
};

// H eta: spectral kinetic part on periodic grids, finite differences
// otherwise, plus U(t) eta.
ComplexField apply_hamiltonian(const Hamiltonian& H, const ComplexField& eta, double t = 0.0);

// Re <eta|H eta> for a normalized eta.
double energy_expectation(const Hamiltonian& H, const ComplexField& eta, double t = 0.0);

}  // namespace fuzzmech
