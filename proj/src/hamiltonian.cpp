#include "fuzzmech/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>

#include "fuzzmech/calculus.hpp"
#include "fuzzmech/fft.hpp"
#include "fuzzmech/kernels.hpp"
#include "lines.hpp"

namespace fuzzmech {

Hamiltonian::Hamiltonian(double mu, RealField potential)
    : Hamiltonian(mu, std::move(potential), {{2, 1.0 / (2.0 * mu)}}) {}

Hamiltonian::Hamiltonian(double mu, RealField potential, std::vector<KineticTerm> terms)
    : mu_(mu), potential_(std::move(potential)), terms_(std::move(terms)) {
  if (!(mu_ > 0.0)) throw std::invalid_argument("mu must be positive");
  if (!all_finite(potential_)) throw std::invalid_argument("potential must be finite");
  if (terms_.empty()) throw std::invalid_argument("kinetic part needs at least one term");
  for (const KineticTerm& t : terms_)
    if (t.order < 2 || t.order % 2 != 0)
      throw std::invalid_argument("kinetic orders must be even and >= 2");
}

RealField Hamiltonian::potential_at(double t) const {
  if (!potential_fn_) return potential_;
  const PotentialFn& fn = potential_fn_;
  return RealField::sampled(potential_.grid(),
                            [&](const std::array<double, 3>& x) { return fn(x, t); });
}

void Hamiltonian::set_time_dependent_potential(PotentialFn fn) {
  potential_fn_ = std::move(fn);
  potential_ = potential_at(0.0);
}

double Hamiltonian::kinetic_symbol(double k2) const {
  double s = 0.0;
  for (const KineticTerm& t : terms_) {
    const int l = t.order / 2;
    s += t.coeff * (l % 2 == 0 ? -1.0 : 1.0) * std::pow(k2, l);
  }
  return s;
}

bool Hamiltonian::single_b2_term() const { return terms_.size() == 1 && terms_[0].order == 2; }

namespace {

ComplexField kinetic_apply_spectral(const Hamiltonian& H, const ComplexField& eta) {
  const UniformGrid& g = eta.grid();
  ComplexField out = eta;
  for (int a = 0; a < g.dim(); ++a) fftdetail::dft_axis(g, out.data(), a, FFTW_FORWARD);

  std::array<std::vector<double>, 3> k;
  for (int a = 0; a < g.dim(); ++a) k[a] = fftdetail::wavenumbers(g, a);
  const double invn = 1.0 / static_cast<double>(g.size());

  std::size_t lin = 0;
  const int d = g.dim();
  for (int i0 = 0; i0 < g.n(0); ++i0)
    for (int i1 = 0; i1 < (d > 1 ? g.n(1) : 1); ++i1)
      for (int i2 = 0; i2 < (d > 2 ? g.n(2) : 1); ++i2, ++lin) {
        double k2 = k[0][static_cast<std::size_t>(i0)] * k[0][static_cast<std::size_t>(i0)];
        if (d > 1) k2 += k[1][static_cast<std::size_t>(i1)] * k[1][static_cast<std::size_t>(i1)];
        if (d > 2) k2 += k[2][static_cast<std::size_t>(i2)] * k[2][static_cast<std::size_t>(i2)];
        out[lin] *= H.kinetic_symbol(k2) * invn;
      }
  for (int a = 0; a < g.dim(); ++a) fftdetail::dft_axis(g, out.data(), a, FFTW_BACKWARD);
  return out;
}

ComplexField kinetic_apply_fd(const Hamiltonian& H, const ComplexField& eta) {
  ComplexField out(eta.grid());
  for (const KineticTerm& t : H.terms()) {
    ComplexField power = eta;
    for (int l = 0; l < t.order / 2; ++l) power = laplacian(power);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= t.coeff * power[i];
  }
  return out;
}

}  // namespace

ComplexField apply_hamiltonian(const Hamiltonian& H, const ComplexField& eta, double t) {
  if (!H.grid().same_shape(eta.grid())) throw std::invalid_argument("grid shape mismatch");
  ComplexField out =
      eta.grid().all_periodic() ? kinetic_apply_spectral(H, eta) : kinetic_apply_fd(H, eta);
  const RealField U = H.potential_at(t);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += U[i] * eta[i];
  return out;
}

double energy_expectation(const Hamiltonian& H, const ComplexField& eta, double t) {
  const ComplexField He = apply_hamiltonian(H, eta, t);
  return inner_product(eta, He).real();
}

}  // namespace fuzzmech
