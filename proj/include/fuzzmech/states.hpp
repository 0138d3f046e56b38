#pragma once

#include <array>
#include <vector>

#include "fuzzmech/grid.hpp"

namespace fuzzmech {

// Support threshold: values of w below kSupportFloorRel * max(w) count as
// zero density; phase and velocity are undefined (stored as 0) there.
inline constexpr double kSupportFloorRel = 1e-14;

std::vector<bool> support_mask(const RealField& w, double rel_floor = kSupportFloorRel);

// {w, v}: density plus one flow-velocity component per axis.
struct ObservationalState {
  RealField w;
  std::vector<RealField> v;
};

// {w, gamma}: density plus phase; c_gamma records the free additive
// constant already contained in gamma.
struct PhaseState {
  RealField w;
  RealField gamma;
  double c_gamma = 0.0;
};

// eta = sqrt(w) exp(i gamma), a unit ray; mu is the mass parameter.
struct WaveState {
  ComplexField eta;
  double mu = 1.0;
};

// Momentum image {w_p, beta} on the dual grid (ascending p).
struct MomentumState {
  RealField w_p;
  RealField beta;
};

// gamma(x) = mu * cumulative integral of v from the support edge + c_gamma.
// Throws on disjoint support (use the multicomponent construction) and when
// closed-loop consistency fails beyond tolerance (winding present).
PhaseState phase_from_velocity(const ObservationalState& s, double mu, double c_gamma);

WaveState wave_from_phase(const PhaseState& s, double mu);
PhaseState wave_to_phase(const WaveState& s);

// w = |eta|^2 and v = Im(eta* grad eta)/(mu w), masked off support.
ObservationalState observational_from_wave(const WaveState& s);

MomentumState momentum_state(const WaveState& s);

struct MeanMomentum {
  std::array<double, 3> spectral{};    // first moment of w_p
  std::array<double, 3> gamma_flow{};  // integral of w grad(gamma), FD route
};

// The two momentum routes; agreement is the discrete form of the
// v = grad(gamma)/mu identity.
MeanMomentum mean_momentum_two_paths(const WaveState& s);

WaveState normalized(WaveState s);

}  // namespace fuzzmech
