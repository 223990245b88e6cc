#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "heisenkep/dynamics/flow.hpp"
#include "heisenkep/model/system.hpp"

namespace heisenkep::fixtures {

// Kepler, kappa = 1.  Bounded away from rho = 0 on [0, 100]; H < 0.
inline PhaseState bound_state() {
  PhaseState s(6);
  s << 2.29, -0.21, 0.40, 0.09, 0.26, 0.11;
  return s;
}

// Rescales the momenta so that H = 0 for an attractive Kepler potential.
inline PhaseState zero_energy_state(const SystemSpec& spec, PhaseState s) {
  const double t = kinetic_energy(spec, s), v = potential_energy(spec, s);
  s.tail(spec.dof()) *= std::sqrt(-v / t);
  return s;
}

// z = 0, p_z = 0, p parallel to q.
inline PhaseState straight_line_state() {
  PhaseState s(6);
  s << 0.8, 0.6, 0, 1.6, 1.2, 0;
  return s;
}

// Two bodies around (-2, 0, 0) and (2, 0, 0) with random momenta.
inline PhaseState random_two_body_state(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1, 1);
  PhaseState s(12);
  for (int i = 0; i < 12; ++i) s(i) = (i < 6 ? 0.2 : 0.5) * u(rng);
  s(0) -= 2;
  s(3) += 2;
  return s;
}

// Draws from random_two_body_state(seed) and keeps the first `count` draws whose
// trajectory on [0, t_end] ends without an event.  Collisions are frequent.
inline std::vector<PhaseState> collision_free_two_body_states(const SystemSpec& spec, std::uint64_t seed,
                                                              int count, const IntegratorConfig& cfg) {
  std::mt19937_64 rng(seed);
  std::vector<PhaseState> out;
  for (int draws = 0; draws < 50 * count && static_cast<int>(out.size()) < count; ++draws) {
    PhaseState s = random_two_body_state(rng);
    if (integrate(spec, s, cfg).ok()) out.push_back(s);
  }
  return out;
}

}  // namespace heisenkep::fixtures
