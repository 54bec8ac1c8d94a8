#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "gateway/constants.hpp"
#include "gateway/protocol.hpp"
#include "gateway/random.hpp"

namespace testgen {

/// A valid scenario drawn over several decades of every input.
inline gateway::ProtocolScenario random_scenario(std::uint64_t index, std::uint64_t base = 4242) {
  using namespace gateway;
  Rng rng = make_rng(base, index);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto decades = [&](double lo, double hi) { return std::pow(10.0, lo + (hi - lo) * u(rng)); };
  auto pick = [&](int n) { return static_cast<int>(std::floor(u(rng) * n)) % n; };

  ProtocolScenario s;
  s.trap.temperature = 1.0 + 999.0 * u(rng);
  s.trap.pressure = pick(8) == 0 ? 0.0 : decades(-12.0, -5.0);
  s.trap.gas_molecule_mass = (2.0 + 38.0 * u(rng)) * units::kAtomicMassUnit;
  s.trap.elastic_cross_section_sigma_c = decades(-20.0, -17.0);
  s.trap.photon_cross_section = pick(8) == 0 ? 0.0 : decades(-41.0, -38.0);
  s.trap.confining_field_E_c = 2000.0 * u(rng);
  s.trap.field_variability_fraction_f_v = pick(6) == 0 ? 1.0 : decades(-12.0, 0.0);
  s.trap.field_variability_frequency = decades(-1.0, 3.0);
  s.trap.trap_extension_d = decades(-7.0, -5.0);
  s.trap.ion_mass = (1.0 + 3.0 * u(rng)) * 1e-25;

  s.stage_times.t0 = 1e-6 * u(rng);
  s.stage_times.t1 = s.stage_times.t0 + decades(-7.0, -5.0);
  s.stage_times.t2 = s.stage_times.t1 + decades(-7.0, -5.0);

  const double dipole = kBohrMagnetonDipole * (0.5 + u(rng));
  const double omega = decades(9.0, 11.0);
  const double t_p = decades(-3.0, 0.5);
  std::optional<PulseSpec> pulse;
  const Branch branch = pick(2) == 0 ? Branch::One : Branch::Two;
  switch (pick(4)) {
    case 0: break;
    case 1: pulse = make_pi_pulse(t_p, dipole, omega, branch); break;
    case 2: pulse = make_mwi_pulse(t_p, dipole, omega, branch); break;
    default:
      pulse = make_custom_pulse(t_p, pi_pulse_field(t_p, dipole) * 2.0 * u(rng), dipole, omega,
                                branch);
  }
  if (pulse) (branch == Branch::One ? s.pulse_policy.on_branch1 : s.pulse_policy.on_branch2) = pulse;
  s.wait_before_readout = (pulse ? pulse->duration : 0.0) + decades(-3.0, 1.0);

  s.n_trials = 1 + static_cast<std::uint64_t>(u(rng) * 500.0);
  s.seed = rng();
  s.model = pick(2) == 0 ? ExcitationModel::Feedback : ExcitationModel::OneAndOnlyOne;
  s.photon_split = pick(10) == 0 ? static_cast<double>(pick(2)) : u(rng);
  s.hyperfine_frequency = decades(9.0, 11.0);
  return s;
}

}  // namespace testgen
