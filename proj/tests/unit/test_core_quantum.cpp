#include <doctest.h>

#include <cmath>

#include "gateway/constants.hpp"
#include "gateway/core_quantum.hpp"
#include "gateway/error.hpp"

using namespace gateway;

namespace {

BranchedState at_window(double split = 0.5) {
  BranchedState s = initial_state(split);
  s = advance_stage(s, {Stage::T1, kDefaultT1});
  s = advance_stage(s, {Stage::T2, kDefaultT2});
  return advance_stage(s, {Stage::ExcitationWindow, 1.0});
}

}  // namespace

TEST_CASE("initial state splits the photon evenly") {
  const BranchedState s = initial_state(0.5);
  CHECK(s.stage.tag == Stage::T0);
  CHECK(std::norm(s.w1_amp) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(std::norm(s.w2_amp) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(s.coherence_factor == 1.0);
  CHECK(s.a1_excited_amp == 0.0);
  CHECK_NOTHROW(validate(s));
}

TEST_CASE("initial state rejects a split outside [0,1]") {
  CHECK_THROWS_AS(initial_state(1.5), ValidationError);
  CHECK_THROWS_AS(initial_state(-0.1), ValidationError);
  CHECK_THROWS_AS(initial_state(std::nan("")), ValidationError);
}

TEST_CASE("stages advance only to their successor and forward in time") {
  BranchedState s = initial_state(0.5);
  CHECK_THROWS_AS(advance_stage(s, {Stage::T2, 1.0}), ValidationError);
  CHECK_THROWS_AS(advance_stage(s, {Stage::T1, 0.0}), ValidationError);
  s = advance_stage(s, {Stage::T1, 1e-6});
  s = advance_stage(s, {Stage::T2, 2e-6});
  SUBCASE("an empty excitation window may coincide with t2") {
    CHECK_NOTHROW(advance_stage(s, {Stage::ExcitationWindow, 2e-6}));
  }
  SUBCASE("T3 is final") {
    s = advance_stage(s, {Stage::ExcitationWindow, 1.0});
    s = advance_stage(s, {Stage::T3, 2.0});
    CHECK_THROWS_AS(advance_stage(s, {Stage::T3, 3.0}), ValidationError);
  }
}

TEST_CASE("relative density matrix is defined from T2 on") {
  BranchedState s = initial_state(0.5);
  CHECK_THROWS_AS(relative_density_matrix(s), ValidationError);
  s = advance_stage(s, {Stage::T1, 1e-6});
  s = advance_stage(s, {Stage::T2, 2e-6});
  const auto rho = relative_density_matrix(s);
  CHECK(rho.trace().real() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rho.is_hermitian());
  CHECK(rho.is_positive());
  CHECK(std::abs(rho.rho12) == doctest::Approx(0.5));
  CHECK(rho.rho12.imag() == 0.0);
}

TEST_CASE("damping shrinks only the off-diagonal element") {
  BranchedState s = at_window(0.3);
  s = damp_coherence(s, 0.25);
  const auto rho = relative_density_matrix(s);
  CHECK(rho.rho11.real() == doctest::Approx(0.3));
  CHECK(rho.rho22.real() == doctest::Approx(0.7));
  CHECK(std::abs(rho.rho12) == doctest::Approx(0.25 * std::sqrt(0.21)));
  CHECK(rho.is_positive());
  CHECK_THROWS_AS(damp_coherence(s, 1.1), ValidationError);
}

TEST_CASE("excitation only inside the window") {
  BranchedState s = initial_state(0.5);
  CHECK_THROWS_AS(apply_excitation(s, Branch::One, 1.0, 0.5), ValidationError);
  BranchedState w = at_window();
  CHECK_THROWS_AS(apply_excitation(w, Branch::One, 1.2, 0.5), ValidationError);
  const BranchedState e = apply_excitation(w, Branch::One, 1.0, 0.25);
  CHECK(std::norm(e.a1_excited_amp) == doctest::Approx(1.0));
  CHECK(std::norm(e.a2_excited_amp) == doctest::Approx(0.25));
  CHECK(e.photons_absorbed_1 == doctest::Approx(1.25));
  CHECK(e.photons_absorbed_2 == 0.0);
}

TEST_CASE("validate catches corrupted states") {
  BranchedState s = initial_state(0.5);
  s.w1_amp = 2.0;
  CHECK_THROWS_AS(validate(s), ValidationError);
  s = initial_state(0.5);
  s.a1_excited_amp = 0.1;
  CHECK_THROWS_AS(validate(s), ValidationError);
  s = initial_state(0.5);
  s.coherence_factor = -0.5;
  CHECK_THROWS_AS(validate(s), ValidationError);
}

TEST_CASE("energy ledger balances and needs T3") {
  BranchedState s = at_window(0.5);
  CHECK_THROWS_AS(energy_ledger(s, kHg199HyperfineOmega), ValidationError);
  s = apply_excitation(s, Branch::Two, 0.9, 0.4);
  s = advance_stage(s, {Stage::T3, 3.0});
  const EnergyLedger ledger = energy_ledger(s, kHg199HyperfineOmega);
  CHECK(ledger.branch1_field_energy_change == 0.0);
  CHECK(ledger.branch2_field_energy_change < 0.0);
  CHECK(ledger.balanced());
  CHECK(ledger.energy_scale == doctest::Approx(kCodata2018.hbar * kHg199HyperfineOmega));
}

TEST_CASE("branch helpers") {
  CHECK(other(Branch::One) == Branch::Two);
  CHECK(other(Branch::Two) == Branch::One);
  CHECK(to_string(Branch::One) == "branch1");
  CHECK(to_string(Stage::ExcitationWindow) == "ExcitationWindow");
}
