#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "gateway/constants.hpp"
#include "gateway/decoherence.hpp"
#include "gateway/scenario.hpp"
#include "random_scenarios.hpp"

using namespace gateway;

namespace {

const std::filesystem::path kReference =
    std::filesystem::path(GATEWAY_SOURCE_DIR) / "scenarios" / "reference.toml";

std::string reference_text() {
  std::ifstream in(kReference);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string replace(std::string text, const std::string& from, const std::string& to) {
  const auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  return text.replace(pos, from.size(), to);
}

ScenarioError error_of(const std::string& text) {
  try {
    parse_scenario_text(text, "test.toml");
  } catch (const ScenarioError& e) {
    return e;
  }
  FAIL("scenario was accepted");
  throw;
}

}  // namespace

TEST_CASE("bundled example parses to the reference configuration") {
  const ScenarioFile file = load_scenario_file(kReference);
  CHECK(file.schema_version == kScenarioSchemaVersion);
  CHECK(file.path == kReference);
  CHECK(file.parsed.trap == reference_trap_config());
  CHECK(file.parsed == reference_scenario());
}

TEST_CASE("pressure given in V/m is a unit mismatch naming the key") {
  const auto e = error_of(replace(reference_text(), "pressure_torr", "pressure_v_per_m"));
  CHECK(e.kind() == ScenarioErrorKind::UnitMismatch);
  CHECK(e.key() == "pressure_v_per_m");
  CHECK(e.line() == 7);
  CHECK(std::string(e.what()).find("test.toml:7") != std::string::npos);
}

TEST_CASE("unknown keys and tables are rejected") {
  auto e = error_of(replace(reference_text(), "temperature_k = 300", "temperature_k = 300\ncolour = 3"));
  CHECK(e.kind() == ScenarioErrorKind::UnknownKey);
  CHECK(e.key() == "colour");
  CHECK(e.line() == 7);
  e = error_of(reference_text() + "\n[extras]\nx = 1\n");
  CHECK(e.kind() == ScenarioErrorKind::UnknownKey);
  CHECK(e.key() == "extras");
}

TEST_CASE("quantities without a unit suffix are rejected") {
  const auto e = error_of(replace(reference_text(), "temperature_k", "temperature"));
  CHECK(e.kind() == ScenarioErrorKind::UnitMismatch);
  CHECK(e.key() == "temperature");
}

TEST_CASE("missing required key") {
  const auto e = error_of(replace(reference_text(), "ion_mass_kg = 3.3e-25\n", ""));
  CHECK(e.kind() == ScenarioErrorKind::MissingKey);
  CHECK(e.key() == "trap.ion_mass");
}

TEST_CASE("syntax error carries its line") {
  const auto e = error_of(replace(reference_text(), "[timeline]", "[timeline"));
  CHECK(e.kind() == ScenarioErrorKind::Syntax);
  CHECK(e.line() == 17);
}

TEST_CASE("invariant violations") {
  auto e = error_of(replace(reference_text(), "temperature_k = 300", "temperature_k = -3"));
  CHECK(e.kind() == ScenarioErrorKind::InvariantViolation);
  CHECK(e.key() == "temperature_k");
  e = error_of(replace(reference_text(), "wait_before_readout_s = 2", "wait_before_readout_s = 1"));
  CHECK(e.kind() == ScenarioErrorKind::InvariantViolation);
  e = error_of(replace(reference_text(), "schema_version = 1", "schema_version = 2"));
  CHECK(e.kind() == ScenarioErrorKind::InvariantViolation);
  CHECK(e.key() == "schema_version");
  e = error_of(reference_text() + "\n[pulse.branch2]\nkind = \"pi\"\npi_duration_s = 1\n"
                                  "dipole_c_m = 3e-32\ncarrier_frequency_per_s = 4e10\n");
  CHECK(e.kind() == ScenarioErrorKind::InvariantViolation);
}

TEST_CASE("missing file") {
  try {
    parse_scenario("/nonexistent/scenario.toml");
    FAIL("accepted a missing file");
  } catch (const ScenarioError& e) {
    CHECK(e.kind() == ScenarioErrorKind::MissingFile);
    CHECK(std::string(e.what()).find("/nonexistent/scenario.toml") != std::string::npos);
  }
}

TEST_CASE("unit suffixes convert to SI") {
  std::string text = reference_text();
  text = replace(text, "pressure_torr = 1e-9", "pressure_nbar = 1");
  text = replace(text, "gas_molecule_mass_kg = 3.347e-27", "gas_molecule_mass_u = 2");
  text = replace(text, "elastic_cross_section_m2 = 2.4e-18", "elastic_cross_section_cm2 = 2.4e-14");
  text = replace(text, "hyperfine_frequency_per_s = 4.05e10", "hyperfine_frequency_ghz = 40.5");
  const ProtocolScenario s = parse_scenario_text(text);
  CHECK(s.trap.pressure == doctest::Approx(1e-4).epsilon(1e-15));
  CHECK(s.trap.gas_molecule_mass == doctest::Approx(2.0 * units::kAtomicMassUnit).epsilon(1e-15));
  CHECK(s.trap.elastic_cross_section_sigma_c == doctest::Approx(2.4e-18).epsilon(1e-15));
  CHECK(s.hyperfine_frequency == doctest::Approx(4.05e10).epsilon(1e-15));
}

TEST_CASE("pulse of kind none and explicit custom pulses") {
  std::string text = reference_text();
  const auto cut = text.find("[pulse.branch1]");
  const std::string base = text.substr(0, cut);
  const ProtocolScenario none = parse_scenario_text(base + "[pulse.branch1]\nkind = \"none\"\n");
  CHECK_FALSE(none.pulse_policy.on_branch1.has_value());
  const ProtocolScenario custom = parse_scenario_text(
      base + "[pulse.branch2]\nkind = \"custom\"\nduration_ms = 250\nfield_v_per_m = 0.01\n"
             "dipole_c_m = 3e-32\ncarrier_frequency_per_s = 4.05e10\n");
  REQUIRE(custom.pulse_policy.on_branch2.has_value());
  CHECK(custom.pulse_policy.on_branch2->duration == doctest::Approx(0.25));
  CHECK(custom.pulse_policy.on_branch2->applied_in_branch == Branch::Two);
}

TEST_CASE("serialize then parse is the identity on 100 random scenarios") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    const ProtocolScenario s = testgen::random_scenario(i, 99);
    const std::string text = serialize_scenario(s);
    INFO(text);
    CHECK(parse_scenario_text(text) == s);
  }
  CHECK(parse_scenario_text(serialize_scenario(reference_scenario())) == reference_scenario());
}
