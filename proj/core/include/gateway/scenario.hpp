#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "gateway/error.hpp"
#include "gateway/protocol.hpp"

namespace gateway {

inline constexpr int kScenarioSchemaVersion = 1;

enum class ScenarioErrorKind {
  MissingFile,
  Syntax,
  UnknownKey,
  UnitMismatch,
  MissingKey,
  InvariantViolation,
};

std::string_view to_string(ScenarioErrorKind kind) noexcept;

/// Scenario rejection. `key()` names the offending key (or table) and `line()`
/// its 1-based line, 0 when the problem is not tied to a single line.
class ScenarioError : public ValidationError {
 public:
  ScenarioError(ScenarioErrorKind kind, std::string origin, std::string key, std::size_t line,
                const std::string& detail);

  [[nodiscard]] ScenarioErrorKind kind() const noexcept { return kind_; }
  [[nodiscard]] const std::string& key() const noexcept { return key_; }
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  ScenarioErrorKind kind_;
  std::string key_;
  std::size_t line_;
};

struct ScenarioFile {
  std::filesystem::path path;
  ProtocolScenario parsed;
  int schema_version = kScenarioSchemaVersion;
};

/// Parses scenario text. Every physical quantity is written as
/// `<quantity>_<unit> = <number>` (for example `pressure_torr = 1e-9`); the unit
/// suffix is checked against the quantity's dimension and converted to SI.
ProtocolScenario parse_scenario_text(std::string_view text, std::string_view origin = "<memory>");

ScenarioFile load_scenario_file(const std::filesystem::path& path);
ProtocolScenario parse_scenario(const std::filesystem::path& path);

/// Writes SI-suffixed keys with shortest round-trip number formatting, so
/// parse_scenario_text(serialize_scenario(s)) == s for every valid s.
std::string serialize_scenario(const ProtocolScenario& scenario);

}  // namespace gateway
