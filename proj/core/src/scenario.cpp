#include "gateway/scenario.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include <fmt/format.h>

#include "gateway/toml_lite.hpp"

namespace gateway {
namespace {

namespace toml = toml_lite;

enum class Dimension {
  Dimensionless,
  Pressure,
  Temperature,
  Mass,
  Area,
  ElectricField,
  Frequency,
  Time,
  Length,
  DipoleMoment,
};

std::string_view to_string(Dimension d) {
  switch (d) {
    case Dimension::Dimensionless: return "dimensionless";
    case Dimension::Pressure: return "pressure";
    case Dimension::Temperature: return "temperature";
    case Dimension::Mass: return "mass";
    case Dimension::Area: return "area";
    case Dimension::ElectricField: return "electric field";
    case Dimension::Frequency: return "frequency";
    case Dimension::Time: return "time";
    case Dimension::Length: return "length";
    case Dimension::DipoleMoment: return "dipole moment";
  }
  return "?";
}

struct Unit {
  std::string_view suffix;
  Dimension dimension;
  double to_si;
};

constexpr std::array kUnits{
    Unit{"pa", Dimension::Pressure, 1.0},
    Unit{"torr", Dimension::Pressure, units::kTorr},
    Unit{"nbar", Dimension::Pressure, units::kNanobar},
    Unit{"mbar", Dimension::Pressure, 100.0},
    Unit{"atm", Dimension::Pressure, 101325.0},
    Unit{"k", Dimension::Temperature, 1.0},
    Unit{"kg", Dimension::Mass, 1.0},
    Unit{"u", Dimension::Mass, units::kAtomicMassUnit},
    Unit{"m2", Dimension::Area, 1.0},
    Unit{"cm2", Dimension::Area, 1.0e-4},
    Unit{"v_per_m", Dimension::ElectricField, 1.0},
    Unit{"per_s", Dimension::Frequency, 1.0},
    Unit{"hz", Dimension::Frequency, 1.0},
    Unit{"ghz", Dimension::Frequency, 1.0e9},
    Unit{"s", Dimension::Time, 1.0},
    Unit{"ms", Dimension::Time, 1.0e-3},
    Unit{"us", Dimension::Time, 1.0e-6},
    Unit{"ns", Dimension::Time, 1.0e-9},
    Unit{"m", Dimension::Length, 1.0},
    Unit{"mm", Dimension::Length, 1.0e-3},
    Unit{"um", Dimension::Length, 1.0e-6},
    Unit{"nm", Dimension::Length, 1.0e-9},
    Unit{"c_m", Dimension::DipoleMoment, 1.0},
};

const Unit* find_unit(std::string_view suffix) {
  for (const auto& unit : kUnits) {
    if (unit.suffix == suffix) return &unit;
  }
  return nullptr;
}

std::string unit_list(Dimension d) {
  std::string out;
  for (const auto& unit : kUnits) {
    if (unit.dimension != d) continue;
    if (!out.empty()) out += ", ";
    out += unit.suffix;
  }
  return out;
}

enum class FieldType { Quantity, Integer, String };
enum class Constraint { None, Positive, NonNegative, UnitInterval };

struct FieldSpec {
  std::string_view stem;
  FieldType type;
  Dimension dimension = Dimension::Dimensionless;
  Constraint constraint = Constraint::None;
};

constexpr std::array kRootFields{
    FieldSpec{"schema_version", FieldType::Integer},
};

constexpr std::array kTrapFields{
    FieldSpec{"temperature", FieldType::Quantity, Dimension::Temperature, Constraint::Positive},
    FieldSpec{"pressure", FieldType::Quantity, Dimension::Pressure, Constraint::NonNegative},
    FieldSpec{"gas_molecule_mass", FieldType::Quantity, Dimension::Mass, Constraint::Positive},
    FieldSpec{"elastic_cross_section", FieldType::Quantity, Dimension::Area,
              Constraint::NonNegative},
    FieldSpec{"photon_cross_section", FieldType::Quantity, Dimension::Area,
              Constraint::NonNegative},
    FieldSpec{"confining_field", FieldType::Quantity, Dimension::ElectricField,
              Constraint::NonNegative},
    FieldSpec{"field_variability_fraction", FieldType::Quantity, Dimension::Dimensionless,
              Constraint::UnitInterval},
    FieldSpec{"field_variability_frequency", FieldType::Quantity, Dimension::Frequency,
              Constraint::Positive},
    FieldSpec{"trap_extension", FieldType::Quantity, Dimension::Length, Constraint::Positive},
    FieldSpec{"ion_mass", FieldType::Quantity, Dimension::Mass, Constraint::Positive},
};

constexpr std::array kTimelineFields{
    FieldSpec{"t0", FieldType::Quantity, Dimension::Time, Constraint::NonNegative},
    FieldSpec{"t1", FieldType::Quantity, Dimension::Time, Constraint::NonNegative},
    FieldSpec{"t2", FieldType::Quantity, Dimension::Time, Constraint::NonNegative},
    FieldSpec{"wait_before_readout", FieldType::Quantity, Dimension::Time, Constraint::Positive},
};

constexpr std::array kRunFields{
    FieldSpec{"n_trials", FieldType::Integer},
    FieldSpec{"seed", FieldType::Integer},
    FieldSpec{"model", FieldType::String},
    FieldSpec{"photon_split", FieldType::Quantity, Dimension::Dimensionless,
              Constraint::UnitInterval},
    FieldSpec{"hyperfine_frequency", FieldType::Quantity, Dimension::Frequency,
              Constraint::Positive},
};

constexpr std::array kPulseFields{
    FieldSpec{"kind", FieldType::String},
    FieldSpec{"pi_duration", FieldType::Quantity, Dimension::Time, Constraint::Positive},
    FieldSpec{"duration", FieldType::Quantity, Dimension::Time, Constraint::NonNegative},
    FieldSpec{"field", FieldType::Quantity, Dimension::ElectricField, Constraint::NonNegative},
    FieldSpec{"dipole", FieldType::Quantity, Dimension::DipoleMoment, Constraint::Positive},
    FieldSpec{"carrier_frequency", FieldType::Quantity, Dimension::Frequency,
              Constraint::Positive},
};

struct Located {
  const toml::Entry* entry = nullptr;
  double si = 0.0;  // quantities only
};

// Binds the entries of one table to its field specs, checking names, units and
// per-field constraints.
class TableReader {
 public:
  TableReader(std::string origin, const toml::Table* table, std::span<const FieldSpec> fields)
      : origin_(std::move(origin)), table_(table), fields_(fields), bound_(fields.size()) {
    if (table_ == nullptr) return;
    for (const auto& entry : table_->entries) bind(entry);
  }

  [[nodiscard]] bool present() const { return table_ != nullptr; }
  [[nodiscard]] std::size_t line() const { return table_ ? table_->line : 0; }

  [[nodiscard]] bool has(std::string_view stem) const { return located(stem) != nullptr; }

  double quantity(std::string_view stem) const {
    return require(stem).si;
  }
  std::optional<double> optional_quantity(std::string_view stem) const {
    const Located* l = located(stem);
    return l ? std::optional<double>(l->si) : std::nullopt;
  }
  std::uint64_t integer(std::string_view stem) const { return parse_integer(require(stem)); }
  std::optional<std::uint64_t> optional_integer(std::string_view stem) const {
    const Located* l = located(stem);
    return l ? std::optional<std::uint64_t>(parse_integer(*l)) : std::nullopt;
  }
  const std::string* optional_string(std::string_view stem) const {
    const Located* l = located(stem);
    return l ? &l->entry->value.text : nullptr;
  }
  const std::string& string(std::string_view stem) const { return require(stem).entry->value.text; }

  const toml::Entry* entry(std::string_view stem) const {
    const Located* l = located(stem);
    return l ? l->entry : nullptr;
  }

  [[noreturn]] void fail(ScenarioErrorKind kind, std::string_view stem,
                         const std::string& detail) const {
    const toml::Entry* e = entry(stem);
    throw ScenarioError(kind, origin_, e ? e->key : qualified(stem), e ? e->line : line(),
                        detail);
  }

 private:
  std::string qualified(std::string_view stem) const {
    return table_ && !table_->name.empty() ? fmt::format("{}.{}", table_->name, stem)
                                           : std::string(stem);
  }

  const Located* located(std::string_view stem) const {
    for (std::size_t i = 0; i < fields_.size(); ++i) {
      if (fields_[i].stem == stem) return bound_[i].entry ? &bound_[i] : nullptr;
    }
    return nullptr;
  }

  const Located& require(std::string_view stem) const {
    const Located* l = located(stem);
    if (l == nullptr) {
      const std::string table_name = table_ ? table_->name : std::string();
      throw ScenarioError(ScenarioErrorKind::MissingKey, origin_, qualified(stem), line(),
                          fmt::format("required key '{}' missing from [{}]", stem, table_name));
    }
    return *l;
  }

  std::uint64_t parse_integer(const Located& l) const {
    const auto value = toml::to_unsigned(l.entry->value.text);
    if (!value) {
      throw ScenarioError(ScenarioErrorKind::Syntax, origin_, l.entry->key, l.entry->line,
                          fmt::format("'{}' must be a nonnegative integer", l.entry->key));
    }
    return *value;
  }

  void bind(const toml::Entry& entry) {
    const auto error = [&](ScenarioErrorKind kind, const std::string& detail) {
      throw ScenarioError(kind, origin_, entry.key, entry.line, detail);
    };

    // Longest stem that is the whole key or a prefix followed by '_'.
    std::optional<std::size_t> match;
    for (std::size_t i = 0; i < fields_.size(); ++i) {
      const std::string_view stem = fields_[i].stem;
      const bool exact = entry.key == stem;
      const bool prefixed = entry.key.size() > stem.size() + 1 && entry.key.starts_with(stem) &&
                            entry.key[stem.size()] == '_';
      if ((exact || prefixed) && (!match || stem.size() > fields_[*match].stem.size())) match = i;
    }
    if (!match) {
      error(ScenarioErrorKind::UnknownKey,
            fmt::format("unknown key '{}' in [{}]", entry.key, table_->name));
    }
    const FieldSpec& spec = fields_[*match];
    const std::string_view suffix = entry.key == spec.stem
                                        ? std::string_view{}
                                        : std::string_view(entry.key).substr(spec.stem.size() + 1);

    if (bound_[*match].entry != nullptr) {
      error(ScenarioErrorKind::Syntax,
            fmt::format("'{}' given twice (as '{}' and '{}')", spec.stem,
                        bound_[*match].entry->key, entry.key));
    }

    Located located{&entry, 0.0};
    if (spec.type != FieldType::Quantity || spec.dimension == Dimension::Dimensionless) {
      if (!suffix.empty()) {
        const Unit* unit = find_unit(suffix);
        error(ScenarioErrorKind::UnitMismatch,
              fmt::format("'{}' is {} and takes no unit suffix, got '{}'{}", spec.stem,
                          spec.type == FieldType::Quantity ? "dimensionless" : "not a quantity",
                          suffix,
                          unit ? fmt::format(" ({})", to_string(unit->dimension)) : std::string()));
      }
    } else {
      if (suffix.empty()) {
        error(ScenarioErrorKind::UnitMismatch,
              fmt::format("'{}' needs an explicit unit suffix, one of: {}", spec.stem,
                          unit_list(spec.dimension)));
      }
      const Unit* unit = find_unit(suffix);
      if (unit == nullptr) {
        error(ScenarioErrorKind::UnitMismatch,
              fmt::format("unknown unit '{}' for {} '{}'; expected one of: {}", suffix,
                          to_string(spec.dimension), spec.stem, unit_list(spec.dimension)));
      }
      if (unit->dimension != spec.dimension) {
        error(ScenarioErrorKind::UnitMismatch,
              fmt::format("'{}' is a {} but unit '{}' measures {}; expected one of: {}",
                          spec.stem, to_string(spec.dimension), suffix,
                          to_string(unit->dimension), unit_list(spec.dimension)));
      }
      located.si = unit->to_si;
    }

    switch (spec.type) {
      case FieldType::String:
        if (entry.value.kind != toml::ValueKind::String) {
          error(ScenarioErrorKind::Syntax, fmt::format("'{}' must be a string", entry.key));
        }
        break;
      case FieldType::Integer:
        if (entry.value.kind != toml::ValueKind::Number) {
          error(ScenarioErrorKind::Syntax, fmt::format("'{}' must be an integer", entry.key));
        }
        break;
      case FieldType::Quantity: {
        const auto number = entry.value.kind == toml::ValueKind::Number
                                ? toml::to_double(entry.value.text)
                                : std::nullopt;
        if (!number) {
          error(ScenarioErrorKind::Syntax, fmt::format("'{}' must be a number", entry.key));
        }
        const double scale = spec.dimension == Dimension::Dimensionless ? 1.0 : located.si;
        located.si = *number * scale;
        check_constraint(spec, located.si, error);
        break;
      }
    }
    bound_[*match] = located;
  }

  template <class ErrorFn>
  static void check_constraint(const FieldSpec& spec, double value, const ErrorFn& error) {
    switch (spec.constraint) {
      case Constraint::None: return;
      case Constraint::Positive:
        if (!(value > 0.0)) {
          error(ScenarioErrorKind::InvariantViolation,
                fmt::format("'{}' must be > 0, got {}", spec.stem, value));
        }
        return;
      case Constraint::NonNegative:
        if (!(value >= 0.0)) {
          error(ScenarioErrorKind::InvariantViolation,
                fmt::format("'{}' must be >= 0, got {}", spec.stem, value));
        }
        return;
      case Constraint::UnitInterval:
        if (!(value >= 0.0 && value <= 1.0)) {
          error(ScenarioErrorKind::InvariantViolation,
                fmt::format("'{}' must lie in [0,1], got {}", spec.stem, value));
        }
        return;
    }
  }

  std::string origin_;
  const toml::Table* table_;
  std::span<const FieldSpec> fields_;
  std::vector<Located> bound_;
};

std::optional<PulseSpec> read_pulse(const TableReader& reader, Branch branch) {
  if (!reader.present()) return std::nullopt;
  const std::string& kind_text = reader.string("kind");
  if (kind_text == "none") {
    for (std::string_view stem : {"pi_duration", "duration", "field", "dipole", "carrier_frequency"}) {
      if (reader.has(stem)) {
        reader.fail(ScenarioErrorKind::InvariantViolation, stem,
                    "a pulse of kind \"none\" takes no parameters");
      }
    }
    return std::nullopt;
  }
  const auto kind = parse_pulse_kind(kind_text);
  if (!kind) {
    reader.fail(ScenarioErrorKind::InvariantViolation, "kind",
                fmt::format("unknown pulse kind \"{}\" (pi, mwi_pi, custom, none)", kind_text));
  }
  const double dipole = reader.quantity("dipole");
  const double omega = reader.quantity("carrier_frequency");

  PulseSpec pulse;
  if (reader.has("pi_duration")) {
    if (*kind == PulseKind::Custom) {
      reader.fail(ScenarioErrorKind::InvariantViolation, "pi_duration",
                  "pi_duration applies only to pi and mwi_pi pulses");
    }
    if (reader.has("duration") || reader.has("field")) {
      reader.fail(ScenarioErrorKind::InvariantViolation, "pi_duration",
                  "give either pi_duration or duration and field, not both");
    }
    const double t_p = reader.quantity("pi_duration");
    pulse = *kind == PulseKind::Pi ? make_pi_pulse(t_p, dipole, omega, branch)
                                   : make_mwi_pulse(t_p, dipole, omega, branch);
  } else {
    pulse = PulseSpec{.duration = reader.quantity("duration"),
                      .field_strength = reader.quantity("field"),
                      .dipole_moment = dipole,
                      .carrier_frequency_omega = omega,
                      .kind = *kind,
                      .applied_in_branch = branch};
  }
  try {
    validate(pulse);
  } catch (const ValidationError& e) {
    reader.fail(ScenarioErrorKind::InvariantViolation, reader.has("field") ? "field" : "kind",
                e.what());
  }
  return pulse;
}

ProtocolScenario build(const toml::Document& doc, const std::string& origin) {
  for (const auto& table : doc.tables) {
    static constexpr std::array kKnown{"", "trap", "timeline", "run", "pulse.branch1",
                                       "pulse.branch2"};
    if (std::find(kKnown.begin(), kKnown.end(), table.name) == kKnown.end()) {
      throw ScenarioError(ScenarioErrorKind::UnknownKey, origin, table.name, table.line,
                          fmt::format("unknown table [{}]", table.name));
    }
  }

  const TableReader root(origin, doc.find(""), kRootFields);
  const std::uint64_t version = root.integer("schema_version");
  if (version != static_cast<std::uint64_t>(kScenarioSchemaVersion)) {
    root.fail(ScenarioErrorKind::InvariantViolation, "schema_version",
              fmt::format("unsupported schema_version {} (this build reads {})", version,
                          kScenarioSchemaVersion));
  }

  const TableReader trap(origin, doc.find("trap"), kTrapFields);
  const TableReader timeline(origin, doc.find("timeline"), kTimelineFields);
  const TableReader run(origin, doc.find("run"), kRunFields);
  const TableReader pulse1(origin, doc.find("pulse.branch1"), kPulseFields);
  const TableReader pulse2(origin, doc.find("pulse.branch2"), kPulseFields);

  ProtocolScenario s;
  s.trap = TrapConfig{
      .temperature = trap.quantity("temperature"),
      .pressure = trap.quantity("pressure"),
      .gas_molecule_mass = trap.quantity("gas_molecule_mass"),
      .elastic_cross_section_sigma_c = trap.quantity("elastic_cross_section"),
      .photon_cross_section = trap.quantity("photon_cross_section"),
      .confining_field_E_c = trap.quantity("confining_field"),
      .field_variability_fraction_f_v = trap.quantity("field_variability_fraction"),
      .field_variability_frequency = trap.quantity("field_variability_frequency"),
      .trap_extension_d = trap.quantity("trap_extension"),
      .ion_mass = trap.quantity("ion_mass"),
  };

  s.stage_times.t0 = timeline.optional_quantity("t0").value_or(kDefaultT0);
  s.stage_times.t1 = timeline.optional_quantity("t1").value_or(kDefaultT1);
  s.stage_times.t2 = timeline.optional_quantity("t2").value_or(kDefaultT2);
  if (!(s.stage_times.t0 < s.stage_times.t1)) {
    timeline.fail(ScenarioErrorKind::InvariantViolation, "t1", "t1 must be later than t0");
  }
  if (!(s.stage_times.t1 < s.stage_times.t2)) {
    timeline.fail(ScenarioErrorKind::InvariantViolation, "t2", "t2 must be later than t1");
  }
  s.wait_before_readout = timeline.quantity("wait_before_readout");

  s.n_trials = run.integer("n_trials");
  if (s.n_trials < 1) run.fail(ScenarioErrorKind::InvariantViolation, "n_trials", "n_trials must be >= 1");
  s.seed = run.integer("seed");
  if (const std::string* model = run.optional_string("model")) {
    const auto parsed = parse_excitation_model(*model);
    if (!parsed) {
      run.fail(ScenarioErrorKind::InvariantViolation, "model",
               fmt::format("unknown model \"{}\" (feedback, one-interaction)", *model));
    }
    s.model = *parsed;
  }
  s.photon_split = run.optional_quantity("photon_split").value_or(0.5);
  s.hyperfine_frequency =
      run.optional_quantity("hyperfine_frequency").value_or(kHg199HyperfineOmega);

  s.pulse_policy.on_branch1 = read_pulse(pulse1, Branch::One);
  s.pulse_policy.on_branch2 = read_pulse(pulse2, Branch::Two);
  if (s.pulse_policy.on_branch1 && s.pulse_policy.on_branch2) {
    pulse2.fail(ScenarioErrorKind::InvariantViolation, "kind",
                "only one branch may drive the ion");
  }
  const auto& pulse = s.pulse_policy.on_branch1 ? s.pulse_policy.on_branch1 : s.pulse_policy.on_branch2;
  if (pulse && !(pulse->duration < s.wait_before_readout)) {
    timeline.fail(ScenarioErrorKind::InvariantViolation, "wait_before_readout",
                  fmt::format("the {} s pulse must end before the readout", pulse->duration));
  }

  try {
    validate(s);
  } catch (const ValidationError& e) {
    throw ScenarioError(ScenarioErrorKind::InvariantViolation, origin, "<scenario>", 0, e.what());
  }
  return s;
}

void write_quantity(std::ostringstream& out, std::string_view key, double value) {
  out << fmt::format("{} = {}\n", key, value);
}

void write_pulse(std::ostringstream& out, std::string_view table, const PulseSpec& pulse) {
  out << fmt::format("\n[{}]\n", table);
  out << fmt::format("kind = \"{}\"\n", to_string(pulse.kind));
  write_quantity(out, "duration_s", pulse.duration);
  write_quantity(out, "field_v_per_m", pulse.field_strength);
  write_quantity(out, "dipole_c_m", pulse.dipole_moment);
  write_quantity(out, "carrier_frequency_per_s", pulse.carrier_frequency_omega);
}

}  // namespace

std::string_view to_string(ScenarioErrorKind kind) noexcept {
  switch (kind) {
    case ScenarioErrorKind::MissingFile: return "missing file";
    case ScenarioErrorKind::Syntax: return "syntax error";
    case ScenarioErrorKind::UnknownKey: return "unknown key";
    case ScenarioErrorKind::UnitMismatch: return "unit mismatch";
    case ScenarioErrorKind::MissingKey: return "missing key";
    case ScenarioErrorKind::InvariantViolation: return "invariant violation";
  }
  return "?";
}

ScenarioError::ScenarioError(ScenarioErrorKind kind, std::string origin, std::string key,
                             std::size_t line, const std::string& detail)
    : ValidationError(line > 0 ? fmt::format("{}:{}: {} [{}]: {}", origin, line, to_string(kind),
                                             key, detail)
                               : fmt::format("{}: {} [{}]: {}", origin, to_string(kind), key,
                                             detail)),
      kind_(kind),
      key_(std::move(key)),
      line_(line) {}

ProtocolScenario parse_scenario_text(std::string_view text, std::string_view origin) {
  toml::Document doc;
  try {
    doc = toml::parse(text);
  } catch (const toml::SyntaxError& e) {
    throw ScenarioError(ScenarioErrorKind::Syntax, std::string(origin), "<line>", e.line(),
                        e.what());
  }
  return build(doc, std::string(origin));
}

ScenarioFile load_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ScenarioError(ScenarioErrorKind::MissingFile, path.string(), "<file>", 0,
                        "cannot open scenario file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  ProtocolScenario parsed = parse_scenario_text(buffer.str(), path.string());
  return {path, std::move(parsed), kScenarioSchemaVersion};
}

ProtocolScenario parse_scenario(const std::filesystem::path& path) {
  return load_scenario_file(path).parsed;
}

std::string serialize_scenario(const ProtocolScenario& s) {
  std::ostringstream out;
  out << fmt::format("schema_version = {}\n", kScenarioSchemaVersion);

  out << "\n[trap]\n";
  write_quantity(out, "temperature_k", s.trap.temperature);
  write_quantity(out, "pressure_pa", s.trap.pressure);
  write_quantity(out, "gas_molecule_mass_kg", s.trap.gas_molecule_mass);
  write_quantity(out, "elastic_cross_section_m2", s.trap.elastic_cross_section_sigma_c);
  write_quantity(out, "photon_cross_section_m2", s.trap.photon_cross_section);
  write_quantity(out, "confining_field_v_per_m", s.trap.confining_field_E_c);
  write_quantity(out, "field_variability_fraction", s.trap.field_variability_fraction_f_v);
  write_quantity(out, "field_variability_frequency_per_s", s.trap.field_variability_frequency);
  write_quantity(out, "trap_extension_m", s.trap.trap_extension_d);
  write_quantity(out, "ion_mass_kg", s.trap.ion_mass);

  out << "\n[timeline]\n";
  write_quantity(out, "t0_s", s.stage_times.t0);
  write_quantity(out, "t1_s", s.stage_times.t1);
  write_quantity(out, "t2_s", s.stage_times.t2);
  write_quantity(out, "wait_before_readout_s", s.wait_before_readout);

  out << "\n[run]\n";
  out << fmt::format("n_trials = {}\n", s.n_trials);
  out << fmt::format("seed = {}\n", s.seed);
  out << fmt::format("model = \"{}\"\n", to_string(s.model));
  write_quantity(out, "photon_split", s.photon_split);
  write_quantity(out, "hyperfine_frequency_per_s", s.hyperfine_frequency);

  if (s.pulse_policy.on_branch1) write_pulse(out, "pulse.branch1", *s.pulse_policy.on_branch1);
  if (s.pulse_policy.on_branch2) write_pulse(out, "pulse.branch2", *s.pulse_policy.on_branch2);
  return out.str();
}

}  // namespace gateway
