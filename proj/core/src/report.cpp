#include "gateway/report.hpp"

#include <cmath>
#include <fstream>

#include <fmt/format.h>

#include "gateway/error.hpp"

namespace gateway {
namespace {

// Shortest representation that round-trips.
std::string full(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  return fmt::format("{}", x);
}

std::string six(double x) {
  if (std::isnan(x)) return "n/a";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  return fmt::format("{:.6g}", x);
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string time_full(const DecoherenceTime& t) { return t.decoheres() ? full(t.seconds()) : "none"; }
std::string time_six(const DecoherenceTime& t) {
  return t.decoheres() ? six(t.seconds()) + " s" : "none (no decoherence)";
}

template <class Report>
EmittedFiles emit(const Report& report, const std::filesystem::path& dir, std::string_view stem) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw IoError(fmt::format("cannot create output directory '{}': {}", dir.string(), ec.message()));
  }
  EmittedFiles files{dir / fmt::format("{}.csv", stem), dir / fmt::format("{}.txt", stem)};
  write_text_file(files.csv, to_csv(report));
  write_text_file(files.text, to_text(report));
  return files;
}

}  // namespace

std::optional<ReportFormat> parse_report_format(std::string_view text) noexcept {
  if (text == "csv") return ReportFormat::Csv;
  if (text == "text") return ReportFormat::Text;
  return std::nullopt;
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(fmt::format("cannot open '{}' for writing", path.string()));
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.flush();
  if (!out) throw IoError(fmt::format("failed writing '{}'", path.string()));
}

std::string to_csv(const PaperTable& table) {
  std::string out = "label,computed,paper,rel_dev,note\n";
  for (const auto& row : table.rows) {
    out += fmt::format("{},{},{},{},{}\n", csv_field(row.label), full(row.computed),
                       full(row.paper), full(row.rel_dev), csv_field(row.note));
  }
  return out;
}

std::string to_text(const PaperTable& table) {
  std::string out = fmt::format("{:<28} {:>13} {:>13} {:>11}  {}\n", "quantity", "computed",
                                "published", "rel. dev.", "note");
  for (const auto& row : table.rows) {
    out += fmt::format("{:<28} {:>13} {:>13} {:>11}  {}\n", row.label, six(row.computed),
                       six(row.paper), six(row.rel_dev), row.note);
  }
  return out;
}

std::string to_csv(const DecoherenceBudget& budget) {
  std::string out = "channel,decoherence_time_s,rate_per_s,active_without_pulse\n";
  for (const auto& entry : budget.entries) {
    out += fmt::format("{},{},{},{}\n", csv_field(entry.channel), time_full(entry.time),
                       full(entry.time.rate()), entry.active_without_pulse ? 1 : 0);
  }
  out += fmt::format("combined,{},{},0\n", time_full(budget.combined),
                     full(budget.combined.rate()));
  return out;
}

std::string to_text(const DecoherenceBudget& budget) {
  std::string out = "decoherence budget\n";
  for (const auto& entry : budget.entries) {
    out += fmt::format("  {:<20} {}{}\n", entry.channel, time_six(entry.time),
                       entry.active_without_pulse ? "" : "  (drive on only)");
  }
  out += fmt::format("  {:<20} {}\n", "combined", time_six(budget.combined));
  out += fmt::format("  {:<20} {}\n", "combined, no drive", time_six(budget.without_pulse()));
  return out;
}

std::string to_csv(const RunReport& report) {
  std::string out = "trial,branch,readout,coherence_at_readout\n";
  for (const auto& r : report.records) {
    out += fmt::format("{},{},{},{}\n", r.trial, to_string(r.branch), to_string(r.readout_state),
                       full(r.coherence_at_readout));
  }
  return out;
}

std::string to_text(const RunReport& report) {
  const auto& rate = report.cross_world_excitation_rate;
  std::string out = "protocol run\n";
  out += fmt::format("  model                      {}\n", to_string(report.model));
  out += fmt::format("  trials                     {}\n", rate.trials);
  out += fmt::format("  predicted F1 probability   {}\n", six(report.predicted_probability));
  out += fmt::format("  cross-world F1 rate        {} [{}, {}] (95% Wilson)\n", six(rate.rate),
                     six(rate.lower), six(rate.upper));
  out += fmt::format("  dt_exc / dt_dec            {}\n", six(report.excitation_to_decoherence_ratio));
  const auto& e = report.energy;
  out += "energy ledger (J)\n";
  out += fmt::format("  branch1 field change       {}\n", six(e.branch1_field_energy_change));
  out += fmt::format("  branch2 field change       {}\n", six(e.branch2_field_energy_change));
  out += fmt::format("  branch1 ion energy         {}\n", six(e.branch1_ion_energy));
  out += fmt::format("  branch2 ion energy         {}\n", six(e.branch2_ion_energy));
  out += fmt::format("  universe balance           {}\n", six(e.universe_balance));
  out += to_text(report.budget);
  for (const auto& warning : report.warnings) out += fmt::format("warning: {}\n", warning);
  return out;
}

std::string to_csv(const BitChannelReport& report) {
  std::string out = "index,sent,received\n";
  for (std::size_t i = 0; i < report.sent.size(); ++i) {
    out += fmt::format("{},{},{}\n", i, report.sent[i], report.received[i]);
  }
  return out;
}

std::string to_text(const BitChannelReport& report) {
  std::string out = "bit channel\n";
  out += fmt::format("  bits            {}\n", report.sent.size());
  out += fmt::format("  sent            {}\n", report.sent);
  out += fmt::format("  received        {}\n", report.received);
  out += fmt::format("  bit error rate  {}\n", six(report.bit_error_rate));
  return out;
}

std::string to_csv(std::span<const EnsemblePoint> ensemble) {
  std::string out = "time_s,mean_coherence,std_error,mean_real,std_error_real,closed_form\n";
  for (const auto& p : ensemble) {
    out += fmt::format("{},{},{},{},{},{}\n", full(p.time), full(p.mean_coherence),
                       full(p.std_error), full(p.mean_real), full(p.std_error_real),
                       full(p.closed_form));
  }
  return out;
}

std::string to_text(std::span<const EnsemblePoint> ensemble) {
  std::string out = fmt::format("{:>13} {:>13} {:>13} {:>13}\n", "time [s]", "mean |c|",
                                "std. error", "exp(-rate t)");
  for (const auto& p : ensemble) {
    out += fmt::format("{:>13} {:>13} {:>13} {:>13}\n", six(p.time), six(p.mean_coherence),
                       six(p.std_error), six(p.closed_form));
  }
  return out;
}

EmittedFiles emit_report(const PaperTable& table, const std::filesystem::path& dir,
                         std::string_view stem) {
  return emit(table, dir, stem);
}
EmittedFiles emit_report(const DecoherenceBudget& budget, const std::filesystem::path& dir,
                         std::string_view stem) {
  return emit(budget, dir, stem);
}
EmittedFiles emit_report(const RunReport& report, const std::filesystem::path& dir,
                         std::string_view stem) {
  return emit(report, dir, stem);
}
EmittedFiles emit_report(const BitChannelReport& report, const std::filesystem::path& dir,
                         std::string_view stem) {
  return emit(report, dir, stem);
}
EmittedFiles emit_report(std::span<const EnsemblePoint> ensemble,
                         const std::filesystem::path& dir, std::string_view stem) {
  return emit(ensemble, dir, stem);
}

}  // namespace gateway
