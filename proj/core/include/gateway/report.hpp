#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "gateway/decoherence.hpp"
#include "gateway/paper_table.hpp"
#include "gateway/phase_kick.hpp"
#include "gateway/protocol.hpp"

namespace gateway {

enum class ReportFormat { Csv, Text };

std::optional<ReportFormat> parse_report_format(std::string_view text) noexcept;

// CSV columns (fixed order, numbers at full round-trip precision):
//   PaperTable         label,computed,paper,rel_dev,note
//   DecoherenceBudget  channel,decoherence_time_s,rate_per_s,active_without_pulse
//   RunReport          trial,branch,readout,coherence_at_readout
//   BitChannelReport   index,sent,received
//   ensemble           time_s,mean_coherence,std_error,mean_real,std_error_real,closed_form
// Text summaries print six significant digits.

std::string to_csv(const PaperTable& table);
std::string to_text(const PaperTable& table);

std::string to_csv(const DecoherenceBudget& budget);
std::string to_text(const DecoherenceBudget& budget);

std::string to_csv(const RunReport& report);
std::string to_text(const RunReport& report);

std::string to_csv(const BitChannelReport& report);
std::string to_text(const BitChannelReport& report);

std::string to_csv(std::span<const EnsemblePoint> ensemble);
std::string to_text(std::span<const EnsemblePoint> ensemble);

struct EmittedFiles {
  std::filesystem::path csv;
  std::filesystem::path text;
};

/// Writes `<dir>/<stem>.csv` and `<dir>/<stem>.txt`, creating `dir` if needed.
/// Throws IoError naming the path on failure.
EmittedFiles emit_report(const PaperTable& table, const std::filesystem::path& dir,
                         std::string_view stem = "paper_table");
EmittedFiles emit_report(const DecoherenceBudget& budget, const std::filesystem::path& dir,
                         std::string_view stem = "budget");
EmittedFiles emit_report(const RunReport& report, const std::filesystem::path& dir,
                         std::string_view stem = "run");
EmittedFiles emit_report(const BitChannelReport& report, const std::filesystem::path& dir,
                         std::string_view stem = "channel");
EmittedFiles emit_report(std::span<const EnsemblePoint> ensemble,
                         const std::filesystem::path& dir, std::string_view stem = "trajectories");

void write_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace gateway
