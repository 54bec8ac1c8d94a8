#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace gateway {

struct PaperRow {
  std::string label;
  double computed = 0.0;
  double paper = 0.0;
  double rel_dev = 0.0;  // |computed - paper| / paper
  std::string note;
};

struct PaperTable {
  std::vector<PaperRow> rows;

  /// nullptr when no row carries `label`.
  [[nodiscard]] const PaperRow* find(std::string_view label) const;
};

PaperRow make_paper_row(std::string label, double computed, double paper, std::string note);

/// Every scalar the model can compare against a published value: the three
/// channel decoherence times (rest gas under both pressure readings), the
/// excitation damping and excitation probabilities of the MWI pi pulse, and the
/// mixing timescale.
PaperTable reproduce_paper_table();

namespace paper_rows {
inline constexpr std::string_view kRestGasTorr = "rest_gas_dt_dec_1e-9_torr";
inline constexpr std::string_view kRestGasNbar = "rest_gas_dt_dec_1_nbar";
inline constexpr std::string_view kMicrowaveElastic = "microwave_elastic_dt_dec";
inline constexpr std::string_view kTrapFieldUnit = "trap_field_dt_dec_fv_1";
inline constexpr std::string_view kTrapFieldReference = "trap_field_dt_dec_fv_1e-10";
inline constexpr std::string_view kExcitationDamping = "excitation_damping_mwi_pi";
inline constexpr std::string_view kOneInteractionP = "p_one_interaction_mwi_pi";
inline constexpr std::string_view kFeedbackP = "p_feedback_mwi_pi";
inline constexpr std::string_view kMixingTime = "mixing_timescale";
}  // namespace paper_rows

}  // namespace gateway
