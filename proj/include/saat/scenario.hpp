#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "saat/fsm.hpp"
#include "saat/wgra.hpp"

namespace saat {

enum class DensityLabel { zero, low, high };

DensityLabel density_label_from_text(const std::string &text);
std::string to_string(DensityLabel label);

// A 24-hour pedestrian-traffic timeline: one density label per hour,
// expanded to 60 per-frame true counts per hour (1440 frames total).
// Expansion is a balanced shuffle of the label's bucket — low hours hold
// 20 each of {1,2,3}, high hours 30 each of {4,5} — so each frame is
// marginally uniform over the bucket while every hour's mean is exactly the
// bucket mean (0, 2.0, 4.5). That keeps hour means a deterministic function
// of the labels for every seed.
struct Scenario {
  std::string name;
  std::array<DensityLabel, 24> hours{};
  std::vector<int> frames;  // 1440 true counts, each in the hour's bucket
};

// kind: "weekdays" (three separated peak blocks) or "weekends" (quiet
// morning, build-up through the evening).
Scenario generate_scenario(const std::string &kind, std::uint64_t seed);
Scenario scenario_from_labels(const std::string &name,
                              const std::array<DensityLabel, 24> &hours,
                              std::uint64_t seed);
Scenario parse_scenario_file(const std::string &path, std::uint64_t seed);

struct WindowRecord {
  std::size_t window_index = 0;
  std::string mode;
  double energy_wh = 0.0;
  double frames_processed = 0.0;
  double mean_true_count = 0.0;
  double mean_detected_count = 0.0;
};

struct SimulationReport {
  std::string subject;
  std::string scenario_name;
  std::vector<WindowRecord> windows;
  double total_energy_wh = 0.0;
  double total_frames_processed = 0.0;
  double mean_fpr = 0.0;       // processed frames per second over the run
  double accuracy_proxy = 0.0; // frame-weighted mean accuracy of active config
  std::vector<std::string> mode_timeline;
};

struct SimulationParams {
  // Seconds of wall time represented by one frame; 60 frames x 2 s = 120 s,
  // so by default a window spans exactly the device model's energy window.
  double frame_cadence_seconds = 2.0;
  // Optional per-switch energy surcharge (Wh) for sensitivity studies.
  double mode_switch_cost_wh = 0.0;
};

// Detection recall for a configuration: clamp(1.25 x acc, 0, 1). Maps the
// synthetic accuracy range onto a usable recall range so low-accuracy modes
// still observe traffic.
double detection_recall(const ObjectiveVector &objectives);

// Replays the scenario with one fixed mode: every 60-frame window charges
// the mode's energy and processed frames pro-rated by window seconds / the
// device window, and draws per-frame detected counts by binomial thinning of
// the true counts with the mode's recall.
SimulationReport simulate_static(const Scenario &scenario,
                                 const OperationMode &mode,
                                 const SimulationParams &params,
                                 std::uint64_t seed);

// Replays the scenario with the FSM-driven subject: each window runs under
// the current mode, then the FSM steps on that window's recall-corrected
// count estimate, so a mode switch takes effect the following window.
SimulationReport simulate_adaptive(const Scenario &scenario, FsmRuntime &fsm,
                                   const SimulationParams &params,
                                   std::uint64_t seed);

struct ComparisonRow {
  std::string subject;
  double total_energy_wh = 0.0;
  double total_frames_processed = 0.0;
  double mean_fpr = 0.0;
  double accuracy_proxy = 0.0;
};

struct ComparisonDelta {
  std::string other_subject;
  double energy_saving_pct = 0.0;    // (other - subject) / other * 100
  double fpr_gain_pct = 0.0;         // (subject - other) / other * 100
  double accuracy_delta_pct = 0.0;   // (subject - other) / other * 100
};

struct ComparisonTable {
  std::string scenario_name;
  std::string subject;  // the first report; deltas are vs this subject
  std::vector<ComparisonRow> aggregates;
  std::vector<ComparisonDelta> deltas;
};

// First report is the subject the deltas are computed for; all reports must
// come from the same scenario.
ComparisonTable compare(const std::vector<SimulationReport> &reports);

// Per-subject, per-six-hour-block five-number summaries (min, q1, median,
// q3, max) of window energies, for box-plot rendering.
struct BoxplotRow {
  std::string subject;
  int hour_block = 0;  // 0: hours 0-5, 1: 6-11, 2: 12-17, 3: 18-23
  double min = 0.0, q1 = 0.0, median = 0.0, q3 = 0.0, max = 0.0;
};

std::vector<BoxplotRow> energy_boxplot(
    const std::vector<SimulationReport> &reports);

std::string report_to_csv(const SimulationReport &report);
SimulationReport report_from_csv(const std::string &content);

std::string comparison_to_csv(const ComparisonTable &table);
std::string boxplot_to_csv(const std::vector<BoxplotRow> &rows);

}  // namespace saat
