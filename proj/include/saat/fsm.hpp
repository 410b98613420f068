#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "saat/wgra.hpp"

namespace saat {

// Guard over a window's estimated pedestrian count c: qualifies when
// lo <= c < hi (either bound may be absent). A transition with sustain = k
// fires only after k consecutive qualifying windows.
struct GuardRange {
  std::optional<double> lo;
  std::optional<double> hi;
  int sustain = 1;

  bool qualifies(double count) const {
    if (lo && count < *lo) return false;
    if (hi && count >= *hi) return false;
    return true;
  }
};

struct FsmTransition {
  std::string from;
  std::string to;
  GuardRange guard;
};

struct FsmSpec {
  std::vector<std::string> states;
  std::string initial_state;
  std::vector<FsmTransition> transitions;
};

// Parses {states, initial, transitions: [{from, to, lo?, hi?, sustain?}]}.
// Every state must name one of the supplied operation modes.
FsmSpec parse_fsm(const nlohmann::json &document,
                  const std::vector<std::string> &mode_names);
FsmSpec parse_fsm_file(const std::string &path,
                       const std::vector<std::string> &mode_names);

struct FsmDiagnostics {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
};

// Static checks: initial-state membership, transition endpoints declared,
// well-formed guards, determinism (no two guards out of one state accept the
// same integer count in [0, 50]), and reachability of every state from the
// initial one.
FsmDiagnostics validate_fsm(const FsmSpec &spec);

struct WindowObservation {
  std::size_t window_index = 0;
  // Estimated pedestrians per frame over the window (recall-corrected, so
  // guard thresholds read on the true-count scale).
  double mean_count = 0.0;
  std::size_t frames_in_window = 0;
};

struct TransitionEvent {
  std::size_t window_index = 0;
  std::string from;
  std::string to;
};

// Deterministic executor: one state, per-transition sustain counters, an
// append-only transition log. Stepping twice with the same observation
// sequence reproduces the same log.
class FsmRuntime {
 public:
  FsmRuntime(FsmSpec spec, std::map<std::string, OperationMode> modes);

  struct StepResult {
    std::string state;                      // state after the step
    std::optional<std::string> fired_to;    // target if a transition fired
  };

  // Evaluates guards out of the current state; qualifying transitions
  // advance their sustain counter, non-qualifying ones reset it; a counter
  // reaching its sustain threshold fires the transition (all counters reset).
  // At most one transition may fire per observation; two firing at once is a
  // determinism violation and throws. window_index must strictly increase.
  StepResult step(const WindowObservation &obs);

  const std::string &current_state() const { return current_state_; }
  const OperationMode &current_mode() const;
  const Configuration &current_config() const;
  const std::vector<TransitionEvent> &transition_log() const { return log_; }
  const FsmSpec &spec() const { return spec_; }
  const std::map<std::string, OperationMode> &modes() const { return modes_; }

 private:
  FsmSpec spec_;
  std::map<std::string, OperationMode> modes_;
  std::string current_state_;
  std::vector<int> sustain_counters_;  // parallel to spec_.transitions
  std::vector<TransitionEvent> log_;
  std::optional<std::size_t> last_window_;
};

}  // namespace saat
