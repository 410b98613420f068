#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <mutex>
#include <string>
#include <unordered_map>

#include "saat/objectives.hpp"
#include "saat/params.hpp"

namespace saat {

struct Trial {
  std::size_t sequence_number = 0;
  std::string sampler_tag;  // nsga2 | random | oracle
  std::uint64_t seed = 0;
  Configuration config;
  ObjectiveVector objectives;
  std::size_t canonical_index = 0;
};

// Append-only trial history with a deduplicating index keyed on the
// configuration's canonical index. Re-recording a seen configuration returns
// the cached trial and does not evaluate again, which is what makes
// unique-trial budgets meaningful.
class TrialStore {
 public:
  using Evaluator = std::function<ObjectiveVector(const Configuration &)>;

  TrialStore() = default;
  // Moves transfer the history only; the mutex is an independent
  // serialization point per object and must not be mid-use when moving.
  TrialStore(TrialStore &&other) noexcept
      : trials_(std::move(other.trials_)),
        dedup_index_(std::move(other.dedup_index_)) {}
  TrialStore &operator=(TrialStore &&other) noexcept {
    trials_ = std::move(other.trials_);
    dedup_index_ = std::move(other.dedup_index_);
    return *this;
  }

  struct RecordResult {
    const Trial &trial;
    bool was_new;
  };

  RecordResult record(const SearchSpace &space, const Configuration &conf,
                      const Evaluator &evaluate, const std::string &sampler_tag,
                      std::uint64_t seed);

  std::size_t unique_trials() const;
  std::size_t total_recordings() const { return trials_.size(); }
  bool seen(std::size_t canonical_index) const;

  const std::deque<Trial> &trials() const { return trials_; }

  void save_csv(const std::string &path, const SearchSpace &space) const;
  static TrialStore load_csv(const std::string &path, const SearchSpace &space);

 private:
  std::deque<Trial> trials_;  // deque: stable references under append
  std::unordered_map<std::size_t, std::size_t> dedup_index_;  // canonical -> pos
  mutable std::mutex mutex_;  // serialization point for concurrent recorders
};

}  // namespace saat
