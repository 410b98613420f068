#include "saat/trials.hpp"

#include <cstdlib>

#include "saat/io.hpp"

namespace saat {

TrialStore::RecordResult TrialStore::record(const SearchSpace &space,
                                            const Configuration &conf,
                                            const Evaluator &evaluate,
                                            const std::string &sampler_tag,
                                            std::uint64_t seed) {
  std::size_t canonical = space.canonical_index(conf);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto hit = dedup_index_.find(canonical);
    if (hit != dedup_index_.end()) {
      return RecordResult{trials_[hit->second], false};
    }
  }
  // Evaluate outside the lock; a concurrent recorder beating us to the same
  // configuration wins and our duplicate evaluation is discarded.
  ObjectiveVector objectives = evaluate(conf);
  std::lock_guard<std::mutex> lock(mutex_);
  auto hit = dedup_index_.find(canonical);
  if (hit != dedup_index_.end()) {
    return RecordResult{trials_[hit->second], false};
  }
  Trial trial;
  trial.sequence_number = trials_.size();
  trial.sampler_tag = sampler_tag;
  trial.seed = seed;
  trial.config = conf;
  trial.objectives = objectives;
  trial.canonical_index = canonical;
  trials_.push_back(std::move(trial));
  dedup_index_.emplace(canonical, trials_.size() - 1);
  return RecordResult{trials_.back(), true};
}

std::size_t TrialStore::unique_trials() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return dedup_index_.size();
}

bool TrialStore::seen(std::size_t canonical_index) const {
  std::lock_guard<std::mutex> lock(mutex_);
  return dedup_index_.find(canonical_index) != dedup_index_.end();
}

void TrialStore::save_csv(const std::string &path,
                          const SearchSpace &space) const {
  std::string out = "sequence,sampler,seed";
  for (const ParameterDef &def : space.parameters()) {
    out += "," + def.name;
  }
  out += ",acc,eng,rate\n";
  for (const Trial &trial : trials_) {
    out += format_number(static_cast<long long>(trial.sequence_number));
    out += "," + trial.sampler_tag;
    out += "," + format_number(static_cast<long long>(trial.seed));
    for (const ParamValue &value : trial.config.values) {
      out += "," + to_string(value);
    }
    out += "," + format_number(trial.objectives.acc);
    out += "," + format_number(trial.objectives.eng);
    out += "," + format_number(trial.objectives.rate);
    out += "\n";
  }
  write_file_atomic(path, out);
}

TrialStore TrialStore::load_csv(const std::string &path,
                                const SearchSpace &space) {
  std::vector<std::string> lines = split_lines(read_file(path));
  if (lines.empty()) {
    throw TrialLogError("trial log " + path + " is empty");
  }
  std::size_t param_count = space.parameters().size();
  std::size_t expected_fields = 3 + param_count + 3;
  TrialStore store;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    std::vector<std::string> fields = split_csv_line(lines[i]);
    if (fields.size() != expected_fields) {
      throw TrialLogError("trial log " + path + " line " +
                          std::to_string(i + 1) + ": expected " +
                          std::to_string(expected_fields) + " fields, got " +
                          std::to_string(fields.size()));
    }
    Configuration conf;
    for (std::size_t p = 0; p < param_count; ++p) {
      conf.values.push_back(
          param_value_from_text(space.parameters()[p], fields[3 + p]));
    }
    if (auto issue = space.validate_conf(conf)) {
      throw TrialLogError("trial log " + path + " line " +
                          std::to_string(i + 1) + ": " + *issue);
    }
    ObjectiveVector objectives;
    objectives.acc = std::strtod(fields[3 + param_count].c_str(), nullptr);
    objectives.eng = std::strtod(fields[4 + param_count].c_str(), nullptr);
    objectives.rate = std::strtod(fields[5 + param_count].c_str(), nullptr);
    std::string sampler = fields[1];
    std::uint64_t seed = std::strtoull(fields[2].c_str(), nullptr, 10);
    store.record(
        space, conf, [&objectives](const Configuration &) { return objectives; },
        sampler, seed);
  }
  return store;
}

}  // namespace saat
