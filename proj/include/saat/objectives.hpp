#pragma once

#include <array>
#include <map>
#include <string>

#include <json.hpp>

#include "saat/errors.hpp"
#include "saat/params.hpp"

namespace saat {

enum class Direction { maximize, minimize };

struct ObjectiveSpec {
  std::string name;
  Direction direction;
  std::string units;
};

// The toolkit's objective triple: detection accuracy (maximize, mAP-like,
// [0,1]), energy per 120 s window (minimize, Wh), processed frames per
// window (maximize, count).
const std::array<ObjectiveSpec, 3> &default_objectives();
std::array<Direction, 3> default_directions();

struct ObjectiveVector {
  double acc = 0.0;
  double eng = 0.0;
  double rate = 0.0;

  bool operator==(const ObjectiveVector &other) const = default;
};

// Deterministic stand-in for hardware measurement: per-model base accuracy
// and latencies, per-resolution factors, and a power budget, all combined in
// closed form by evaluate().
struct DeviceModelParams {
  struct ModelRow {
    double base_accuracy = 0.0;
    double cpu_latency = 0.0;  // seconds per frame
    double tpu_latency = 0.0;  // seconds per frame
  };

  std::map<std::string, ModelRow> models;
  std::map<std::string, double> res_latency_factor;
  std::map<std::string, double> res_acc_factor;

  double p_idle_w = 0.0;
  double p_cam_base_w = 0.0;
  double p_cam_per_fps_w = 0.0;
  double p_tpu_idle_w = 0.0;
  double p_cpu_active_w = 0.0;
  double p_tpu_active_w = 0.0;

  double window_seconds = 120.0;
};

// The built-in synthetic device table (the default the bundled data file
// mirrors).
DeviceModelParams synthetic_device_model();

DeviceModelParams parse_device_model(const nlohmann::json &document);
DeviceModelParams parse_device_model_file(const std::string &path);

// Named view of one configuration of the pedestrian-style space (resolution,
// fps, model, threshold, tpu), resolved by parameter name so parameter order
// in the space document does not matter.
struct ConfigView {
  std::string resolution;
  double fps = 0.0;
  std::string model;
  double threshold = 0.0;
  bool tpu = false;
};

ConfigView view_config(const SearchSpace &space, const Configuration &conf);

double latency_seconds(const DeviceModelParams &params, const ConfigView &view);

ObjectiveVector evaluate(const DeviceModelParams &params,
                         const SearchSpace &space, const Configuration &conf);

}  // namespace saat
