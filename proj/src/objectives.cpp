#include "saat/objectives.hpp"

#include <cmath>

#include "saat/io.hpp"

namespace saat {

const std::array<ObjectiveSpec, 3> &default_objectives() {
  static const std::array<ObjectiveSpec, 3> specs = {{
      {"acc", Direction::maximize, "mAP in [0,1]"},
      {"eng", Direction::minimize, "Wh per 120 s window"},
      {"rate", Direction::maximize, "frames per 120 s window"},
  }};
  return specs;
}

std::array<Direction, 3> default_directions() {
  return {Direction::maximize, Direction::minimize, Direction::maximize};
}

DeviceModelParams synthetic_device_model() {
  DeviceModelParams params;
  params.models = {
      {"SSD MobileNet V1", {0.30, 0.18, 0.012}},
      {"SSD/FPN MobileNet V1 TF2", {0.32, 0.45, 0.035}},
      {"SSD MobileNet V2", {0.32, 0.20, 0.013}},
      {"SSD MobileNet V2 TF2", {0.33, 0.22, 0.014}},
      {"SSDLite MobileDet", {0.36, 0.25, 0.011}},
      {"EfficientDet-Lite0", {0.38, 0.40, 0.030}},
      {"EfficientDet-Lite1", {0.41, 0.55, 0.045}},
      {"EfficientDet-Lite2", {0.44, 0.75, 0.065}},
      {"EfficientDet-Lite3", {0.48, 1.10, 0.095}},
  };
  params.res_latency_factor = {
      {"640x480", 1.0}, {"1280x720", 1.6}, {"1920x1080", 2.4}};
  params.res_acc_factor = {
      {"640x480", 0.92}, {"1280x720", 1.0}, {"1920x1080", 1.03}};
  params.p_idle_w = 2.7;
  params.p_cam_base_w = 0.2;
  params.p_cam_per_fps_w = 0.01;
  params.p_tpu_idle_w = 0.5;
  params.p_cpu_active_w = 3.5;
  params.p_tpu_active_w = 2.0;
  params.window_seconds = 120.0;
  return params;
}

namespace {

double require_number(const nlohmann::json &object, const char *field) {
  if (!object.contains(field) || !object[field].is_number()) {
    throw DeviceModelError(std::string("device model is missing numeric '") +
                           field + "'");
  }
  return object[field].get<double>();
}

}  // namespace

DeviceModelParams parse_device_model(const nlohmann::json &document) {
  if (!document.is_object()) {
    throw DeviceModelError("device model document must be an object");
  }
  DeviceModelParams params;
  if (!document.contains("models") || !document["models"].is_array() ||
      document["models"].empty()) {
    throw DeviceModelError("device model needs a non-empty 'models' list");
  }
  for (const nlohmann::json &row : document["models"]) {
    if (!row.contains("name") || !row["name"].is_string()) {
      throw DeviceModelError("model row is missing a string 'name'");
    }
    std::string name = row["name"].get<std::string>();
    DeviceModelParams::ModelRow entry;
    entry.base_accuracy = require_number(row, "base_accuracy");
    entry.cpu_latency = require_number(row, "cpu_latency_s");
    entry.tpu_latency = require_number(row, "tpu_latency_s");
    if (entry.cpu_latency <= 0 || entry.tpu_latency <= 0) {
      throw DeviceModelError("model '" + name +
                             "' has a non-positive latency");
    }
    params.models[name] = entry;
  }
  for (const char *table : {"res_latency_factor", "res_acc_factor"}) {
    if (!document.contains(table) || !document[table].is_object()) {
      throw DeviceModelError(std::string("device model needs object '") +
                             table + "'");
    }
    auto &target = std::string(table) == "res_latency_factor"
                       ? params.res_latency_factor
                       : params.res_acc_factor;
    for (const auto &[key, value] : document[table].items()) {
      if (!value.is_number()) {
        throw DeviceModelError(std::string(table) + " entry '" + key +
                               "' is not a number");
      }
      target[key] = value.get<double>();
    }
  }
  const nlohmann::json &powers = document.contains("powers_w")
                                     ? document["powers_w"]
                                     : nlohmann::json::object();
  params.p_idle_w = require_number(powers, "idle");
  params.p_cam_base_w = require_number(powers, "camera_base");
  params.p_cam_per_fps_w = require_number(powers, "camera_per_fps");
  params.p_tpu_idle_w = require_number(powers, "tpu_idle");
  params.p_cpu_active_w = require_number(powers, "cpu_active");
  params.p_tpu_active_w = require_number(powers, "tpu_active");
  params.window_seconds = require_number(document, "window_seconds");
  if (params.window_seconds <= 0) {
    throw DeviceModelError("window_seconds must be positive");
  }
  return params;
}

DeviceModelParams parse_device_model_file(const std::string &path) {
  try {
    return parse_device_model(load_json_file(path));
  } catch (const DeviceModelError &err) {
    throw DeviceModelError(std::string(err.what()) + " (in " + path + ")");
  }
}

ConfigView view_config(const SearchSpace &space, const Configuration &conf) {
  if (auto issue = space.validate_conf(conf)) {
    throw DeviceModelError("invalid configuration: " + *issue);
  }
  ConfigView view;
  view.resolution = std::get<std::string>(
      conf.values[space.parameter_position("resolution")]);
  view.fps = std::get<double>(conf.values[space.parameter_position("fps")]);
  view.model =
      std::get<std::string>(conf.values[space.parameter_position("model")]);
  view.threshold =
      std::get<double>(conf.values[space.parameter_position("threshold")]);
  view.tpu = std::get<bool>(conf.values[space.parameter_position("tpu")]);
  return view;
}

double latency_seconds(const DeviceModelParams &params,
                       const ConfigView &view) {
  auto model = params.models.find(view.model);
  if (model == params.models.end()) {
    throw DeviceModelError("device model has no entry for model '" +
                           view.model + "'");
  }
  auto factor = params.res_latency_factor.find(view.resolution);
  if (factor == params.res_latency_factor.end()) {
    throw DeviceModelError("device model has no latency factor for "
                           "resolution '" + view.resolution + "'");
  }
  double base = view.tpu ? model->second.tpu_latency : model->second.cpu_latency;
  return base * factor->second;
}

ObjectiveVector evaluate(const DeviceModelParams &params,
                         const SearchSpace &space, const Configuration &conf) {
  ConfigView view = view_config(space, conf);
  auto model = params.models.find(view.model);
  if (model == params.models.end()) {
    throw DeviceModelError("device model has no entry for model '" +
                           view.model + "'");
  }
  auto acc_factor = params.res_acc_factor.find(view.resolution);
  if (acc_factor == params.res_acc_factor.end()) {
    throw DeviceModelError("device model has no accuracy factor for "
                           "resolution '" + view.resolution + "'");
  }

  double effective_latency = latency_seconds(params, view);
  double effective_rate = std::min(view.fps, 1.0 / effective_latency);
  double duty = std::min(1.0, effective_rate * effective_latency);

  ObjectiveVector objectives;
  objectives.rate =
      std::floor(effective_rate * params.window_seconds);
  double power_w = params.p_idle_w +
                   (params.p_cam_base_w + params.p_cam_per_fps_w * view.fps) +
                   (view.tpu ? params.p_tpu_idle_w : 0.0) +
                   (view.tpu ? params.p_tpu_active_w : params.p_cpu_active_w) *
                       duty;
  objectives.eng = power_w * params.window_seconds / 3600.0;

  // Accuracy peaks at detection threshold 0.4: g(T) = 1 - (T - 0.4)^2 / 0.5.
  double g = 1.0 - (view.threshold - 0.4) * (view.threshold - 0.4) / 0.5;
  objectives.acc = model->second.base_accuracy * acc_factor->second * g;
  return objectives;
}

}  // namespace saat
