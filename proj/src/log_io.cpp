// Copyright 2026 The gaitkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gaitkit/log_io.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace gaitkit {

namespace {

using nlohmann::json;

json vec_to_json(const Eigen::VectorXd& v) {
  json arr = json::array();
  for (int i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

Eigen::VectorXd vec_from_json(const json& arr) {
  Eigen::VectorXd v(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    v(static_cast<int>(i)) = arr[i].get<double>();
  }
  return v;
}

json vec2_to_json(const Eigen::Vector2d& v) { return json::array({v.x(), v.y()}); }
json vec3_to_json(const Eigen::Vector3d& v) {
  return json::array({v.x(), v.y(), v.z()});
}

Eigen::Vector2d vec2_from_json(const json& arr) {
  return {arr[0].get<double>(), arr[1].get<double>()};
}
Eigen::Vector3d vec3_from_json(const json& arr) {
  return {arr[0].get<double>(), arr[1].get<double>(), arr[2].get<double>()};
}

json command_to_json(const CommandVector& cmd) {
  return json{{"gait", to_string(cmd.gait)},
              {"vx", cmd.task.vx_mps},
              {"vy", cmd.task.vy_mps},
              {"wz", cmd.task.yaw_rate_rps},
              {"f", cmd.behavior.frequency_hz},
              {"l", cmd.behavior.swing_height_m},
              {"h", cmd.behavior.body_height_m},
              {"p", cmd.behavior.body_pitch_rad},
              {"w", cmd.behavior.waist_yaw_rad},
              {"psi", cmd.behavior.phase_offset},
              {"phi_stance", cmd.behavior.duty_cycle},
              {"clock_left", cmd.behavior.clock_left},
              {"clock_right", cmd.behavior.clock_right}};
}

CommandVector command_from_json(const json& j) {
  CommandVector cmd;
  cmd.gait = gait_from_string(j.at("gait").get<std::string>());
  cmd.task.vx_mps = j.at("vx").get<double>();
  cmd.task.vy_mps = j.at("vy").get<double>();
  cmd.task.yaw_rate_rps = j.at("wz").get<double>();
  cmd.behavior.frequency_hz = j.at("f").get<double>();
  cmd.behavior.swing_height_m = j.at("l").get<double>();
  cmd.behavior.body_height_m = j.at("h").get<double>();
  cmd.behavior.body_pitch_rad = j.at("p").get<double>();
  cmd.behavior.waist_yaw_rad = j.at("w").get<double>();
  cmd.behavior.phase_offset = j.at("psi").get<double>();
  cmd.behavior.duty_cycle = j.at("phi_stance").get<double>();
  cmd.behavior.clock_left = j.at("clock_left").get<double>();
  cmd.behavior.clock_right = j.at("clock_right").get<double>();
  return cmd;
}

json config_to_json(const RolloutConfig& c) {
  return json{{"gait", to_string(c.gait)},
              {"hopping_flying_leg",
               c.hopping_flying_leg == Foot::kLeft ? "left" : "right"},
              {"vx", c.vx_mps},
              {"vy", c.vy_mps},
              {"wz", c.yaw_rate_rps},
              {"f", c.frequency_hz},
              {"l", c.swing_height_m},
              {"h", c.body_height_m},
              {"p", c.body_pitch_rad},
              {"w", c.waist_yaw_rad},
              {"steps", c.steps},
              {"lag", c.lag},
              {"dt", c.dt_s},
              {"seed", c.seed},
              {"p_flip", c.p_flip},
              {"alpha", c.intervention_alpha},
              {"noise_margin", c.noise_margin},
              {"mass_kg", c.mass_kg},
              {"sigma", c.contact_sigma}};
}

RolloutConfig config_from_json(const json& j) {
  RolloutConfig c;
  c.gait = gait_from_string(j.at("gait").get<std::string>());
  c.hopping_flying_leg =
      j.at("hopping_flying_leg").get<std::string>() == "left" ? Foot::kLeft
                                                              : Foot::kRight;
  c.vx_mps = j.at("vx").get<double>();
  c.vy_mps = j.at("vy").get<double>();
  c.yaw_rate_rps = j.at("wz").get<double>();
  c.frequency_hz = j.at("f").get<double>();
  c.swing_height_m = j.at("l").get<double>();
  c.body_height_m = j.at("h").get<double>();
  c.body_pitch_rad = j.at("p").get<double>();
  c.waist_yaw_rad = j.at("w").get<double>();
  c.steps = j.at("steps").get<int>();
  c.lag = j.at("lag").get<double>();
  c.dt_s = j.at("dt").get<double>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.p_flip = j.at("p_flip").get<double>();
  c.intervention_alpha = j.at("alpha").get<double>();
  c.noise_margin = j.at("noise_margin").get<double>();
  c.mass_kg = j.at("mass_kg").get<double>();
  c.contact_sigma = j.at("sigma").get<double>();
  return c;
}

json step_to_json(const RobotStep& s) {
  json feet = json::array();
  for (const FootState& foot : s.feet) {
    feet.push_back(json{{"pos_xy", vec2_to_json(foot.position_xy)},
                        {"vel_xy", vec2_to_json(foot.velocity_xy)},
                        {"swing_height", foot.swing_height_m},
                        {"force", vec3_to_json(foot.contact_force)}});
  }
  return json{{"type", "step"},
              {"i", s.index},
              {"t", s.time_s},
              {"base_lin_vel", vec3_to_json(s.base_lin_vel)},
              {"base_ang_vel", vec3_to_json(s.base_ang_vel)},
              {"body_height", s.body_height_m},
              {"body_pitch", s.body_pitch_rad},
              {"body_roll", s.body_roll_rad},
              {"waist_yaw", s.waist_yaw_rad},
              {"joint_pos", vec_to_json(s.joint_pos)},
              {"joint_vel", vec_to_json(s.joint_vel)},
              {"joint_acc", vec_to_json(s.joint_acc)},
              {"joint_torque", vec_to_json(s.joint_torque)},
              {"feet", feet},
              {"action", vec_to_json(s.action)},
              {"action_prev", vec_to_json(s.action_prev)},
              {"action_prev2", vec_to_json(s.action_prev2)},
              {"phase_bar", json::array({s.phase_bar[0], s.phase_bar[1]})},
              {"friction", s.friction},
              {"collision", vec_to_json(s.collision_flags)},
              {"intervention", s.intervention},
              {"terminated", s.terminated}};
}

RobotStep step_from_json(const json& j) {
  RobotStep s;
  s.index = j.at("i").get<int>();
  s.time_s = j.at("t").get<double>();
  s.base_lin_vel = vec3_from_json(j.at("base_lin_vel"));
  s.base_ang_vel = vec3_from_json(j.at("base_ang_vel"));
  s.body_height_m = j.at("body_height").get<double>();
  s.body_pitch_rad = j.at("body_pitch").get<double>();
  s.body_roll_rad = j.at("body_roll").get<double>();
  s.waist_yaw_rad = j.at("waist_yaw").get<double>();
  s.joint_pos = vec_from_json(j.at("joint_pos"));
  s.joint_vel = vec_from_json(j.at("joint_vel"));
  s.joint_acc = vec_from_json(j.at("joint_acc"));
  s.joint_torque = vec_from_json(j.at("joint_torque"));
  const json& feet = j.at("feet");
  for (int i = 0; i < 2; ++i) {
    s.feet[i].position_xy = vec2_from_json(feet.at(i).at("pos_xy"));
    s.feet[i].velocity_xy = vec2_from_json(feet.at(i).at("vel_xy"));
    s.feet[i].swing_height_m = feet.at(i).at("swing_height").get<double>();
    s.feet[i].contact_force = vec3_from_json(feet.at(i).at("force"));
  }
  s.action = vec_from_json(j.at("action"));
  s.action_prev = vec_from_json(j.at("action_prev"));
  s.action_prev2 = vec_from_json(j.at("action_prev2"));
  s.phase_bar[0] = j.at("phase_bar").at(0).get<double>();
  s.phase_bar[1] = j.at("phase_bar").at(1).get<double>();
  s.friction = j.at("friction").get<double>();
  s.collision_flags = vec_from_json(j.at("collision"));
  s.intervention = j.at("intervention").get<bool>();
  s.terminated = j.at("terminated").get<bool>();
  return s;
}

}  // namespace

void write_rollout_jsonl(const RolloutLog& log, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  json header{{"type", "header"},
              {"config", config_to_json(log.config)},
              {"command", command_to_json(log.command)}};
  out << header.dump() << '\n';
  for (const RobotStep& step : log.steps) {
    out << step_to_json(step).dump() << '\n';
  }
  if (!out) throw std::runtime_error("short write: " + path);
}

RolloutLog read_rollout_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open log: " + path);
  RolloutLog log;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const json j = json::parse(line);
    const std::string type = j.at("type").get<std::string>();
    if (type == "header") {
      log.config = config_from_json(j.at("config"));
      log.command = command_from_json(j.at("command"));
      have_header = true;
    } else if (type == "step") {
      log.steps.push_back(step_from_json(j));
    } else {
      throw std::runtime_error("unknown record type: " + type);
    }
  }
  if (!have_header) {
    throw std::runtime_error("log has no header record: " + path);
  }
  return log;
}

std::string command_to_json_line(const CommandVector& cmd) {
  return command_to_json(cmd).dump();
}

std::string tracking_report_to_json(const TrackingErrorReport& report) {
  json j{{"e_vx", report.e_vx},
         {"e_vy", report.e_vy},
         {"e_omega", report.e_omega},
         {"e_height", report.e_height},
         {"e_pitch", report.e_pitch},
         {"e_waist", report.e_waist},
         {"completed_cycles", report.completed_cycles},
         {"foot_displacement_m", report.foot_displacement_m}};
  j["e_frequency"] =
      report.e_frequency ? json(*report.e_frequency) : json(nullptr);
  j["e_swing_height"] =
      report.e_swing_height ? json(*report.e_swing_height) : json(nullptr);
  return j.dump(2);
}

void write_tracking_report_json(const TrackingErrorReport& report,
                                const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << tracking_report_to_json(report) << '\n';
}

CsvWriter::CsvWriter(const std::string& path) : out_(path, std::ios::binary) {
  if (!out_) throw std::runtime_error("cannot open for writing: " + path);
}

void CsvWriter::header(const std::vector<std::string>& columns) {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out_ << ',';
    out_ << columns[i];
  }
  out_ << '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out_ << ',';
    out_ << format_double(values[i]);
  }
  out_ << '\n';
}

std::string format_double(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.10g", value);
  return buffer;
}

void write_svg_lines(
    const std::string& path, const std::vector<double>& x,
    const std::vector<std::pair<std::string, std::vector<double>>>& series) {
  if (x.empty() || series.empty()) {
    throw std::invalid_argument("nothing to plot");
  }
  double y_min = series[0].second.at(0);
  double y_max = y_min;
  for (const auto& [name, values] : series) {
    if (values.size() != x.size()) {
      throw std::invalid_argument("series length mismatch: " + name);
    }
    for (double v : values) {
      y_min = std::min(y_min, v);
      y_max = std::max(y_max, v);
    }
  }
  if (y_max == y_min) y_max = y_min + 1.0;
  const double x_min = x.front();
  const double x_max = x.back() == x.front() ? x.front() + 1.0 : x.back();

  const int width = 720;
  const int height = 320;
  const int margin = 40;
  const auto map_x = [&](double v) {
    return margin + (v - x_min) / (x_max - x_min) * (width - 2 * margin);
  };
  const auto map_y = [&](double v) {
    return height - margin -
           (v - y_min) / (y_max - y_min) * (height - 2 * margin);
  };

  static const char* kColors[] = {"#4363d8", "#3cb44b", "#e6194b", "#f58231"};
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  int color = 0;
  int label_y = margin;
  for (const auto& [name, values] : series) {
    out << "<polyline fill=\"none\" stroke=\"" << kColors[color % 4]
        << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < x.size(); ++i) {
      out << format_double(map_x(x[i])) << ','
          << format_double(map_y(values[i])) << ' ';
    }
    out << "\"/>\n";
    out << "<text x=\"" << width - margin - 100 << "\" y=\"" << label_y
        << "\" fill=\"" << kColors[color % 4] << "\" font-size=\"12\">"
        << name << "</text>\n";
    label_y += 16;
    ++color;
  }
  out << "</svg>\n";
}

}  // namespace gaitkit
