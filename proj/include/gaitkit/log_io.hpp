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

#ifndef GAITKIT_LOG_IO_HPP_
#define GAITKIT_LOG_IO_HPP_

#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "gaitkit/rewards.hpp"
#include "gaitkit/rollout.hpp"

namespace gaitkit {

// Rollout logs are JSON Lines: a header record first, then one step
// record per line, so identical configurations reproduce identical bytes.
void write_rollout_jsonl(const RolloutLog& log, const std::string& path);
RolloutLog read_rollout_jsonl(const std::string& path);

std::string command_to_json_line(const CommandVector& cmd);

void write_tracking_report_json(const TrackingErrorReport& report,
                                const std::string& path);
std::string tracking_report_to_json(const TrackingErrorReport& report);

// Minimal CSV writer with a fixed numeric format.
class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path);
  void header(const std::vector<std::string>& columns);
  void row(const std::vector<double>& values);

 private:
  std::ofstream out_;
};

std::string format_double(double value);

// A single-plot SVG with one polyline per named series over a shared
// x axis.
void write_svg_lines(
    const std::string& path, const std::vector<double>& x,
    const std::vector<std::pair<std::string, std::vector<double>>>& series);

}  // namespace gaitkit

#endif  // GAITKIT_LOG_IO_HPP_
