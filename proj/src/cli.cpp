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

#include "gaitkit/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gaitkit/commands.hpp"
#include "gaitkit/gait.hpp"
#include "gaitkit/intervention.hpp"
#include "gaitkit/layout.hpp"
#include "gaitkit/log_io.hpp"
#include "gaitkit/rewards.hpp"
#include "gaitkit/rollout.hpp"
#include "gaitkit/swing.hpp"
#include "gaitkit/toy_ppo.hpp"

namespace gaitkit::cli {

namespace {

Foot foot_from_string(const std::string& name) {
  if (name == "left") return Foot::kLeft;
  if (name == "right") return Foot::kRight;
  throw std::invalid_argument("unknown foot: " + name);
}

JointLayout load_layout(const std::string& path) {
  return path.empty() ? JointLayout::default_humanoid()
                      : JointLayout::load(path);
}

void apply_range_override(ChannelRange& channel,
                          const std::vector<double>& bounds) {
  if (bounds.empty()) return;
  if (bounds.size() != 2 || !(bounds[0] <= bounds[1])) {
    throw std::invalid_argument("range override needs min <= max");
  }
  channel.initial_min = channel.finishing_min = channel.live_min = bounds[0];
  channel.initial_max = channel.finishing_max = channel.live_max = bounds[1];
  channel.default_value =
      std::clamp(channel.default_value, bounds[0], bounds[1]);
}

struct ClockArgs {
  std::string gait = "walking";
  std::string flying = "left";
  double frequency = 2.0;
  double sigma = 0.02;
  double dt = 0.02;
  double cycles = 2.0;
  std::string out = "clock.csv";
};

void run_clock(const ClockArgs& args) {
  const GaitPreset preset =
      preset_for(gait_from_string(args.gait), foot_from_string(args.flying));
  PhaseState state = make_phase_state(preset, args.frequency, args.dt);
  const ContactModelParams params{args.sigma};
  const int steps = static_cast<int>(
      std::ceil(args.cycles / (args.frequency * args.dt)));
  CsvWriter csv(args.out);
  csv.header({"t", "phi1", "phi2", "phibar1", "phibar2", "clockL", "clockR",
              "C1", "C2"});
  for (int t = 0; t <= steps; ++t) {
    const auto bars = homogenized_phases(state);
    const auto clocks = clock_values(state);
    const auto contact = contact_probabilities(state, params);
    csv.row({t * args.dt, state.phase[0], state.phase[1], bars[0], bars[1],
             clocks[0], clocks[1], contact[0], contact[1]});
    state = advance_phase(state);
  }
  std::cout << "wrote " << args.out << " (" << steps + 1 << " rows)\n";
}

struct TrajArgs {
  double peak = 0.15;
  double start = 0.0;
  double end = 0.0;
  int samples = 201;
  std::string out = "traj.csv";
  std::string svg;
};

void run_traj(const TrajArgs& args) {
  if (args.samples < 2) {
    throw std::invalid_argument("need at least two samples");
  }
  SwingProfile profile;
  profile.peak_height_m = args.peak;
  profile.start_height_m = args.start;
  profile.end_height_m = args.end;
  validate(profile);
  CsvWriter csv(args.out);
  csv.header({"phibar", "height", "velocity", "acceleration"});
  std::vector<double> xs, heights;
  for (int i = 0; i < args.samples; ++i) {
    const double phi_bar = static_cast<double>(i) / (args.samples - 1);
    const double h = target_height(phi_bar, profile);
    const auto [vel, acc] = target_derivatives(phi_bar, profile);
    csv.row({phi_bar, h, vel, acc});
    xs.push_back(phi_bar);
    heights.push_back(h);
  }
  if (!args.svg.empty()) {
    write_svg_lines(args.svg, xs, {{"height", heights}});
  }
  std::cout << "wrote " << args.out << "\n";
}

struct SampleArgs {
  std::string gait = "walking";
  std::string flying = "left";
  int n = 1000;
  std::uint64_t seed = 7;
  std::string out = "commands.jsonl";
  std::vector<double> vx, vy, wz, f, l, h, p, w;
};

void run_sample_commands(const SampleArgs& args) {
  const GaitKind kind = gait_from_string(args.gait);
  const GaitPreset preset = preset_for(kind, foot_from_string(args.flying));
  CommandRanges ranges = kind == GaitKind::kHopping
                             ? CommandRanges::hopping_defaults()
                             : CommandRanges::defaults();
  apply_range_override(ranges.vx, args.vx);
  apply_range_override(ranges.vy, args.vy);
  apply_range_override(ranges.yaw_rate, args.wz);
  apply_range_override(ranges.frequency, args.f);
  apply_range_override(ranges.swing_height, args.l);
  apply_range_override(ranges.body_height, args.h);
  apply_range_override(ranges.body_pitch, args.p);
  apply_range_override(ranges.waist_yaw, args.w);
  validate(ranges);

  const PhaseState phase = make_phase_state(preset, 2.0, 0.02);
  Rng rng(args.seed);
  std::ofstream out(args.out, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + args.out);
  for (int i = 0; i < args.n; ++i) {
    const CommandVector cmd = sample_command(ranges, preset, phase, rng);
    out << command_to_json_line(cmd) << '\n';
  }
  std::cout << "wrote " << args.out << " (" << args.n << " commands)\n";
}

struct RewardArgs {
  std::string log;
  std::string out = "breakdown.csv";
  std::string layout;
  double sigma = 0.02;
  std::string contact_form = "as_printed";
};

RewardConfig reward_config_from(const std::string& contact_form,
                                double sigma) {
  RewardConfig config;
  config.contact.sigma = sigma;
  if (contact_form == "as_printed") {
    config.contact_form = ContactRewardForm::kAsPrinted;
  } else if (contact_form == "negated_exponent") {
    config.contact_form = ContactRewardForm::kNegatedExponent;
  } else {
    throw std::invalid_argument("unknown contact reward form: " +
                                contact_form);
  }
  return config;
}

void run_reward(const RewardArgs& args) {
  const RolloutLog log = read_rollout_jsonl(args.log);
  if (log.steps.empty()) {
    throw std::invalid_argument("log has no steps");
  }
  const JointLayout layout = load_layout(args.layout);
  const RewardConfig config =
      reward_config_from(args.contact_form, args.sigma);

  CsvWriter csv(args.out);
  std::vector<std::string> columns{"t"};
  for (int i = 0; i < kRewardTermCount; ++i) {
    columns.push_back(to_string(static_cast<RewardTerm>(i)));
  }
  columns.push_back("total");
  csv.header(columns);

  std::vector<double> mean_weighted(kRewardTermCount, 0.0);
  std::vector<int> masked_steps(kRewardTermCount, 0);
  double mean_total = 0.0;
  for (const RobotStep& step : log.steps) {
    const RewardBreakdown b = apply_intervention_mask(
        evaluate_rewards(step, log.command, layout, config),
        step.intervention);
    std::vector<double> row{step.time_s};
    for (int i = 0; i < kRewardTermCount; ++i) {
      const double value = b.terms[i].masked ? 0.0 : b.terms[i].weighted;
      row.push_back(value);
      mean_weighted[i] += value;
      masked_steps[i] += b.terms[i].masked ? 1 : 0;
    }
    row.push_back(b.total());
    mean_total += b.total();
    csv.row(row);
  }
  const double n = static_cast<double>(log.steps.size());
  std::cout << "term                            mean_weighted  masked_steps\n";
  for (int i = 0; i < kRewardTermCount; ++i) {
    std::printf("%-32s %13.6g %13d\n",
                to_string(static_cast<RewardTerm>(i)), mean_weighted[i] / n,
                masked_steps[i]);
  }
  std::printf("%-32s %13.6g\n", "total", mean_total / n);
  std::cout << "wrote " << args.out << "\n";
}

struct MetricsArgs {
  std::string log;
  std::string out = "report.json";
};

void run_metrics(const MetricsArgs& args) {
  const RolloutLog log = read_rollout_jsonl(args.log);
  const TrackingErrorReport report = tracking_error(log.steps, log.command);
  write_tracking_report_json(report, args.out);
  std::cout << tracking_report_to_json(report) << "\n";
}

struct InterveneArgs {
  int steps = 1000000;
  double p = 0.005;
  std::uint64_t seed = 3;
  std::string out = "runs.csv";
};

void run_intervene(const InterveneArgs& args) {
  Rng rng(args.seed);
  const std::vector<int> runs = collect_indicator_runs(args.steps, args.p, rng);
  if (runs.empty()) {
    throw std::runtime_error("no completed runs; increase --steps");
  }
  std::map<int, int> histogram;
  double mean = 0.0;
  for (int r : runs) {
    ++histogram[r];
    mean += r;
  }
  mean /= runs.size();
  double var = 0.0;
  for (int r : runs) var += (r - mean) * (r - mean);
  var /= runs.size();

  CsvWriter csv(args.out);
  csv.header({"run_length", "count"});
  for (const auto& [length, count] : histogram) {
    csv.row({static_cast<double>(length), static_cast<double>(count)});
  }
  std::printf("runs=%zu mean=%.4f variance=%.4f expected_mean=%.4f\n",
              runs.size(), mean, var, (1.0 - args.p) / args.p);
  std::cout << "wrote " << args.out << "\n";
}

struct RolloutArgs {
  RolloutConfig config;
  std::string gait = "walking";
  std::string flying = "left";
  std::string out = "rollout.jsonl";
  std::string export_dir;
  bool svg = false;
  std::string layout;
};

void run_rollout(const RolloutArgs& args) {
  RolloutConfig config = args.config;
  config.gait = gait_from_string(args.gait);
  config.hopping_flying_leg = foot_from_string(args.flying);
  const JointLayout layout = load_layout(args.layout);
  const RolloutLog log = run_oracle_rollout(config, layout);
  write_rollout_jsonl(log, args.out);
  std::cout << "wrote " << args.out << " (" << log.steps.size()
            << " steps)\n";
  if (!args.export_dir.empty()) {
    RewardConfig reward_config;
    reward_config.contact.sigma = config.contact_sigma;
    export_curves(log, layout, reward_config, args.export_dir, args.svg);
    std::cout << "wrote curves to " << args.export_dir << "\n";
  }
}

struct TrainToyArgs {
  ToyPpoConfig config;
  std::string out;
};

void run_train_toy(const TrainToyArgs& args) {
  const ToyPpoReport report = run_toy_ppo(args.config);
  const std::string body = toy_report_to_json(report);
  if (!args.out.empty()) {
    std::ofstream out(args.out, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + args.out);
    out << body << '\n';
  }
  std::cout << body << "\n";
  if (report.diverged) {
    throw std::runtime_error("training diverged (non-finite loss)");
  }
}

struct LayoutArgs {
  std::string out;
  std::string check;
};

void run_layout(const LayoutArgs& args) {
  if (!args.check.empty()) {
    const JointLayout layout = JointLayout::load(args.check);
    std::cout << args.check << ": ok (" << layout.dof() << " joints, "
              << layout.upper_dof() << " upper)\n";
  }
  if (!args.out.empty()) {
    std::ofstream out(args.out, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + args.out);
    JointLayout::default_humanoid().write_descriptor(out);
    std::cout << "wrote " << args.out << "\n";
  }
  if (args.check.empty() && args.out.empty()) {
    JointLayout::default_humanoid().write_descriptor(std::cout);
  }
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Humanoid locomotion command-space and reward workbench"};
  app.require_subcommand(1);

  ClockArgs clock_args;
  auto* clock = app.add_subcommand(
      "clock", "Emit gait phases, clocks, and contact probabilities as CSV");
  clock->add_option("--gait", clock_args.gait,
                    "walking|jumping|standing|hopping");
  clock->add_option("--flying", clock_args.flying,
                    "hopping flying leg: left|right");
  clock->add_option("--f", clock_args.frequency, "gait frequency [Hz]");
  clock->add_option("--sigma", clock_args.sigma, "contact relaxation width");
  clock->add_option("--dt", clock_args.dt, "control step [s]");
  clock->add_option("--cycles", clock_args.cycles, "number of gait cycles");
  clock->add_option("--out", clock_args.out, "output CSV path");
  clock->set_config("--config");
  clock->callback([&clock_args] { run_clock(clock_args); });

  TrajArgs traj_args;
  auto* traj = app.add_subcommand(
      "traj", "Emit the swing-height trajectory and derivatives as CSV");
  traj->add_option("--l", traj_args.peak, "peak swing height [m]");
  traj->add_option("--start", traj_args.start, "start height [m]");
  traj->add_option("--end", traj_args.end, "end height [m]");
  traj->add_option("--samples", traj_args.samples, "grid resolution");
  traj->add_option("--out", traj_args.out, "output CSV path");
  traj->add_option("--svg", traj_args.svg, "optional SVG path");
  traj->set_config("--config");
  traj->callback([&traj_args] { run_traj(traj_args); });

  SampleArgs sample_args;
  auto* sample = app.add_subcommand("sample-commands",
                                    "Sample command vectors as JSON Lines");
  sample->add_option("--gait", sample_args.gait,
                     "walking|jumping|standing|hopping");
  sample->add_option("--flying", sample_args.flying,
                     "hopping flying leg: left|right");
  sample->add_option("--n", sample_args.n, "number of samples");
  sample->add_option("--seed", sample_args.seed, "random seed");
  sample->add_option("--out", sample_args.out, "output JSONL path");
  sample->add_option("--vx-range", sample_args.vx, "override: min max")
      ->expected(2);
  sample->add_option("--vy-range", sample_args.vy, "override: min max")
      ->expected(2);
  sample->add_option("--wz-range", sample_args.wz, "override: min max")
      ->expected(2);
  sample->add_option("--f-range", sample_args.f, "override: min max")
      ->expected(2);
  sample->add_option("--l-range", sample_args.l, "override: min max")
      ->expected(2);
  sample->add_option("--h-range", sample_args.h, "override: min max")
      ->expected(2);
  sample->add_option("--p-range", sample_args.p, "override: min max")
      ->expected(2);
  sample->add_option("--w-range", sample_args.w, "override: min max")
      ->expected(2);
  sample->set_config("--config");
  sample->callback([&sample_args] { run_sample_commands(sample_args); });

  RewardArgs reward_args;
  auto* reward = app.add_subcommand(
      "reward", "Evaluate the reward table over a rollout log");
  reward->add_option("--log", reward_args.log, "rollout JSONL path")
      ->required();
  reward->add_option("--out", reward_args.out, "per-step breakdown CSV");
  reward->add_option("--layout", reward_args.layout,
                     "joint layout descriptor (default built-in)");
  reward->add_option("--sigma", reward_args.sigma,
                     "contact relaxation width");
  reward->add_option("--contact-form", reward_args.contact_form,
                     "as_printed|negated_exponent");
  reward->set_config("--config");
  reward->callback([&reward_args] { run_reward(reward_args); });

  MetricsArgs metrics_args;
  auto* metrics = app.add_subcommand(
      "metrics", "Episodic tracking-error report for a rollout log");
  metrics->add_option("--log", metrics_args.log, "rollout JSONL path")
      ->required();
  metrics->add_option("--out", metrics_args.out, "report JSON path");
  metrics->set_config("--config");
  metrics->callback([&metrics_args] { run_metrics(metrics_args); });

  InterveneArgs intervene_args;
  auto* intervene = app.add_subcommand(
      "intervene", "Indicator run-length histogram of the flip process");
  intervene->add_option("--steps", intervene_args.steps, "simulated steps");
  intervene->add_option("--p", intervene_args.p, "per-step flip probability");
  intervene->add_option("--seed", intervene_args.seed, "random seed");
  intervene->add_option("--out", intervene_args.out, "histogram CSV path");
  intervene->set_config("--config");
  intervene->callback([&intervene_args] { run_intervene(intervene_args); });

  RolloutArgs rollout_args;
  auto* rollout = app.add_subcommand(
      "rollout", "Run the scripted oracle robot and log JSON Lines");
  rollout->set_help_flag("--help", "print help");  // frees --h for the command
  rollout->add_option("--gait", rollout_args.gait,
                      "walking|jumping|standing|hopping");
  rollout->add_option("--flying", rollout_args.flying,
                      "hopping flying leg: left|right");
  rollout->add_option("--vx", rollout_args.config.vx_mps, "command [m/s]");
  rollout->add_option("--vy", rollout_args.config.vy_mps, "command [m/s]");
  rollout->add_option("--wz", rollout_args.config.yaw_rate_rps,
                      "command [rad/s]");
  rollout->add_option("--f", rollout_args.config.frequency_hz,
                      "gait frequency [Hz]");
  rollout->add_option("--l", rollout_args.config.swing_height_m,
                      "swing height [m]");
  rollout->add_option("--h", rollout_args.config.body_height_m,
                      "body height offset [m]");
  rollout->add_option("--p", rollout_args.config.body_pitch_rad,
                      "body pitch [rad]");
  rollout->add_option("--w", rollout_args.config.waist_yaw_rad,
                      "waist yaw [rad]");
  rollout->add_option("--steps", rollout_args.config.steps, "episode length");
  rollout->add_option("--lag", rollout_args.config.lag,
                      "first-order tracking lag in [0,1)");
  rollout->add_option("--dt", rollout_args.config.dt_s, "control step [s]");
  rollout->add_option("--seed", rollout_args.config.seed, "random seed");
  rollout->add_option("--p-flip", rollout_args.config.p_flip,
                      "intervention flip probability (0 disables)");
  rollout->add_option("--alpha", rollout_args.config.intervention_alpha,
                      "noise blend fraction");
  rollout->add_option("--mass", rollout_args.config.mass_kg, "mass [kg]");
  rollout->add_option("--sigma", rollout_args.config.contact_sigma,
                      "contact relaxation width");
  rollout->add_option("--layout", rollout_args.layout,
                      "joint layout descriptor (default built-in)");
  rollout->add_option("--out", rollout_args.out, "output JSONL path");
  rollout->add_option("--export-dir", rollout_args.export_dir,
                      "also write curve CSVs into this directory");
  rollout->add_flag("--svg", rollout_args.svg, "also write SVG plots");
  rollout->set_config("--config");
  rollout->callback([&rollout_args] { run_rollout(rollout_args); });

  TrainToyArgs toy_args;
  auto* toy = app.add_subcommand(
      "train-toy", "Train the point-mass tracking task with the full loss "
                   "stack");
  toy->add_option("--epochs", toy_args.config.epochs, "training epochs");
  toy->add_option("--seed", toy_args.config.seed, "random seed");
  toy->add_option("--beta", toy_args.config.beta_symmetry,
                  "symmetry loss weight");
  toy->add_option("--episodes", toy_args.config.episodes_per_epoch,
                  "episodes per epoch");
  toy->add_option("--episode-length", toy_args.config.episode_length,
                  "steps per episode");
  toy->add_option("--lr", toy_args.config.learning_rate, "Adam step size");
  toy->add_option("--gamma", toy_args.config.gamma, "discount");
  toy->add_option("--sigma", toy_args.config.action_sigma,
                  "exploration stddev");
  toy->add_flag("--gae", toy_args.config.use_gae,
                "use generalized advantage estimation");
  toy->add_option("--out", toy_args.out, "report JSON path");
  toy->set_config("--config");
  toy->callback([&toy_args] { run_train_toy(toy_args); });

  LayoutArgs layout_args;
  auto* layout = app.add_subcommand(
      "layout", "Dump or validate a joint layout descriptor");
  layout->add_option("--out", layout_args.out,
                     "write the built-in descriptor here");
  layout->add_option("--check", layout_args.check,
                     "validate this descriptor file");
  layout->callback([&layout_args] { run_layout(layout_args); });

  try {
    app.parse(argc, argv);
    return 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace gaitkit::cli
