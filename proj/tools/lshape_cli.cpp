// Copyright 2026 The lshape Authors
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

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lshape/config.hpp"
#include "lshape/pipeline.hpp"
#include "lshape/scan_io.hpp"
#include "lshape/scan_sim.hpp"
#include "lshape/svg_plot.hpp"

namespace {

// Exit codes beyond CLI11's own usage-error codes.
constexpr int kExitScanParse = 2;
constexpr int kExitConfig = 3;
constexpr int kExitIo = 4;

lshape::ScanFormat resolve_format(const std::string& path,
                                  const std::string& format_flag) {
  if (format_flag == "csv") {
    return lshape::ScanFormat::csv;
  }
  if (format_flag == "jsonl") {
    return lshape::ScanFormat::jsonl;
  }
  const auto guessed = lshape::guess_format(path);
  if (!guessed) {
    throw lshape::ConfigError("cannot infer scan format from '" + path +
                              "'; pass --format csv|jsonl");
  }
  return *guessed;
}

// Options shared by every verb that reads scans and runs the pipeline.
struct CommonOpts {
  std::string in;
  std::string format;
  std::string config_path;
  std::vector<std::string> sets;
  std::string segment_method = "dbscan";
};

void add_common(CLI::App& cmd, CommonOpts& opts, bool with_method = true) {
  cmd.add_option("-i,--in", opts.in, "Input scan file")->required();
  cmd.add_option("--format", opts.format,
                 "Input format (default: from file extension)")
      ->check(CLI::IsMember({"csv", "jsonl"}));
  cmd.add_option("-c,--config", opts.config_path,
                 "Config file with key = value lines");
  cmd.add_option("--set", opts.sets,
                 "Override one config key, e.g. --set dbscan.epsilon=0.5");
  if (with_method) {
    cmd.add_option("--segment-method", opts.segment_method,
                   "Clustering algorithm")
        ->check(CLI::IsMember({"dbscan", "meanshift"}));
  }
}

lshape::PipelineConfig build_config(const CommonOpts& opts) {
  lshape::PipelineConfig cfg;
  if (!opts.config_path.empty()) {
    cfg = lshape::load_config(opts.config_path, cfg);
  }
  if (!opts.sets.empty()) {
    std::string text;
    for (const std::string& assignment : opts.sets) {
      text += assignment;
      text += '\n';
    }
    cfg = lshape::parse_config(text, cfg);
  }
  return cfg;
}

lshape::SegmentMethod segment_method(const CommonOpts& opts) {
  return opts.segment_method == "meanshift" ? lshape::SegmentMethod::meanshift
                                            : lshape::SegmentMethod::dbscan;
}

std::vector<lshape::Scan> read_input(const CommonOpts& opts) {
  return lshape::read_scans(opts.in, resolve_format(opts.in, opts.format));
}

void setup_gen(CLI::App& app) {
  auto* cmd = app.add_subcommand("gen", "Synthesize laser scans of a scene");
  auto preset = std::make_shared<std::string>();
  auto seed = std::make_shared<std::uint64_t>(0);
  auto sigma = std::make_shared<double>(-1.0);
  auto frames = std::make_shared<int>(1);
  auto out = std::make_shared<std::string>();
  auto format = std::make_shared<std::string>();

  cmd->add_option("-p,--preset", *preset, "Scene preset")
      ->required()
      ->check(CLI::IsMember({"single_L", "broadside_line",
                             "two_vehicles_occluding", "parking_row",
                             "random"}));
  cmd->add_option("-s,--seed", *seed, "Scene / noise seed");
  cmd->add_option("--sigma", *sigma,
                  "Range noise standard deviation [m] (default 0.02)");
  cmd->add_option("-n,--frames", *frames, "Number of frames")
      ->check(CLI::PositiveNumber);
  cmd->add_option("-o,--out", *out, "Output file")->required();
  cmd->add_option("--format", *format, "Output format")
      ->check(CLI::IsMember({"csv", "jsonl"}));

  cmd->callback([=]() {
    const auto parsed = lshape::sim::parse_preset(*preset);
    std::vector<lshape::Scan> scans;
    for (int f = 0; f < *frames; ++f) {
      lshape::sim::Scene scene =
          lshape::sim::make_scene(*parsed, *seed + static_cast<std::uint64_t>(f));
      if (*sigma >= 0.0) {
        scene.sensor.range_noise_sigma = *sigma;
      }
      lshape::sim::LabeledScan labeled =
          lshape::sim::raycast(scene.sensor, scene.vehicles);
      labeled.scan.frame_id = f;
      scans.push_back(std::move(labeled.scan));
    }
    const lshape::ScanFormat fmt = resolve_format(*out, *format);
    if (fmt == lshape::ScanFormat::csv) {
      if (scans.size() != 1) {
        throw lshape::ConfigError(
            "csv stores a single frame; use jsonl for --frames > 1");
      }
      lshape::write_scan_csv(*out, scans.front());
    } else {
      lshape::write_scans_jsonl(*out, scans);
    }
  });
}

void setup_segment(CLI::App& app) {
  auto* cmd =
      app.add_subcommand("segment", "Cluster scans and print assignments");
  auto opts = std::make_shared<CommonOpts>();
  add_common(*cmd, *opts);

  cmd->callback([=]() {
    const lshape::PipelineConfig cfg = build_config(*opts);
    cfg.validate();
    std::string out;
    for (const lshape::Scan& scan : read_input(*opts)) {
      std::vector<int> labels(scan.points.size(), lshape::Cluster::kNoiseLabel);
      if (!scan.points.empty()) {
        const std::vector<lshape::Cluster> clusters =
            segment_method(*opts) == lshape::SegmentMethod::dbscan
                ? lshape::dbscan(scan, cfg.dbscan)
                : lshape::mean_shift(scan, cfg.meanshift);
        for (const lshape::Cluster& cluster : clusters) {
          for (const std::size_t i : cluster.indices) {
            labels[i] = cluster.label;
          }
        }
      }
      for (std::size_t i = 0; i < labels.size(); ++i) {
        out += std::to_string(scan.frame_id);
        out.push_back(' ');
        out += std::to_string(i);
        out.push_back(' ');
        out += std::to_string(labels[i]);
        out.push_back('\n');
      }
    }
    std::cout << out;
  });
}

void setup_fit(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "fit", "Segment scans and fit an L-shape box per cluster");
  auto opts = std::make_shared<CommonOpts>();
  add_common(*cmd, *opts);

  cmd->callback([=]() {
    const lshape::PipelineConfig cfg = build_config(*opts);
    std::vector<lshape::FrameResult> results;
    for (const lshape::Scan& scan : read_input(*opts)) {
      results.push_back(lshape::run_pipeline(scan, cfg, segment_method(*opts)));
    }
    std::cout << lshape::format_detections(results);
  });
}

void setup_bench(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "bench", "Time the L-shape search against the grid-search baseline");
  auto opts = std::make_shared<CommonOpts>();
  auto method = std::make_shared<std::string>("both");
  auto bench_opts = std::make_shared<lshape::BenchOptions>();
  add_common(*cmd, *opts);
  cmd->add_option("-m,--method", *method, "Fit method to time")
      ->check(CLI::IsMember({"search", "baseline", "both"}));
  cmd->add_option("-r,--repeats", bench_opts->repeats,
                  "Measured passes over the input")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--resolution", bench_opts->baseline_resolution,
                  "Baseline grid step [rad]");
  cmd->add_flag("--include-segmentation", bench_opts->include_segmentation,
                "Count segmentation time into each frame");

  cmd->callback([=]() {
    const lshape::PipelineConfig cfg = build_config(*opts);
    const std::vector<lshape::Scan> scans = read_input(*opts);
    bench_opts->segment_method = segment_method(*opts);
    std::string out;
    if (*method != "baseline") {
      out += lshape::format_report(
          lshape::bench(scans, cfg, lshape::FitMethod::search, *bench_opts));
    }
    if (*method != "search") {
      out += lshape::format_report(
          lshape::bench(scans, cfg, lshape::FitMethod::baseline, *bench_opts));
    }
    std::cout << out;
  });
}

void setup_plot(CLI::App& app) {
  auto* cmd =
      app.add_subcommand("plot", "Render one frame and its fits as SVG");
  auto opts = std::make_shared<CommonOpts>();
  auto out = std::make_shared<std::string>();
  auto frame = std::make_shared<int>(0);
  auto plot_opts = std::make_shared<lshape::PlotOptions>();
  auto no_markers = std::make_shared<bool>(false);
  add_common(*cmd, *opts);
  cmd->add_option("-o,--out", *out, "Output SVG file")->required();
  cmd->add_option("--frame", *frame, "Frame index within the input");
  cmd->add_option("--width", plot_opts->width_px, "Canvas width [px]");
  cmd->add_option("--height", plot_opts->height_px, "Canvas height [px]");
  cmd->add_flag("--no-markers", *no_markers,
                "Skip the vertex / corner markers");

  cmd->callback([=]() {
    const lshape::PipelineConfig cfg = build_config(*opts);
    const std::vector<lshape::Scan> scans = read_input(*opts);
    if (*frame < 0 || static_cast<std::size_t>(*frame) >= scans.size()) {
      throw lshape::ConfigError("--frame " + std::to_string(*frame) +
                                " out of range; input has " +
                                std::to_string(scans.size()) + " frame(s)");
    }
    const lshape::Scan& scan = scans[static_cast<std::size_t>(*frame)];
    const lshape::FrameResult result =
        lshape::run_pipeline(scan, cfg, segment_method(*opts));
    plot_opts->draw_markers = !*no_markers;
    lshape::write_svg(*out, scan, result.clusters, result.fits, *plot_opts);
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"L-shape fitting pipeline for 2D laser scans"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "lshape 0.1.0");
  setup_gen(app);
  setup_segment(app);
  setup_fit(app);
  setup_bench(app);
  setup_plot(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const lshape::ScanParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitScanParse;
  } catch (const lshape::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const lshape::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
