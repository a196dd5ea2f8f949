// saccadecam: command-line front end for the foveated imaging toolkit.
//
//   saccadecam bandwidth --in img.png --from 70 --to 30 --out wac.png
//   saccadecam attention --mode edge --in wac.png --out mask.pfm
//   saccadecam plan --mask mask.pfm --n 10 --window 8x8 --out plan.json
//   saccadecam composite --wac wac.png --focused full.png --mask m.pfm --out s.png
//   saccadecam evaluate --pred pred.pfm --gt gt.pfm
//   saccadecam oracle --config oracle.json --mode true
//   saccadecam simulate --full full.png --mask mask.pfm --budget b.json --out s.png
//
// Every subcommand takes --config <json>; keys in it override the flags.
// Errors print one JSON line on stderr and exit 2 (usage), 3 (I/O) or
// 4 (validation).

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "saccade/attention.hpp"
#include "saccade/bandwidth.hpp"
#include "saccade/compositor.hpp"
#include "saccade/error.hpp"
#include "saccade/io.hpp"
#include "saccade/metrics.hpp"
#include "saccade/oracle.hpp"
#include "saccade/parallel.hpp"
#include "saccade/pipeline.hpp"
#include "saccade/planner.hpp"
#include "saccade/saccade_sim.hpp"
#include "saccade/synthetic.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace saccade;

namespace {

// Effective settings for one subcommand: flag values (defaults included),
// overlaid by the --config file when one is given.
class Settings {
 public:
  explicit Settings(json flags) : j_(std::move(flags)) {}

  void overlay(const std::string& config_path) {
    if (config_path.empty()) return;
    const json cfg = io::read_json(config_path);
    if (!cfg.is_object()) fail(ErrorCode::kDomain, "config must be a JSON object");
    for (const auto& [k, v] : cfg.items()) j_[k] = v;
    base_dir_ = fs::path(config_path).parent_path();
  }

  template <typename T>
  T get(const std::string& key) const {
    try {
      return j_.at(key).get<T>();
    } catch (const json::exception& e) {
      fail(ErrorCode::kDomain, "setting '" + key + "': " + e.what());
    }
  }
  std::string str(const std::string& key) const {
    return j_.contains(key) && !j_[key].is_null() ? get<std::string>(key) : std::string();
  }
  bool has(const std::string& key) const { return !str(key).empty(); }

  const json& effective() const { return j_; }
  const fs::path& base_dir() const { return base_dir_; }

 private:
  json j_;
  fs::path base_dir_ = ".";
};

void echo_config(const fs::path& out, const Settings& s) {
  io::write_json(fs::path(out.string() + ".config.json"), s.effective());
}

WindowSize parse_window(const std::string& text) {
  const auto x = text.find_first_of("xX");
  try {
    if (x == std::string::npos) {
      const int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, x)), std::stoi(text.substr(x + 1))};
  } catch (const std::exception&) {
    fail(ErrorCode::kUsage, "window must look like HxW, got '" + text + "'");
  }
}

PlanScoring parse_scoring(const std::string& s) {
  if (s == "peak") return PlanScoring::kPeak;
  if (s == "window-sum") return PlanScoring::kWindowSum;
  fail(ErrorCode::kUsage, "scoring must be peak or window-sum");
}

BandwidthBudget budget_for(const json& b, int width, int height) {
  try {
    const double full = b.value("full_bw", CameraModel::kKittiBandwidth);
    const CameraModel cam = CameraModel::kitti_like(width, height, full);
    return make_budget(cam, b.at("target_bw").get<double>(), b.at("wac_bw").get<double>());
  } catch (const json::exception& e) {
    fail(ErrorCode::kDomain, std::string("invalid budget JSON: ") + e.what());
  }
}

void write_or_print(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text;
  } else {
    io::write_text(out, text);
  }
}

// ---------------------------------------------------------------- bandwidth

struct BandwidthArgs {
  std::string in, out, config, down = "box", up = "bilinear";
  double from = 70.0, to = 70.0;
};

int run_bandwidth(const BandwidthArgs& a) {
  Settings s({{"in", a.in}, {"out", a.out}, {"from", a.from}, {"to", a.to},
              {"down", a.down}, {"up", a.up}});
  s.overlay(a.config);
  ResampleOptions opts;
  const std::string down = s.str("down");
  const std::string up = s.str("up");
  if (down == "box") opts.down = DownsampleKernel::kBox;
  else if (down == "bilinear") opts.down = DownsampleKernel::kBilinear;
  else fail(ErrorCode::kUsage, "--down must be box or bilinear");
  if (up == "bilinear") opts.up = UpsampleKernel::kBilinear;
  else if (up == "nearest") opts.up = UpsampleKernel::kNearest;
  else fail(ErrorCode::kUsage, "--up must be bilinear or nearest");

  const fs::path in = s.str("in");
  const fs::path out = s.str("out");
  const Image img = io::read_image(in, ImageKind::kAttention);
  const BandwidthResult r = simulate_bandwidth(img, s.get<double>("from"), s.get<double>("to"), opts);
  if (out.extension() == ".pfm") {
    io::write_pfm(out, r.image);
  } else {
    io::write_png(out, r.image);
  }
  io::write_json(fs::path(out.string() + ".meta.json"),
                 {{"from_bw", s.get<double>("from")},
                  {"to_bw", s.get<double>("to")},
                  {"intermediate", {r.intermediate_width, r.intermediate_height}},
                  {"realized_bw_x", r.realized_bw_x},
                  {"realized_bw_y", r.realized_bw_y},
                  {"realized_bw", r.realized_bw()}});
  echo_config(out, s);
  return 0;
}

// ---------------------------------------------------------------- attention

struct AttentionArgs {
  std::string mode = "edge", in, pred, ref, out, png, config;
  long top_n = -1;
  int smooth = 0;
};

int run_attention(const AttentionArgs& a) {
  Settings s({{"mode", a.mode}, {"in", a.in}, {"pred", a.pred}, {"ref", a.ref},
              {"out", a.out}, {"png", a.png}, {"top_n", a.top_n}, {"smooth", a.smooth}});
  s.overlay(a.config);
  const std::string mode = s.str("mode");
  AttentionMask mask;
  if (mode == "edge") {
    require(s.has("in"), ErrorCode::kUsage, "edge attention needs --in");
    mask = edge_attention(io::read_image(s.str("in"), ImageKind::kAttention));
  } else if (mode == "error") {
    require(s.has("pred") && s.has("ref"), ErrorCode::kUsage,
            "error attention needs --pred and --ref");
    mask = error_attention(io::read_pfm(s.str("pred")), io::read_pfm(s.str("ref")));
  } else {
    fail(ErrorCode::kUsage, "--mode must be edge or error");
  }
  mask = box_smooth(mask, s.get<int>("smooth"));
  const long n = s.get<long>("top_n");
  if (n >= 0) mask = top_n_binarize(mask, n);
  const fs::path out = s.str("out");
  io::write_mask(out, mask);
  if (s.has("png")) io::write_mask_png(s.str("png"), mask);
  echo_config(out, s);
  return 0;
}

// ---------------------------------------------------------------------- plan

struct PlanArgs {
  std::string mask, window = "8x8", budget, scoring = "peak", out, mask_out, config;
  long n = -1;
};

int run_plan(const PlanArgs& a) {
  Settings s({{"mask", a.mask}, {"n", a.n}, {"window", a.window}, {"budget", a.budget},
              {"scoring", a.scoring}, {"out", a.out}, {"mask_out", a.mask_out}});
  s.overlay(a.config);
  const AttentionMask mask = io::read_mask(s.str("mask"));
  const WindowSize window = parse_window(s.str("window"));
  const PlanScoring scoring = parse_scoring(s.str("scoring"));
  FoveaPlan plan;
  if (s.has("budget")) {
    const BandwidthBudget b =
        budget_for(io::read_json(s.str("budget")), mask.width(), mask.height());
    plan = plan_from_budget(mask, b, window, scoring);
  } else {
    const long n = s.get<long>("n");
    require(n >= 0, ErrorCode::kUsage, "plan needs --n or --budget");
    plan = greedy_plan(mask, n, window, scoring);
  }
  write_or_print(s.str("out"), io::plan_to_json(plan).dump(2) + "\n");
  if (s.has("mask_out")) io::write_mask(s.str("mask_out"), plan_to_mask(plan, mask.height(), mask.width()));
  if (s.has("out")) echo_config(s.str("out"), s);
  return 0;
}

// ----------------------------------------------------------------- composite

struct CompositeArgs {
  std::string wac, focused, mask, out, config;
  double gamma = 1.0;
  int feather = 0;
};

int run_composite(const CompositeArgs& a) {
  Settings s({{"wac", a.wac}, {"focused", a.focused}, {"mask", a.mask}, {"out", a.out},
              {"gamma", a.gamma}, {"feather", a.feather}});
  s.overlay(a.config);
  BlendConfig cfg{s.get<double>("gamma"), s.get<int>("feather")};
  const Image wac = io::read_image(s.str("wac"), ImageKind::kColor);
  const Image focused = io::read_image(s.str("focused"), ImageKind::kColor);
  AttentionMask mask = io::read_mask(s.str("mask"));
  if (cfg.feather_radius > 0 && mask.kind() == MaskKind::kBinary) {
    mask = feather(mask, cfg.feather_radius);
  }
  const fs::path out = s.str("out");
  io::write_png(out, composite(wac, focused, mask, cfg));
  echo_config(out, s);
  return 0;
}

// ------------------------------------------------------------------ evaluate

struct EvaluateArgs {
  std::string pred, gt, out, config;
  double min_depth = 1e-3, max_depth = 80.0;
  bool median_scale = false;
  int jobs = 1;
};

int run_evaluate(const EvaluateArgs& a) {
  Settings s({{"pred", a.pred}, {"gt", a.gt}, {"out", a.out}, {"min_depth", a.min_depth},
              {"max_depth", a.max_depth}, {"median_scale", a.median_scale}, {"jobs", a.jobs}});
  s.overlay(a.config);
  EvalConfig cfg{s.get<double>("min_depth"), s.get<double>("max_depth"),
                 s.get<bool>("median_scale")};
  const fs::path pred = s.str("pred");
  const fs::path gt = s.str("gt");

  std::vector<std::pair<std::string, std::pair<fs::path, fs::path>>> items;
  if (fs::is_directory(pred)) {
    require(fs::is_directory(gt), ErrorCode::kUsage,
            "--gt must be a directory when --pred is one");
    for (const auto& e : fs::directory_iterator(pred)) {
      if (e.path().extension() != ".pfm") continue;
      const std::string name = e.path().stem().string();
      items.push_back({name, {e.path(), gt / (name + ".pfm")}});
    }
    std::sort(items.begin(), items.end());
    require(!items.empty(), ErrorCode::kIo, "no .pfm files in " + pred.string());
  } else {
    items.push_back({pred.stem().string(), {pred, gt}});
  }
  std::vector<DepthMetrics> results(items.size());
  parallel_for(items.size(), s.get<int>("jobs"), [&](std::size_t i) {
    results[i] = evaluate(io::read_pfm(items[i].second.first),
                          io::read_pfm(items[i].second.second), cfg);
  });
  std::string csv = metrics_csv_header("image") + "\n";
  for (std::size_t i = 0; i < items.size(); ++i) {
    csv += metrics_csv_row(items[i].first, results[i]) + "\n";
  }
  csv += metrics_csv_row("mean", mean_metrics(results)) + "\n";
  write_or_print(s.str("out"), csv);
  if (s.has("out")) echo_config(s.str("out"), s);
  return 0;
}

// -------------------------------------------------------------------- oracle

struct OracleArgs {
  std::string config, mode = "true", out;
  int jobs = 1;
};

int run_oracle(const OracleArgs& a) {
  require(!a.config.empty(), ErrorCode::kUsage, "oracle needs --config");
  json flags = {{"jobs", a.jobs}};
  if (!a.out.empty()) flags["output_csv"] = fs::absolute(a.out).string();
  Settings s(flags);
  s.overlay(a.config);
  const OracleDatasetConfig cfg = OracleDatasetConfig::from_json(s.effective(), s.base_dir());
  OracleMode mode;
  if (a.mode == "photometric") mode = OracleMode::kPhotometric;
  else if (a.mode == "true") mode = OracleMode::kTrue;
  else fail(ErrorCode::kUsage, "--mode must be photometric or true");
  const std::string csv = run_oracle_dataset(cfg, mode);
  if (cfg.output_csv.empty()) {
    std::cout << csv;
  } else {
    io::write_text(cfg.output_csv, csv);
    json eff = cfg.to_json();
    eff["mode"] = a.mode;
    io::write_json(fs::path(cfg.output_csv.string() + ".config.json"), eff);
  }
  return 0;
}

// ------------------------------------------------------------------ simulate

struct SimulateArgs {
  std::string wac, full, mask, budget, out, plan_out, schedule_out, report, scene_dir,
      config, window = "8x8", scoring = "peak";
  double gamma = 1.0, max_angle = 10.0, settle = 30.0, wac_exposure = 10.0,
         tele_exposure = 8.0, frame_period = 200.0;
  int feather = 0, scene_set = 0, jobs = 1;
};

int run_scene_set(const Settings& s) {
  ComparisonConfig cfg;
  if (s.has("budget")) {
    const json b = io::read_json(s.str("budget"));
    cfg.full_bw = b.value("full_bw", cfg.full_bw);
    cfg.target_bw = b.value("target_bw", cfg.target_bw);
    cfg.wac_bw = b.value("wac_bw", cfg.wac_bw);
  }
  cfg.window = parse_window(s.str("window"));
  cfg.scoring = parse_scoring(s.str("scoring"));
  cfg.blend = {s.get<double>("gamma"), s.get<int>("feather")};
  cfg.jobs = s.get<int>("jobs");
  const SceneShape shape;
  const auto scenes = make_scene_set(s.get<int>("scene_set"), 2021, shape);
  if (s.has("scene_dir")) {
    const fs::path dir = s.str("scene_dir");
    fs::create_directories(dir / "images");
    fs::create_directories(dir / "gt");
    for (const auto& sc : scenes) {
      io::write_png(dir / "images" / (sc.name + ".png"), sc.color);
      io::write_pfm(dir / "gt" / (sc.name + ".pfm"), sc.depth);
    }
  }
  IntensityDepthSource depth(shape.near_m, shape.far_m);
  const ComparisonReport report = run_comparison(scenes, depth, cfg);
  const std::string out = s.str("report");
  write_or_print(out, report.table_csv());
  if (!out.empty()) {
    json eff = s.effective();
    eff["comparison"] = cfg.to_json();
    io::write_json(fs::path(out + ".config.json"), eff);
  }
  return 0;
}

int run_simulate(const SimulateArgs& a) {
  Settings s({{"wac", a.wac}, {"full", a.full}, {"mask", a.mask}, {"budget", a.budget},
              {"out", a.out}, {"plan_out", a.plan_out}, {"schedule_out", a.schedule_out},
              {"report", a.report}, {"scene_dir", a.scene_dir}, {"window", a.window},
              {"scoring", a.scoring}, {"gamma", a.gamma}, {"feather", a.feather},
              {"max_angle", a.max_angle}, {"settle", a.settle},
              {"wac_exposure", a.wac_exposure}, {"tele_exposure", a.tele_exposure},
              {"frame_period", a.frame_period}, {"scene_set", a.scene_set}, {"jobs", a.jobs}});
  s.overlay(a.config);
  if (s.get<int>("scene_set") > 0) return run_scene_set(s);

  require(s.has("full") && s.has("mask") && s.has("budget") && s.has("out"), ErrorCode::kUsage,
          "simulate needs --full, --mask, --budget and --out");
  const Image full = io::read_image(s.str("full"), ImageKind::kColor);
  const BandwidthBudget budget = budget_for(io::read_json(s.str("budget")), full.width(), full.height());
  const Image wac = s.has("wac") ? io::read_image(s.str("wac"), ImageKind::kColor)
                                 : simulate_bandwidth(full, budget.full_bw, budget.wac_bw).image;
  const AttentionMask mask = io::read_mask(s.str("mask"));
  const FoveaPlan plan = plan_from_budget(mask, budget, parse_window(s.str("window")),
                                          parse_scoring(s.str("scoring")));
  const BlendConfig blend{s.get<double>("gamma"), s.get<int>("feather")};
  const fs::path out = s.str("out");
  io::write_png(out, simulate_frame(wac, full, plan, blend));
  if (s.has("plan_out")) io::write_json(s.str("plan_out"), io::plan_to_json(plan));

  const MirrorModel mirror{s.get<double>("max_angle"), s.get<double>("settle")};
  const FrameTiming timing{s.get<double>("wac_exposure"), s.get<double>("tele_exposure"),
                           s.get<double>("frame_period")};
  json schedule;
  try {
    FrameSchedule fs_ = build_schedule(plan, mirror, timing);
    const CameraModel cam = CameraModel::kitti_like(full.width(), full.height(), budget.wac_bw);
    attach_voltages(fs_, plan, cam, mirror);
    schedule = schedule_to_json(fs_);
    schedule["feasible"] = true;
  } catch (const InfeasibleRateError& e) {
    schedule = {{"feasible", false}, {"achievable", e.achievable()}, {"reason", e.what()}};
    std::cerr << json{{"warning", "infeasible_rate"}, {"message", e.what()}}.dump() << "\n";
  }
  if (s.has("schedule_out")) io::write_json(s.str("schedule_out"), schedule);
  echo_config(out, s);
  return 0;
}

void report_error(const std::string& code, int status, const std::string& message) {
  std::cerr << json{{"error", code}, {"exit", status}, {"message", message}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Foveated imaging simulation, fovea planning and depth evaluation"};
  app.require_subcommand(1);

  BandwidthArgs bw;
  auto* bw_cmd = app.add_subcommand("bandwidth", "Simulate capture at a lower bandwidth");
  bw_cmd->add_option("--in", bw.in, "Input PNG or PFM")->required();
  bw_cmd->add_option("--out", bw.out, "Output PNG or PFM")->required();
  bw_cmd->add_option("--from", bw.from, "Source bandwidth (px/mm)");
  bw_cmd->add_option("--to", bw.to, "Target bandwidth (px/mm)");
  bw_cmd->add_option("--down", bw.down, "Downsampling kernel: box|bilinear");
  bw_cmd->add_option("--up", bw.up, "Upsampling kernel: bilinear|nearest");
  bw_cmd->add_option("--config", bw.config, "JSON config overriding flags");

  AttentionArgs at;
  auto* at_cmd = app.add_subcommand("attention", "Build an attention mask");
  at_cmd->add_option("--mode", at.mode, "edge|error");
  at_cmd->add_option("--in", at.in, "Color image for edge attention");
  at_cmd->add_option("--pred", at.pred, "Predicted depth PFM for error attention");
  at_cmd->add_option("--ref", at.ref, "Reference depth PFM for error attention");
  at_cmd->add_option("--out", at.out, "Output mask (.pfm, or .png for binary)")->required();
  at_cmd->add_option("--png", at.png, "Also export the binary mask as 0/255 PNG");
  at_cmd->add_option("--top-n", at.top_n, "Binarize to the N largest values");
  at_cmd->add_option("--smooth", at.smooth, "Box-smoothing radius before binarizing");
  at_cmd->add_option("--config", at.config, "JSON config overriding flags");

  PlanArgs pl;
  auto* pl_cmd = app.add_subcommand("plan", "Greedy fovea plan from an attention mask");
  pl_cmd->add_option("--mask", pl.mask, "Attention mask PFM")->required();
  pl_cmd->add_option("--n", pl.n, "Number of fovea");
  pl_cmd->add_option("--budget", pl.budget, "Budget JSON {full_bw,target_bw,wac_bw}");
  pl_cmd->add_option("--window", pl.window, "Fovea window HxW");
  pl_cmd->add_option("--scoring", pl.scoring, "peak|window-sum");
  pl_cmd->add_option("--out", pl.out, "Plan JSON (default stdout)");
  pl_cmd->add_option("--mask-out", pl.mask_out, "Rasterized plan coverage");
  pl_cmd->add_option("--config", pl.config, "JSON config overriding flags");

  CompositeArgs co;
  auto* co_cmd = app.add_subcommand("composite", "Blend a focused image onto the WAC image");
  co_cmd->add_option("--wac", co.wac, "WAC image")->required();
  co_cmd->add_option("--focused", co.focused, "Focused image")->required();
  co_cmd->add_option("--mask", co.mask, "Blend mask PFM/PNG")->required();
  co_cmd->add_option("--out", co.out, "Output PNG")->required();
  co_cmd->add_option("--gamma", co.gamma, "Gamma applied to the focused image");
  co_cmd->add_option("--feather", co.feather, "Feather radius for binary masks");
  co_cmd->add_option("--config", co.config, "JSON config overriding flags");

  EvaluateArgs ev;
  auto* ev_cmd = app.add_subcommand("evaluate", "Depth error metrics as CSV");
  ev_cmd->add_option("--pred", ev.pred, "Predicted depth PFM or directory")->required();
  ev_cmd->add_option("--gt", ev.gt, "Ground truth PFM or directory")->required();
  ev_cmd->add_option("--min-depth", ev.min_depth, "Lower evaluation bound (m)");
  ev_cmd->add_option("--max-depth", ev.max_depth, "Upper evaluation bound (m)");
  ev_cmd->add_flag("--median-scale", ev.median_scale, "Median-scale predictions");
  ev_cmd->add_option("--jobs", ev.jobs, "Worker threads");
  ev_cmd->add_option("--out", ev.out, "CSV path (default stdout)");
  ev_cmd->add_option("--config", ev.config, "JSON config overriding flags");

  OracleArgs orc;
  auto* or_cmd = app.add_subcommand("oracle", "Photometric / true oracle experiment");
  or_cmd->add_option("--config", orc.config, "Oracle JSON config")->required();
  or_cmd->add_option("--mode", orc.mode, "photometric|true");
  or_cmd->add_option("--jobs", orc.jobs, "Worker threads");
  or_cmd->add_option("--out", orc.out, "CSV path (config output_csv wins)");

  SimulateArgs si;
  auto* si_cmd = app.add_subcommand("simulate", "Simulate one SaccadeCam frame");
  si_cmd->add_option("--wac", si.wac, "WAC image (default: derived from --full)");
  si_cmd->add_option("--full", si.full, "Full-bandwidth image");
  si_cmd->add_option("--mask", si.mask, "Attention mask on the WAC grid");
  si_cmd->add_option("--budget", si.budget, "Budget JSON {full_bw,target_bw,wac_bw}");
  si_cmd->add_option("--out", si.out, "Output SaccadeCam PNG");
  si_cmd->add_option("--window", si.window, "Fovea window HxW");
  si_cmd->add_option("--scoring", si.scoring, "peak|window-sum");
  si_cmd->add_option("--gamma", si.gamma, "Gamma for telephoto captures");
  si_cmd->add_option("--feather", si.feather, "Feather radius");
  si_cmd->add_option("--plan-out", si.plan_out, "Write the fovea plan JSON");
  si_cmd->add_option("--schedule-out", si.schedule_out, "Write the frame schedule JSON");
  si_cmd->add_option("--max-angle", si.max_angle, "Mirror half-range (deg)");
  si_cmd->add_option("--settle", si.settle, "Mirror settle time (ms)");
  si_cmd->add_option("--wac-exposure", si.wac_exposure, "WAC exposure (ms)");
  si_cmd->add_option("--tele-exposure", si.tele_exposure, "Telephoto exposure (ms)");
  si_cmd->add_option("--frame-period", si.frame_period, "Frame period (ms)");
  si_cmd->add_option("--scene-set", si.scene_set,
                     "Run the synthetic comparison on N bundled scenes instead");
  si_cmd->add_option("--scene-dir", si.scene_dir, "Dump the synthetic scenes here");
  si_cmd->add_option("--report", si.report, "Comparison CSV (default stdout)");
  si_cmd->add_option("--jobs", si.jobs, "Worker threads for --scene-set");
  si_cmd->add_option("--config", si.config, "JSON config overriding flags");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error("usage", 2, e.what());
    return 2;
  }

  try {
    if (*bw_cmd) return run_bandwidth(bw);
    if (*at_cmd) return run_attention(at);
    if (*pl_cmd) return run_plan(pl);
    if (*co_cmd) return run_composite(co);
    if (*ev_cmd) return run_evaluate(ev);
    if (*or_cmd) return run_oracle(orc);
    if (*si_cmd) return run_simulate(si);
  } catch (const Error& e) {
    const int status = exit_status(e.code());
    report_error(std::string(to_string(e.code())), status, e.what());
    return status;
  } catch (const fs::filesystem_error& e) {
    report_error("io", 3, e.what());
    return 3;
  } catch (const std::exception& e) {
    report_error("internal", 1, e.what());
    return 1;
  }
  return 2;
}
