#include "cellmend/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <exception>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cellmend/csv.hpp"
#include "cellmend/metrics.hpp"
#include "cellmend/parallel.hpp"
#include "cellmend/preprocess.hpp"
#include "cellmend/svg.hpp"

namespace cellmend {
namespace {

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex16(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[v & 0xF];
    v >>= 4;
  }
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("experiments: cannot open " + path.string() +
                             " for writing");
  }
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw std::runtime_error("experiments: short write to " + path.string());
  }
}

// Buffers every output file, then hands them to write_output_tree in one
// single-threaded pass.
class OutputTree {
 public:
  explicit OutputTree(std::filesystem::path root) : root_(std::move(root)) {}

  void add(std::string relative, std::string content) {
    files_.emplace_back(std::move(relative), std::move(content));
  }

  void write_all(const std::vector<std::string>& config_lines) {
    write_output_tree(root_, std::move(files_), config_lines);
  }

 private:
  std::filesystem::path root_;
  std::vector<std::pair<std::string, std::string>> files_;
};

std::string join_seeds(const std::vector<std::uint64_t>& seeds) {
  std::string out;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(seeds[i]);
  }
  return out;
}

std::string join_doubles(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ',';
    out += format_double(values[i]);
  }
  return out;
}

std::string mode_name(SmoteMode mode) {
  return mode == SmoteMode::kExtrapolate ? "paper" : "canonical";
}

// Configuration echoed into the manifest; keys match the config-file
// syntax, so a manifest doubles as a record of the exact inputs.
std::vector<std::string> config_echo(const ExperimentSpec& spec) {
  std::vector<std::string> lines;
  lines.push_back("experiment.id = " + spec.id);
  lines.push_back("experiment.seeds = " + join_seeds(spec.seeds));
  lines.push_back("experiment.cost_ratios = " + join_doubles(spec.cost_ratios));
  lines.push_back("experiment.test_fraction = " +
                  format_double(spec.test_fraction));
  lines.push_back("resample.target_ratio = " +
                  format_double(spec.resample.target_ratio));
  lines.push_back("resample.k = " + std::to_string(spec.resample.k));
  lines.push_back("resample.mode = " + mode_name(spec.resample.mode));
  lines.push_back("svm.C = " + format_double(spec.svm.C));
  lines.push_back("svm.tolerance = " + format_double(spec.svm.tolerance));
  lines.push_back("svm.max_iterations = " +
                  std::to_string(spec.svm.max_iterations));
  lines.push_back("svm.cost.c00 = " + format_double(spec.svm.cost.c00));
  lines.push_back("svm.cost.c01 = " + format_double(spec.svm.cost.c01));
  lines.push_back("svm.cost.c10 = " + format_double(spec.svm.cost.c10));
  lines.push_back("svm.cost.c11 = " + format_double(spec.svm.cost.c11));
  lines.push_back("sim.n_fault = " + std::to_string(spec.sim.n_fault));
  lines.push_back("sim.n_ok = " + std::to_string(spec.sim.n_ok));
  for (std::size_t f = 0; f < kNumFeatures; ++f) {
    const std::string name = kFeatureNames[f];
    lines.push_back("sim.ok." + name + ".mean = " +
                    format_double(spec.sim.ok[f].mean));
    lines.push_back("sim.ok." + name + ".stddev = " +
                    format_double(spec.sim.ok[f].stddev));
    lines.push_back("sim.fault." + name + ".mean = " +
                    format_double(spec.sim.fault[f].mean));
    lines.push_back("sim.fault." + name + ".stddev = " +
                    format_double(spec.sim.fault[f].stddev));
    lines.push_back("sim.clamp." + name + ".lo = " +
                    format_double(spec.sim.clamp_lo[f]));
    lines.push_back("sim.clamp." + name + ".hi = " +
                    format_double(spec.sim.clamp_hi[f]));
  }
  return lines;
}

// ---------------------------------------------------------------------------
// Config-file parsing (flat "section.key = value" lines).

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_num(const std::string& text, const std::string& key) {
  const std::string t = trim(text);
  double value = 0.0;
  const char* begin = t.data();
  const char* end = begin + t.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw std::runtime_error("config: bad number '" + text + "' for " + key);
  }
  return value;
}

std::int64_t parse_int(const std::string& text, const std::string& key) {
  const std::string t = trim(text);
  std::int64_t value = 0;
  const char* begin = t.data();
  const char* end = begin + t.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw std::runtime_error("config: bad integer '" + text + "' for " + key);
  }
  return value;
}

// Accepts "a..b" (inclusive integer range) or a comma-separated list.
std::vector<double> parse_list(const std::string& text, const std::string& key) {
  const std::string t = trim(text);
  std::vector<double> out;
  const std::size_t dots = t.find("..");
  if (dots != std::string::npos) {
    const std::int64_t lo = parse_int(t.substr(0, dots), key);
    const std::int64_t hi = parse_int(t.substr(dots + 2), key);
    if (hi < lo) {
      throw std::runtime_error("config: empty range '" + text + "' for " + key);
    }
    for (std::int64_t v = lo; v <= hi; ++v) out.push_back(static_cast<double>(v));
    return out;
  }
  std::size_t pos = 0;
  while (pos <= t.size()) {
    std::size_t comma = t.find(',', pos);
    if (comma == std::string::npos) comma = t.size();
    out.push_back(parse_num(t.substr(pos, comma - pos), key));
    pos = comma + 1;
  }
  if (out.empty()) {
    throw std::runtime_error("config: empty list for " + key);
  }
  return out;
}

int kpi_index(const std::string& name, const std::string& key) {
  for (std::size_t f = 0; f < kNumFeatures; ++f) {
    if (name == kFeatureNames[f]) return static_cast<int>(f);
  }
  throw std::runtime_error("config: unknown KPI '" + name + "' in " + key);
}

void apply_one(ExperimentSpec& spec, const std::string& key,
               const std::string& value) {
  if (key == "experiment.id") {
    spec.id = trim(value);
    return;
  }
  if (key == "experiment.seeds") {
    spec.seeds.clear();
    for (double v : parse_list(value, key)) {
      if (v < 0 || v != std::floor(v)) {
        throw std::runtime_error("config: seeds must be non-negative integers");
      }
      spec.seeds.push_back(static_cast<std::uint64_t>(v));
    }
    return;
  }
  if (key == "experiment.cost_ratios") {
    spec.cost_ratios = parse_list(value, key);
    return;
  }
  if (key == "experiment.test_fraction") {
    spec.test_fraction = parse_num(value, key);
    return;
  }
  if (key == "experiment.out") {
    spec.out_dir = trim(value);
    return;
  }
  if (key == "resample.target_ratio") {
    spec.resample.target_ratio = parse_num(value, key);
    return;
  }
  if (key == "resample.k") {
    spec.resample.k = static_cast<int>(parse_int(value, key));
    return;
  }
  if (key == "resample.mode") {
    const std::string v = trim(value);
    if (v == "paper" || v == "extrapolate") {
      spec.resample.mode = SmoteMode::kExtrapolate;
    } else if (v == "canonical" || v == "interpolate") {
      spec.resample.mode = SmoteMode::kInterpolate;
    } else {
      throw std::runtime_error("config: resample.mode must be paper or canonical");
    }
    return;
  }
  if (key == "resample.seed") {
    spec.resample.seed = static_cast<std::uint64_t>(parse_int(value, key));
    return;
  }
  if (key == "svm.C") {
    spec.svm.C = parse_num(value, key);
    return;
  }
  if (key == "svm.tolerance") {
    spec.svm.tolerance = parse_num(value, key);
    return;
  }
  if (key == "svm.max_iterations") {
    spec.svm.max_iterations = parse_int(value, key);
    return;
  }
  if (key == "svm.cost.c00") {
    spec.svm.cost.c00 = parse_num(value, key);
    return;
  }
  if (key == "svm.cost.c01") {
    spec.svm.cost.c01 = parse_num(value, key);
    return;
  }
  if (key == "svm.cost.c10") {
    spec.svm.cost.c10 = parse_num(value, key);
    return;
  }
  if (key == "svm.cost.c11") {
    spec.svm.cost.c11 = parse_num(value, key);
    return;
  }
  if (key == "sim.n_fault") {
    spec.sim.n_fault = parse_int(value, key);
    return;
  }
  if (key == "sim.n_ok") {
    spec.sim.n_ok = parse_int(value, key);
    return;
  }
  if (key == "sim.seed") {
    spec.sim.seed = static_cast<std::uint64_t>(parse_int(value, key));
    return;
  }
  // sim.ok.<kpi>.mean / sim.fault.<kpi>.stddev / sim.clamp.<kpi>.lo|hi
  if (key.rfind("sim.", 0) == 0) {
    const std::size_t second = key.find('.', 4);
    if (second != std::string::npos) {
      const std::string group = key.substr(4, second - 4);
      const std::size_t third = key.find('.', second + 1);
      if (third != std::string::npos) {
        const std::string kpi = key.substr(second + 1, third - second - 1);
        const std::string field = key.substr(third + 1);
        const int f = kpi_index(kpi, key);
        const double v = parse_num(value, key);
        if (group == "ok" && field == "mean") {
          spec.sim.ok[static_cast<std::size_t>(f)].mean = v;
          return;
        }
        if (group == "ok" && field == "stddev") {
          spec.sim.ok[static_cast<std::size_t>(f)].stddev = v;
          return;
        }
        if (group == "fault" && field == "mean") {
          spec.sim.fault[static_cast<std::size_t>(f)].mean = v;
          return;
        }
        if (group == "fault" && field == "stddev") {
          spec.sim.fault[static_cast<std::size_t>(f)].stddev = v;
          return;
        }
        if (group == "clamp" && field == "lo") {
          spec.sim.clamp_lo[static_cast<std::size_t>(f)] = v;
          return;
        }
        if (group == "clamp" && field == "hi") {
          spec.sim.clamp_hi[static_cast<std::size_t>(f)] = v;
          return;
        }
      }
    }
  }
  throw std::runtime_error("config: unknown key '" + key + "'");
}

// ---------------------------------------------------------------------------
// Shared per-seed pipeline.

struct SeedData {
  Dataset train;  // scaled training partition
  std::vector<FeatureRow> test_x;
  std::vector<int> test_y;
};

SeedData prepare_seed(const ExperimentSpec& spec, std::uint64_t seed) {
  SimConfig sim = spec.sim;
  sim.seed = seed;
  const Dataset full = generate_dataset(sim);
  SplitResult split = split_dataset(full, spec.test_fraction, seed);
  const Scaler scaler = Scaler::fit(split.train);
  SeedData out;
  out.train = scaler.transform(split.train);
  Dataset test = scaler.transform(split.test);
  out.test_x = std::move(test.x);
  out.test_y = std::move(test.y);
  return out;
}

std::vector<double> score_rows(const LinearModel& model,
                               const std::vector<FeatureRow>& rows) {
  std::vector<double> scores;
  parallel::batch_scores(model, rows, scores);
  return scores;
}

std::string roc_to_csv(const std::vector<RocPoint>& curve) {
  std::string out = "fpr,tpr,threshold\n";
  for (const RocPoint& p : curve) {
    out += format_double(p.fpr) + "," + format_double(p.tpr) + "," +
           format_double(p.threshold) + "\n";
  }
  return out;
}

std::string grid_to_csv(const std::vector<std::pair<double, double>>& pts) {
  std::string out = "fpr,tpr\n";
  for (const auto& [x, y] : pts) {
    out += format_double(x) + "," + format_double(y) + "\n";
  }
  return out;
}

// Runs fn(i) for each index, parallel over seeds when OpenMP is available.
// Exceptions are captured and rethrown after the loop (the first by index).
template <typename Fn>
void for_each_index(std::size_t n, Fn&& fn) {
  std::vector<std::exception_ptr> errors(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

CostMatrix cost_at_ratio(const CostMatrix& base, double r) {
  CostMatrix cost = base;
  cost.c01 = r * cost.c10;
  return cost;
}

}  // namespace

void write_output_tree(
    const std::filesystem::path& out_dir,
    std::vector<std::pair<std::string, std::string>> files,
    const std::vector<std::string>& config_lines) {
  std::filesystem::create_directories(out_dir);
  std::sort(files.begin(), files.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string manifest = "# experiment manifest\n";
  for (const std::string& line : config_lines) {
    manifest += line;
    manifest += '\n';
  }
  manifest += "files:\n";
  for (const auto& [rel, content] : files) {
    write_file(out_dir / rel, content);
    manifest += rel + "  bytes=" + std::to_string(content.size()) +
                "  fnv1a64=" + hex16(fnv1a64(content)) + "\n";
  }
  write_file(out_dir / "manifest.txt", manifest);
}

ExperimentSpec make_default_spec(const std::string& id) {
  ExperimentSpec spec;
  spec.id = id;
  spec.sim = default_scenario();
  if (id == "fig4") {
    for (int r = 1; r <= 30; ++r) spec.cost_ratios.push_back(r);
  } else if (id == "fig5") {
    spec.cost_ratios = {1, 5, 10, 20, 30};
  }
  return spec;
}

void validate(const ExperimentSpec& spec) {
  if (spec.id != "fig3" && spec.id != "fig4" && spec.id != "fig5") {
    throw std::invalid_argument("experiment id must be fig3, fig4, or fig5");
  }
  if (spec.seeds.empty()) {
    throw std::invalid_argument("experiment needs at least one seed");
  }
  if (!(spec.test_fraction > 0.0) || !(spec.test_fraction < 1.0)) {
    throw std::invalid_argument("test_fraction must lie in (0, 1)");
  }
  if (spec.id != "fig3") {
    if (spec.cost_ratios.empty()) {
      throw std::invalid_argument(spec.id + " needs a non-empty cost_ratios list");
    }
    for (double r : spec.cost_ratios) {
      if (!(r > 0.0) || !std::isfinite(r)) {
        throw std::invalid_argument("cost ratios must be positive and finite");
      }
    }
  }
  validate(spec.sim);
  validate(spec.resample);
}

void apply_config_text(ExperimentSpec& spec, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("config: line " + std::to_string(line_no) +
                               ": expected 'key = value'");
    }
    apply_one(spec, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

void apply_config_file(ExperimentSpec& spec,
                       const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("config: cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  apply_config_text(spec, buffer.str());
}

std::vector<std::pair<double, double>> mean_roc(
    const std::vector<std::vector<RocPoint>>& curves) {
  if (curves.empty()) {
    throw std::invalid_argument("mean_roc needs at least one curve");
  }
  for (const auto& c : curves) {
    if (c.size() < 2) {
      throw std::invalid_argument("mean_roc: each curve needs >= 2 points");
    }
  }
  std::vector<std::pair<double, double>> out;
  out.reserve(101);
  std::vector<std::size_t> idx(curves.size(), 0);
  for (int g = 0; g <= 100; ++g) {
    const double x = static_cast<double>(g) / 100.0;
    double sum = 0.0;
    for (std::size_t c = 0; c < curves.size(); ++c) {
      const std::vector<RocPoint>& curve = curves[c];
      std::size_t& i = idx[c];
      while (i + 1 < curve.size() && curve[i + 1].fpr <= x) ++i;
      double tpr;
      if (i + 1 == curve.size() || curve[i].fpr >= x) {
        tpr = curve[i].tpr;
      } else {
        const RocPoint& a = curve[i];
        const RocPoint& b = curve[i + 1];
        tpr = a.tpr + (b.tpr - a.tpr) * (x - a.fpr) / (b.fpr - a.fpr);
      }
      sum += tpr;
    }
    out.emplace_back(x, sum / static_cast<double>(curves.size()));
  }
  return out;
}

void run_fig3(const ExperimentSpec& spec) {
  validate(spec);
  const std::size_t n = spec.seeds.size();
  std::vector<std::array<double, 3>> aucs(n);
  std::vector<std::array<std::vector<RocPoint>, 3>> rocs(n);

  for_each_index(n, [&](std::size_t s) {
    const std::uint64_t seed = spec.seeds[s];
    const SeedData data = prepare_seed(spec, seed);
    ResampleConfig rc = spec.resample;
    rc.seed = seed;

    const Dataset over = oversample(data.train, rc);
    const Dataset synth = smote(data.train, rc).data;

    const std::array<const Dataset*, 3> train_sets = {&data.train, &over,
                                                      &synth};
    for (std::size_t m = 0; m < 3; ++m) {
      const LinearModel model = train_svm(*train_sets[m], spec.svm);
      const std::vector<double> scores = score_rows(model, data.test_x);
      aucs[s][m] = auc(data.test_y, scores);
      rocs[s][m] = roc_curve(data.test_y, scores);
    }
  });

  OutputTree tree(spec.out_dir);
  std::string auc_csv = "seed,plain,oversample,smote\n";
  for (std::size_t s = 0; s < n; ++s) {
    auc_csv += std::to_string(spec.seeds[s]);
    for (std::size_t m = 0; m < 3; ++m) {
      auc_csv += "," + format_double(aucs[s][m]);
    }
    auc_csv += '\n';
  }
  tree.add("auc.csv", auc_csv);

  const std::array<std::string, 3> file_names = {"roc_plain.csv",
                                                 "roc_oversample.csv",
                                                 "roc_smote.csv"};
  const std::array<std::string, 3> series_names = {
      "plain SVM", "oversampling + SVM", "SMOTE + SVM"};
  std::vector<SvgSeries> series;
  for (std::size_t m = 0; m < 3; ++m) {
    std::vector<std::vector<RocPoint>> curves;
    curves.reserve(n);
    for (std::size_t s = 0; s < n; ++s) curves.push_back(rocs[s][m]);
    const auto grid = mean_roc(curves);
    tree.add(file_names[m], grid_to_csv(grid));
    series.push_back({series_names[m], grid});
  }
  tree.add("fig3.svg", render_svg(series, "false positive rate",
                                  "true positive rate",
                                  "Mean ROC across seeds by method"));
  tree.write_all(config_echo(spec));
}

void run_fig4(const ExperimentSpec& spec) {
  validate(spec);
  const std::size_t n = spec.seeds.size();
  const std::size_t nr = spec.cost_ratios.size();
  // costs[s][r][m]: method m in {plain, cs, cs_smote}.
  std::vector<std::vector<std::array<double, 3>>> costs(
      n, std::vector<std::array<double, 3>>(nr));

  for_each_index(n, [&](std::size_t s) {
    const std::uint64_t seed = spec.seeds[s];
    const SeedData data = prepare_seed(spec, seed);
    ResampleConfig rc = spec.resample;
    rc.seed = seed;
    const Dataset synth = smote(data.train, rc).data;

    // The plain model ignores costs, so one fit serves every ratio; only
    // the cost accounting changes with r.
    const LinearModel plain = train_svm(data.train, spec.svm);
    const Confusion plain_conf = parallel::tally(
        data.test_y, score_rows(plain, data.test_x), 0.0);

    // Each cost-sensitive model continues from the previous ratio's dual
    // solution: along the ratio grid the optima move smoothly, so the warm
    // start cuts the solver work by orders of magnitude at high ratios.
    std::vector<double> warm_cs, warm_cs_sm;
    for (std::size_t ri = 0; ri < nr; ++ri) {
      const double r = spec.cost_ratios[ri];
      const CostMatrix eval_cost = cost_at_ratio(spec.svm.cost, r);
      SvmConfig cs_cfg = spec.svm;
      cs_cfg.cost = eval_cost;

      costs[s][ri][0] = total_cost(plain_conf, eval_cost);

      const LinearModel cs =
          train_svm(data.train.x, data.train.y, cs_cfg, warm_cs);
      costs[s][ri][1] = total_cost(
          parallel::tally(data.test_y, score_rows(cs, data.test_x), 0.0),
          eval_cost);

      const LinearModel cs_sm = train_svm(synth.x, synth.y, cs_cfg, warm_cs_sm);
      costs[s][ri][2] = total_cost(
          parallel::tally(data.test_y, score_rows(cs_sm, data.test_x), 0.0),
          eval_cost);
    }
  });

  OutputTree tree(spec.out_dir);
  const std::array<std::string, 3> method_names = {"plain", "cs", "cs_smote"};
  std::string cost_csv = "seed,ratio,method,total_cost\n";
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t ri = 0; ri < nr; ++ri) {
      for (std::size_t m = 0; m < 3; ++m) {
        cost_csv += std::to_string(spec.seeds[s]) + "," +
                    format_double(spec.cost_ratios[ri]) + "," +
                    method_names[m] + "," +
                    format_double(costs[s][ri][m]) + "\n";
      }
    }
  }
  tree.add("costs.csv", cost_csv);

  const std::array<std::string, 3> series_names = {
      "plain SVM", "cost-sensitive SVM", "cost-sensitive SVM + SMOTE"};
  std::vector<SvgSeries> series(3);
  for (std::size_t m = 0; m < 3; ++m) {
    series[m].name = series_names[m];
    for (std::size_t ri = 0; ri < nr; ++ri) {
      double sum = 0.0;
      for (std::size_t s = 0; s < n; ++s) sum += costs[s][ri][m];
      series[m].points.emplace_back(spec.cost_ratios[ri],
                                    sum / static_cast<double>(n));
    }
  }
  tree.add("fig4.svg",
           render_svg(series, "cost ratio (missed fault : false alarm)",
                      "mean total cost", "Total cost vs cost ratio"));
  tree.write_all(config_echo(spec));
}

void run_fig5(const ExperimentSpec& spec) {
  validate(spec);
  const std::size_t n = spec.seeds.size();
  const std::size_t nr = spec.cost_ratios.size();
  std::vector<std::vector<std::vector<RocPoint>>> rocs(
      n, std::vector<std::vector<RocPoint>>(nr));
  std::vector<std::vector<double>> recalls(n, std::vector<double>(nr));

  for_each_index(n, [&](std::size_t s) {
    const std::uint64_t seed = spec.seeds[s];
    const SeedData data = prepare_seed(spec, seed);
    std::vector<double> warm;  // continue along the ratio path
    for (std::size_t ri = 0; ri < nr; ++ri) {
      SvmConfig cs_cfg = spec.svm;
      cs_cfg.cost = cost_at_ratio(spec.svm.cost, spec.cost_ratios[ri]);
      const LinearModel model =
          train_svm(data.train.x, data.train.y, cs_cfg, warm);
      const std::vector<double> scores = score_rows(model, data.test_x);
      rocs[s][ri] = roc_curve(data.test_y, scores);
      recalls[s][ri] = recall(parallel::tally(data.test_y, scores, 0.0));
    }
  });

  OutputTree tree(spec.out_dir);
  std::string recall_csv = "seed,ratio,recall\n";
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t ri = 0; ri < nr; ++ri) {
      tree.add("roc_seed" + std::to_string(spec.seeds[s]) + "_ratio" +
                   format_double(spec.cost_ratios[ri]) + ".csv",
               roc_to_csv(rocs[s][ri]));
      recall_csv += std::to_string(spec.seeds[s]) + "," +
                    format_double(spec.cost_ratios[ri]) + "," +
                    format_double(recalls[s][ri]) + "\n";
    }
  }
  tree.add("recall.csv", recall_csv);

  std::vector<SvgSeries> series;
  for (std::size_t ri = 0; ri < nr; ++ri) {
    std::vector<std::vector<RocPoint>> curves;
    curves.reserve(n);
    for (std::size_t s = 0; s < n; ++s) curves.push_back(rocs[s][ri]);
    series.push_back({"ratio " + format_double(spec.cost_ratios[ri]),
                      mean_roc(curves)});
  }
  tree.add("fig5.svg", render_svg(series, "false positive rate",
                                  "true positive rate",
                                  "Mean ROC across seeds by cost ratio"));
  tree.write_all(config_echo(spec));
}

void run_experiment(const ExperimentSpec& spec) {
  if (spec.id == "fig3") {
    run_fig3(spec);
  } else if (spec.id == "fig4") {
    run_fig4(spec);
  } else if (spec.id == "fig5") {
    run_fig5(spec);
  } else {
    throw std::invalid_argument("unknown experiment id '" + spec.id + "'");
  }
}

}  // namespace cellmend
