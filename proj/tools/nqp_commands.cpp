#include "nqp_commands.hpp"

#include <clocale>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nqp/analysis.hpp"
#include "nqp/charfunc.hpp"
#include "nqp/errors.hpp"
#include "nqp/filters.hpp"
#include "nqp/io.hpp"
#include "nqp/quasiprob.hpp"
#include "nqp/spats.hpp"
#include "nqp/version.hpp"

namespace nqp::cli {

namespace {

using nlohmann::json;

struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string timestamp_utc() {
  char buf[32];
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::filesystem::path manifest_path(const std::filesystem::path& out) {
  std::filesystem::path p = out;
  p.replace_extension(".manifest.json");
  return p;
}

void write_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw data_error("cannot open for writing: " + path.string());
  out << j.dump(2) << "\n";
  if (!out) throw data_error("write failed: " + path.string());
}

void write_manifest(const std::string& command, const json& params,
                    const std::filesystem::path& out) {
  json m;
  m["command"] = command;
  m["params"] = params;
  m["tool_version"] = kVersion;
  m["timestamp"] = timestamp_utc();
  write_json(manifest_path(out), m);
}

double jget(const json& j, const char* key, double fallback) {
  return j.contains(key) ? j.at(key).get<double>() : fallback;
}

std::uint64_t jget_u64(const json& j, const char* key, std::uint64_t fallback) {
  return j.contains(key) ? j.at(key).get<std::uint64_t>() : fallback;
}

unsigned jthreads(const json& j) {
  return j.contains("threads") ? j.at("threads").get<unsigned>() : 1u;
}

std::vector<double> range_list(double lo, double hi, double step, const char* what) {
  if (!(step > 0.0) || !(hi >= lo)) throw usage_error(std::string(what) + ": bad range");
  std::vector<double> values;
  for (double v = lo; v <= hi + 0.5 * step; v += step) values.push_back(v);
  return values;
}

ReconstructOptions reconstruct_options(const json& p) {
  ReconstructOptions opts;
  opts.alpha_grid = uniform_alpha_grid(jget(p, "alpha_max", 3.0),
                                       static_cast<std::size_t>(jget(p, "alpha_steps", 61)));
  opts.cf_grid_step = jget(p, "db", 0.02);
  opts.nodes_per_unit = static_cast<int>(jget(p, "nodes_per_unit", 32));
  opts.threads = jthreads(p);
  return opts;
}

NonclassicalityFilter filter_from_params(const json& p) {
  const std::string kind = p.at("filter").get<std::string>();
  if (kind == "autocorr") {
    if (!p.contains("width")) throw usage_error("autocorr filter requires --width");
    return NonclassicalityFilter::autocorrelation(p.at("width").get<double>());
  }
  if (kind == "rect") {
    if (!p.contains("cutoff")) throw usage_error("rect filter requires --cutoff");
    return NonclassicalityFilter::rectangular(p.at("cutoff").get<double>());
  }
  throw usage_error("unknown filter kind '" + kind + "' (use autocorr or rect)");
}

json profile_rows_json(const QuasiprobProfile& prof) {
  json rows = json::array();
  const std::vector<double> sig = prof.significances();
  for (std::size_t i = 0; i < prof.alpha_radii.size(); ++i) {
    rows.push_back({{"alpha", prof.alpha_radii[i]},
                    {"p", prof.values[i]},
                    {"sigma", prof.sigmas[i]},
                    {"significance", sig[i]}});
  }
  return rows;
}

// ---- command executors --------------------------------------------------

void exec_simulate(const json& p) {
  const double nbar = p.at("nbar").get<double>();
  const double eta = p.at("eta").get<double>();
  const auto samples = p.at("samples").get<std::uint64_t>();
  if (nbar < 0.0) throw usage_error("--nbar must be >= 0");
  if (!(eta > 0.0) || eta > 1.0) throw usage_error("--eta must be in (0, 1]");
  if (samples < 1) throw usage_error("--samples must be >= 1");
  const SpatsParams params{nbar, eta};
  const std::uint64_t seed = jget_u64(p, "seed", 1);
  const std::filesystem::path out = p.at("out").get<std::string>();

  const QuadratureDataset data =
      sample_quadratures(params, static_cast<std::size_t>(samples), seed, jthreads(p));
  write_dataset_csv(out, data);
  write_manifest("simulate", p, out);

  double mean = 0.0, second = 0.0;
  for (double x : data.samples) {
    mean += x;
    second += x * x;
  }
  mean /= static_cast<double>(data.samples.size());
  second /= static_cast<double>(data.samples.size());
  std::printf("wrote %zu samples to %s\n", data.samples.size(), out.string().c_str());
  std::printf("mean = %.6g, <x^2> = %.6g (analytic %.6g)\n", mean, second,
              quadrature_second_moment(params));
}

void exec_charfunc(const json& p) {
  const std::filesystem::path in = p.at("in").get<std::string>();
  const std::filesystem::path out = p.at("out").get<std::string>();
  const QuadratureDataset data = read_dataset_csv(in);
  const double b_max = jget(p, "bmax", 6.0);
  if (!(b_max > 0.0)) throw usage_error("--bmax must be > 0");
  const RadialCfEstimate est =
      estimate_cf(data, uniform_radii(b_max, jget(p, "db", 0.02)), jthreads(p));
  write_cf_csv(out, est,
               {{"nbar", format_double(data.params.nbar)},
                {"eta", format_double(data.params.eta)},
                {"seed", std::to_string(data.seed)},
                {"tool_version", kVersion}});
  write_manifest("charfunc", p, out);
  std::printf("wrote %zu grid points to %s\n", est.radii().size(), out.string().c_str());
  std::printf("max |Im cf|/sigma = %.3g\n", est.max_imag_significance());
}

void exec_reconstruct(const json& p) {
  const std::filesystem::path in = p.at("in").get<std::string>();
  const std::filesystem::path out = p.at("out").get<std::string>();
  const QuadratureDataset data = read_dataset_csv(in);
  const NonclassicalityFilter filter = filter_from_params(p);
  const ReconstructOptions opts = reconstruct_options(p);

  const RadialCfEstimate est = estimate_cf(
      data, uniform_radii(filter.truncation_radius(), opts.cf_grid_step), opts.threads);
  const QuasiprobProfile prof =
      profile(est, filter, opts.alpha_grid, opts.threads, HankelOptions{opts.nodes_per_unit});
  const SignificanceResult sig = significance(prof);

  std::map<std::string, std::string> extra{{"nbar", format_double(data.params.nbar)},
                                           {"eta", format_double(data.params.eta)},
                                           {"seed", std::to_string(data.seed)},
                                           {"tool_version", kVersion}};
  const std::string format = p.contains("format") ? p.at("format").get<std::string>() : "csv";
  if (format == "csv") write_profile_csv(out, prof, extra);

  json result;
  result["command"] = "reconstruct";
  result["params"] = p;
  result["filter"] = prof.filter_descriptor;
  result["s_min"] = sig.s_min;
  result["alpha_at_min"] = sig.alpha_at_min;
  result["cf_max_imag_significance"] = est.max_imag_significance();
  result["integration"] = {{"nodes_per_unit", opts.nodes_per_unit},
                           {"cf_grid_step", opts.cf_grid_step},
                           {"b_max", filter.truncation_radius()}};
  if (format == "json") result["rows"] = profile_rows_json(prof);
  std::filesystem::path result_path = out;
  result_path.replace_extension(".json");
  write_json(result_path, result);
  write_manifest("reconstruct", p, out);

  std::printf("S_min = %.4g at |alpha| = %.4g (filter %s, N = %zu)\n", sig.s_min,
              sig.alpha_at_min, prof.filter_descriptor.c_str(), prof.source_count);
}

void exec_scan_width(const json& p) {
  const std::filesystem::path in = p.at("in").get<std::string>();
  const std::filesystem::path out = p.at("out").get<std::string>();
  const QuadratureDataset data = read_dataset_csv(in);
  const std::vector<double> widths =
      range_list(jget(p, "wmin", 0.6), jget(p, "wmax", 2.4), jget(p, "step", 0.1), "width scan");
  const WidthScanResult scan = scan_width(data, widths, reconstruct_options(p));

  const std::string format = p.contains("format") ? p.at("format").get<std::string>() : "csv";
  json rows = json::array();
  for (const auto& e : scan.entries)
    rows.push_back({{"w", e.width}, {"s_min", e.s_min}, {"alpha_at_min", e.alpha_at_min}});
  if (format == "csv") {
    std::ofstream os(out, std::ios::binary);
    if (!os) throw data_error("cannot open for writing: " + out.string());
    os << "# best_width=" << format_double(scan.best_width) << "\n";
    os << "# tool_version=" << kVersion << "\n";
    os << "w,s_min,alpha_at_min\n";
    for (const auto& e : scan.entries)
      os << format_double(e.width) << ',' << format_double(e.s_min) << ','
         << format_double(e.alpha_at_min) << "\n";
  }
  json result;
  result["command"] = "scan-width";
  result["params"] = p;
  result["best_width"] = scan.best_width;
  result["best_s_min"] = scan.best_s_min;
  if (format == "json") result["rows"] = rows;
  std::filesystem::path result_path = out;
  result_path.replace_extension(".json");
  write_json(result_path, result);
  write_manifest("scan-width", p, out);
  std::printf("best width = %.4g with S_min = %.4g\n", scan.best_width, scan.best_s_min);
}

void exec_compare_rect(const json& p) {
  const std::filesystem::path in = p.at("in").get<std::string>();
  const std::filesystem::path out = p.at("out").get<std::string>();
  if (!p.contains("cutoff")) throw usage_error("compare-rect requires --cutoff");
  const double cutoff = p.at("cutoff").get<double>();
  const QuadratureDataset data = read_dataset_csv(in);
  const ReconstructOptions opts = reconstruct_options(p);
  const NonclassicalityFilter filter = NonclassicalityFilter::rectangular(cutoff);

  const RadialCfEstimate est = estimate_cf(
      data, uniform_radii(filter.truncation_radius(), opts.cf_grid_step), opts.threads);
  const QuasiprobProfile prof =
      profile(est, filter, opts.alpha_grid, opts.threads, HankelOptions{opts.nodes_per_unit});
  const SystematicErrorBand band = rect_systematic_error(
      data.params, cutoff, opts.alpha_grid, HankelOptions{opts.nodes_per_unit});
  const SignificanceResult sig = significance(prof);
  double max_bias = 0.0;
  for (double b : band.bias) max_bias = std::max(max_bias, std::abs(b));

  std::ofstream os(out, std::ios::binary);
  if (!os) throw data_error("cannot open for writing: " + out.string());
  os << "# filter=" << prof.filter_descriptor << "\n";
  os << "# N=" << prof.source_count << "\n";
  os << "# tool_version=" << kVersion << "\n";
  os << "alpha,p,sigma,significance,bias\n";
  const std::vector<double> sigs = prof.significances();
  for (std::size_t i = 0; i < prof.alpha_radii.size(); ++i)
    os << format_double(prof.alpha_radii[i]) << ',' << format_double(prof.values[i]) << ','
       << format_double(prof.sigmas[i]) << ',' << format_double(sigs[i]) << ','
       << format_double(band.bias[i]) << "\n";

  json result;
  result["command"] = "compare-rect";
  result["params"] = p;
  result["s_min"] = sig.s_min;
  result["p_at_origin"] = prof.values.front();
  result["max_abs_bias"] = max_bias;
  std::filesystem::path result_path = out;
  result_path.replace_extension(".json");
  write_json(result_path, result);
  write_manifest("compare-rect", p, out);
  std::printf("S_min = %.4g, P(0) = %.4g, max |bias| = %.4g\n", sig.s_min, prof.values.front(),
              max_bias);
}

void exec_efficiency_sweep(const json& p) {
  const std::filesystem::path out = p.at("out").get<std::string>();
  const double nbar = p.at("nbar").get<double>();
  if (nbar < 0.0) throw usage_error("--nbar must be >= 0");
  const auto etas = p.at("etas").get<std::vector<double>>();
  if (etas.empty()) throw usage_error("--etas list is empty");
  const auto samples = p.at("samples").get<std::uint64_t>();
  if (samples < 1) throw usage_error("--samples must be >= 1");
  std::vector<std::uint64_t> seeds = p.contains("seeds")
                                         ? p.at("seeds").get<std::vector<std::uint64_t>>()
                                         : std::vector<std::uint64_t>{101, 211, 307};
  WidthStrategy strategy =
      p.contains("width")
          ? WidthStrategy::fixed(p.at("width").get<double>())
          : WidthStrategy::scan(range_list(jget(p, "wmin", 0.6), jget(p, "wmax", 2.4),
                                           jget(p, "wstep", 0.2), "width scan"));

  const std::vector<EfficiencySweepRow> rows = efficiency_sweep(
      nbar, etas, static_cast<std::size_t>(samples), seeds, strategy, reconstruct_options(p));

  const std::string format = p.contains("format") ? p.at("format").get<std::string>() : "csv";
  if (format == "csv") {
    std::ofstream os(out, std::ios::binary);
    if (!os) throw data_error("cannot open for writing: " + out.string());
    os << "# tool_version=" << kVersion << "\n";
    os << "eta,mean_s_min,wigner_origin\n";
    for (const auto& r : rows)
      os << format_double(r.eta) << ',' << format_double(r.mean_s_min) << ','
         << format_double(r.wigner_origin_value) << "\n";
  }
  json result;
  result["command"] = "efficiency-sweep";
  result["params"] = p;
  json jr = json::array();
  for (const auto& r : rows)
    jr.push_back({{"eta", r.eta},
                  {"mean_s_min", r.mean_s_min},
                  {"wigner_origin", r.wigner_origin_value},
                  {"per_seed_s_min", r.per_seed_s_min}});
  result["rows"] = jr;
  std::filesystem::path result_path = out;
  result_path.replace_extension(".json");
  write_json(result_path, result);
  write_manifest("efficiency-sweep", p, out);
  for (const auto& r : rows)
    std::printf("eta = %.3g: mean S_min = %.4g, W(0) = %.4g\n", r.eta, r.mean_s_min,
                r.wigner_origin_value);
}

void exec_verify_filter(const json& p) {
  const std::string kind = p.at("kind").get<std::string>();
  NonclassicalityFilter filter = [&] {
    if (kind == "autocorr") {
      if (!p.contains("width")) throw usage_error("autocorr filter requires --width");
      return NonclassicalityFilter::autocorrelation(p.at("width").get<double>());
    }
    if (kind == "rect") {
      if (!p.contains("cutoff")) throw usage_error("rect filter requires --cutoff");
      return NonclassicalityFilter::rectangular(p.at("cutoff").get<double>());
    }
    throw usage_error("unknown filter kind '" + kind + "' (use autocorr or rect)");
  }();

  const AxiomReport report = verify_filter_axioms(filter);
  static const char* kNames[4] = {"decay faster than exp(-b^2/2)", "nonnegative Fourier transform",
                                  "approaches 1 as width grows", "support is the whole plane"};
  std::printf("filter %s\n", filter.describe().c_str());
  for (int i = 0; i < 4; ++i)
    std::printf("axiom %d (%s): %s [%s]\n", i + 1, kNames[i],
                report.axioms[i].pass ? "PASS" : "FAIL", report.axioms[i].detail.c_str());

  if (p.contains("table_out")) {
    if (filter.kind() != FilterKind::autocorrelation)
      throw usage_error("--table-out is only available for the autocorr kind");
    write_filter_table_csv(p.at("table_out").get<std::string>(), filter);
  }
  if (p.contains("out")) {
    json result;
    result["command"] = "verify-filter";
    result["params"] = p;
    result["filter"] = filter.describe();
    result["all_pass"] = report.all_pass();
    json ax = json::array();
    for (int i = 0; i < 4; ++i)
      ax.push_back({{"axiom", i + 1},
                    {"pass", report.axioms[i].pass},
                    {"margin", report.axioms[i].margin},
                    {"detail", report.axioms[i].detail}});
    result["axioms"] = ax;
    const std::filesystem::path out = p.at("out").get<std::string>();
    write_json(out, result);
    write_manifest("verify-filter", p, out);
  }
}

void dispatch(const std::string& command, const json& params) {
  if (command == "simulate") return exec_simulate(params);
  if (command == "charfunc") return exec_charfunc(params);
  if (command == "reconstruct") return exec_reconstruct(params);
  if (command == "scan-width") return exec_scan_width(params);
  if (command == "compare-rect") return exec_compare_rect(params);
  if (command == "efficiency-sweep") return exec_efficiency_sweep(params);
  if (command == "verify-filter") return exec_verify_filter(params);
  throw usage_error("unknown command '" + command + "'");
}

void exec_replay(const json& p) {
  const std::filesystem::path manifest = p.at("manifest").get<std::string>();
  std::ifstream in(manifest, std::ios::binary);
  if (!in) throw data_error("cannot open: " + manifest.string());
  json m;
  try {
    m = json::parse(in);
  } catch (const json::exception& e) {
    throw data_error(manifest.string() + ": not a valid manifest: " + e.what());
  }
  if (!m.contains("command") || !m.contains("params"))
    throw data_error(manifest.string() + ": not a valid manifest");
  json params = m.at("params");
  if (p.contains("out")) params["out"] = p.at("out");
  dispatch(m.at("command").get<std::string>(), params);
}

std::vector<double> split_doubles(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    out.push_back(parse_double(text.substr(pos, comma - pos)));
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  return out;
}

std::vector<std::uint64_t> split_u64(const std::string& text) {
  std::vector<std::uint64_t> out;
  for (double v : split_doubles(text)) out.push_back(static_cast<std::uint64_t>(v));
  return out;
}

}  // namespace

int run(int argc, char** argv) {
  std::setlocale(LC_ALL, "C");
  CLI::App app{"nonclassicality quasiprobability toolkit"};
  app.require_subcommand(1);

  std::string command;
  json params;

  // simulate
  {
    auto* cmd = app.add_subcommand("simulate", "draw homodyne quadrature samples");
    auto nbar = std::make_shared<double>(0.49);
    auto eta = std::make_shared<double>(1.0);
    auto samples = std::make_shared<std::uint64_t>(100000);
    auto seed = std::make_shared<std::uint64_t>(1);
    auto threads = std::make_shared<unsigned>(1);
    auto out = std::make_shared<std::string>();
    cmd->add_option("--nbar", *nbar, "mean thermal photon number")->required();
    cmd->add_option("--eta", *eta, "quantum efficiency in (0, 1]")->required();
    cmd->add_option("--samples", *samples, "number of samples")->required();
    cmd->add_option("--seed", *seed, "random seed");
    cmd->add_option("--threads", *threads, "worker cap");
    cmd->add_option("--out", *out, "output dataset CSV")->required();
    cmd->callback([=, &command, &params] {
      command = "simulate";
      params = {{"nbar", *nbar},       {"eta", *eta},   {"samples", *samples},
                {"seed", *seed},       {"out", *out},   {"threads", *threads}};
    });
  }

  // charfunc
  {
    auto* cmd = app.add_subcommand("charfunc", "estimate the radial characteristic function");
    auto in = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    auto bmax = std::make_shared<double>(6.0);
    auto db = std::make_shared<double>(0.02);
    auto threads = std::make_shared<unsigned>(1);
    cmd->add_option("--in", *in, "input dataset CSV")->required();
    cmd->add_option("--out", *out, "output CSV")->required();
    cmd->add_option("--bmax", *bmax, "grid extent");
    cmd->add_option("--db", *db, "grid step");
    cmd->add_option("--threads", *threads, "worker cap");
    cmd->callback([=, &command, &params] {
      command = "charfunc";
      params = {{"in", *in}, {"out", *out}, {"bmax", *bmax}, {"db", *db}, {"threads", *threads}};
    });
  }

  // reconstruct
  {
    auto* cmd = app.add_subcommand("reconstruct", "filtered quasiprobability with errors");
    auto in = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    auto filter = std::make_shared<std::string>();
    auto width = std::make_shared<double>(0.0);
    auto cutoff = std::make_shared<double>(0.0);
    auto amax = std::make_shared<double>(3.0);
    auto asteps = std::make_shared<std::uint64_t>(61);
    auto db = std::make_shared<double>(0.02);
    auto threads = std::make_shared<unsigned>(1);
    auto format = std::make_shared<std::string>("csv");
    cmd->add_option("--in", *in, "input dataset CSV")->required();
    cmd->add_option("--out", *out, "output profile CSV")->required();
    cmd->add_option("--filter", *filter, "autocorr | rect")->required();
    auto* wopt = cmd->add_option("--width", *width, "autocorr filter width");
    auto* copt = cmd->add_option("--cutoff", *cutoff, "rect filter cutoff");
    cmd->add_option("--alpha-max", *amax, "profile grid extent");
    cmd->add_option("--alpha-steps", *asteps, "profile grid points");
    cmd->add_option("--db", *db, "cf grid step");
    cmd->add_option("--threads", *threads, "worker cap");
    cmd->add_option("--format", *format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    cmd->callback([=, &command, &params] {
      command = "reconstruct";
      params = {{"in", *in},        {"out", *out},       {"filter", *filter},
                {"alpha_max", *amax}, {"alpha_steps", *asteps}, {"db", *db},
                {"threads", *threads}, {"format", *format}};
      if (wopt->count() > 0) params["width"] = *width;
      if (copt->count() > 0) params["cutoff"] = *cutoff;
    });
  }

  // scan-width
  {
    auto* cmd = app.add_subcommand("scan-width", "optimize the autocorr filter width");
    auto in = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    auto wmin = std::make_shared<double>(0.6);
    auto wmax = std::make_shared<double>(2.4);
    auto step = std::make_shared<double>(0.1);
    auto threads = std::make_shared<unsigned>(1);
    auto format = std::make_shared<std::string>("csv");
    cmd->add_option("--in", *in, "input dataset CSV")->required();
    cmd->add_option("--out", *out, "output table CSV")->required();
    cmd->add_option("--wmin", *wmin, "smallest width");
    cmd->add_option("--wmax", *wmax, "largest width");
    cmd->add_option("--step", *step, "width step");
    cmd->add_option("--threads", *threads, "worker cap");
    cmd->add_option("--format", *format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    cmd->callback([=, &command, &params] {
      command = "scan-width";
      params = {{"in", *in},   {"out", *out},   {"wmin", *wmin},       {"wmax", *wmax},
                {"step", *step}, {"threads", *threads}, {"format", *format}};
    });
  }

  // compare-rect
  {
    auto* cmd = app.add_subcommand("compare-rect",
                                   "rect-filtered reconstruction with a-priori bias band");
    auto in = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    auto cutoff = std::make_shared<double>(0.0);
    auto threads = std::make_shared<unsigned>(1);
    cmd->add_option("--in", *in, "input dataset CSV")->required();
    cmd->add_option("--out", *out, "output table CSV")->required();
    cmd->add_option("--cutoff", *cutoff, "rect filter cutoff")->required();
    cmd->add_option("--threads", *threads, "worker cap");
    cmd->callback([=, &command, &params] {
      command = "compare-rect";
      params = {{"in", *in}, {"out", *out}, {"cutoff", *cutoff}, {"threads", *threads}};
    });
  }

  // efficiency-sweep
  {
    auto* cmd = app.add_subcommand("efficiency-sweep",
                                   "significance vs quantum efficiency (simulated)");
    auto nbar = std::make_shared<double>(0.49);
    auto etas = std::make_shared<std::string>();
    auto samples = std::make_shared<std::uint64_t>(100000);
    auto seeds = std::make_shared<std::string>("101,211,307");
    auto width = std::make_shared<double>(0.0);
    auto wmin = std::make_shared<double>(0.6);
    auto wmax = std::make_shared<double>(2.4);
    auto wstep = std::make_shared<double>(0.2);
    auto threads = std::make_shared<unsigned>(1);
    auto out = std::make_shared<std::string>();
    cmd->add_option("--nbar", *nbar, "mean thermal photon number")->required();
    cmd->add_option("--etas", *etas, "comma list of eta values")->required();
    cmd->add_option("--samples", *samples, "samples per dataset");
    cmd->add_option("--seeds", *seeds, "comma list of seeds");
    auto* wopt = cmd->add_option("--width", *width, "fixed filter width (otherwise scanned)");
    cmd->add_option("--wmin", *wmin, "scan start");
    cmd->add_option("--wmax", *wmax, "scan end");
    cmd->add_option("--wstep", *wstep, "scan step");
    cmd->add_option("--threads", *threads, "worker cap");
    cmd->add_option("--out", *out, "output table CSV")->required();
    cmd->callback([=, &command, &params] {
      command = "efficiency-sweep";
      params = {{"nbar", *nbar},   {"etas", split_doubles(*etas)}, {"samples", *samples},
                {"seeds", split_u64(*seeds)}, {"wmin", *wmin},     {"wmax", *wmax},
                {"wstep", *wstep}, {"threads", *threads},          {"out", *out}};
      if (wopt->count() > 0) params["width"] = *width;
    });
  }

  // verify-filter
  {
    auto* cmd = app.add_subcommand("verify-filter", "check the four filter requirements");
    auto kind = std::make_shared<std::string>();
    auto width = std::make_shared<double>(0.0);
    auto cutoff = std::make_shared<double>(0.0);
    auto table_out = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    cmd->add_option("--kind", *kind, "autocorr | rect")->required();
    auto* wopt = cmd->add_option("--width", *width, "autocorr filter width");
    auto* copt = cmd->add_option("--cutoff", *cutoff, "rect filter cutoff");
    auto* topt = cmd->add_option("--table-out", *table_out, "export the tabulated profile");
    auto* oopt = cmd->add_option("--out", *out, "JSON report path");
    cmd->callback([=, &command, &params] {
      command = "verify-filter";
      params = {{"kind", *kind}};
      if (wopt->count() > 0) params["width"] = *width;
      if (copt->count() > 0) params["cutoff"] = *cutoff;
      if (topt->count() > 0) params["table_out"] = *table_out;
      if (oopt->count() > 0) params["out"] = *out;
    });
  }

  // replay
  {
    auto* cmd = app.add_subcommand("replay", "re-run a command from its manifest");
    auto manifest = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    cmd->add_option("--manifest", *manifest, "manifest JSON")->required();
    auto* oopt = cmd->add_option("--out", *out, "override the output path");
    cmd->callback([=, &command, &params] {
      command = "replay";
      params = {{"manifest", *manifest}};
      if (oopt->count() > 0) params["out"] = *out;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (command == "replay")
      exec_replay(params);
    else
      dispatch(command, params);
    return 0;
  } catch (const usage_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const data_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const numeric_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  }
}

}  // namespace nqp::cli
