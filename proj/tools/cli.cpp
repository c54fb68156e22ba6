#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "suites.hpp"
#include "trilevel/analytic_dynamics.hpp"
#include "trilevel/verification.hpp"

namespace trilevel::cli {

namespace {

using Json = nlohmann::json;

// Every numeric parameter, by flag name.
enum class ParamKind { Real, Integer, Samples };

struct ParamSlot {
  ParamKind kind;
  std::optional<double> RunOptions::*real = nullptr;
  std::optional<int> RunOptions::*integer = nullptr;
};

const std::map<std::string, ParamSlot>& numeric_params() {
  static const std::map<std::string, ParamSlot> params{
      {"kappa1", {ParamKind::Real, &RunOptions::kappa1}},
      {"kappa2", {ParamKind::Real, &RunOptions::kappa2}},
      {"g1", {ParamKind::Real, &RunOptions::g1}},
      {"g2", {ParamKind::Real, &RunOptions::g2}},
      {"nbar", {ParamKind::Real, &RunOptions::nbar}},
      {"mbar", {ParamKind::Real, &RunOptions::mbar}},
      {"omega1", {ParamKind::Real, &RunOptions::omega1}},
      {"omega2", {ParamKind::Real, &RunOptions::omega2}},
      {"delta1", {ParamKind::Real, &RunOptions::delta1}},
      {"delta2", {ParamKind::Real, &RunOptions::delta2}},
      {"tmax", {ParamKind::Real, &RunOptions::tmax}},
      {"n", {ParamKind::Integer, nullptr, &RunOptions::n}},
      {"m", {ParamKind::Integer, nullptr, &RunOptions::m}},
      {"initial", {ParamKind::Integer, nullptr, &RunOptions::initial}},
      {"samples", {ParamKind::Samples}},
  };
  return params;
}

const std::map<std::string, std::optional<std::string> RunOptions::*>& text_params() {
  static const std::map<std::string, std::optional<std::string> RunOptions::*> params{
      {"model", &RunOptions::model},   {"field", &RunOptions::field},
      {"out", &RunOptions::out},       {"format", &RunOptions::format},
      {"method", &RunOptions::method}, {"weights", &RunOptions::weights},
  };
  return params;
}

template <typename T>
void take(std::optional<T>& dst, const std::optional<T>& src) {
  if (src) dst = src;
}

FieldKind parse_field(const std::string& name) {
  if (name == "classical") return FieldKind::Classical;
  if (name == "number") return FieldKind::Number;
  if (name == "coherent") return FieldKind::Coherent;
  throw UsageError("unknown field '" + name + "' (expected classical, number or coherent)");
}

std::string to_string(FieldKind f) {
  switch (f) {
    case FieldKind::Classical: return "classical";
    case FieldKind::Number: return "number";
    case FieldKind::Coherent: return "coherent";
  }
  return "unknown";
}

Method parse_method(const std::string& name) {
  if (name == "auto") return Method::Auto;
  if (name == "analytic") return Method::Analytic;
  if (name == "oracle") return Method::Oracle;
  throw UsageError("unknown method '" + name + "' (expected auto, analytic or oracle)");
}

std::string to_string(Method m) {
  switch (m) {
    case Method::Auto: return "auto";
    case Method::Analytic: return "analytic";
    case Method::Oracle: return "oracle";
  }
  return "unknown";
}

WeightIndexing parse_weights(const std::string& name) {
  if (name == "literal") return WeightIndexing::ManifoldLabel;
  if (name == "occupation") return WeightIndexing::InitialOccupation;
  throw UsageError("unknown weights '" + name + "' (expected literal or occupation)");
}

std::string to_string(WeightIndexing w) {
  return w == WeightIndexing::ManifoldLabel ? "literal" : "occupation";
}

std::string case_label(FieldKind field, Level level) {
  static const std::array<const char*, 3> classical{"I", "II", "III"};
  static const std::array<const char*, 3> quantized{"IV", "V", "VI"};
  const auto idx = static_cast<std::size_t>(level_number(level) - 1);
  return field == FieldKind::Classical ? classical[idx] : quantized[idx];
}

template <typename T>
T require(const std::optional<T>& value, const char* flag, FieldKind field) {
  if (!value)
    throw UsageError(std::string("--") + flag + " is required for the " + to_string(field) +
                     " field");
  return *value;
}

double non_negative(double value, const char* flag) {
  if (!(value >= 0.0) || !std::isfinite(value))
    throw UsageError(std::string("--") + flag + " must be finite and non-negative");
  return value;
}

// RK4 with a step that divides the grid spacing, sampled on the grid.
std::vector<Amplitudes> sample_rk4(const RunConfig& c, const std::vector<double>& grid) {
  const auto [w1, w2] = field_frequencies(c.model, c.atom, c.delta1, c.delta2);
  const DriveParams drive{w1, w2, c.kappa1, c.kappa2};
  const double dt = grid[1] - grid[0];
  const double base = default_rk4_step(c.model, c.atom, drive, c.t_max);
  const auto sub = static_cast<std::size_t>(std::max(1.0, std::ceil(dt / base)));
  OracleConfig oracle;
  oracle.t_max = c.t_max;
  oracle.step = dt / static_cast<double>(sub);
  const AmplitudeTrace trace = rk4_semiclassical(c.model, c.atom, drive, c.initial, oracle);
  const std::size_t stride = (trace.times.size() - 1) / (grid.size() - 1);
  std::vector<Amplitudes> amps;
  for (std::size_t k = 0; k < grid.size(); ++k) amps.push_back(trace.amplitudes[k * stride]);
  return amps;
}

void put_probabilities(TraceData& data, const ProbabilityTriple& p) {
  data.p1.push_back(p.p1);
  data.p2.push_back(p.p2);
  data.p3.push_back(p.p3);
}

std::string fmt(double x) { return format_double(x); }

// One-line machine-readable failure report.
int fail(std::ostream& err, ExitCode code, const std::string& kind, const std::string& message) {
  Json j;
  j["error"] = kind;
  j["exit_code"] = static_cast<int>(code);
  j["message"] = message;
  err << j.dump() << '\n';
  return code;
}

void add_run_options(CLI::App* cmd, RunOptions& o, std::string& config_path) {
  cmd->add_option("--config", config_path, "JSON file with run settings; flags override it");
  cmd->add_option("--model", o.model, "lambda | vee | cascade");
  cmd->add_option("--field", o.field, "classical | number | coherent");
  cmd->add_option("--kappa1", o.kappa1, "classical coupling of mode 1");
  cmd->add_option("--kappa2", o.kappa2, "classical coupling of mode 2");
  cmd->add_option("--g1", o.g1, "cavity coupling of mode 1");
  cmd->add_option("--g2", o.g2, "cavity coupling of mode 2");
  cmd->add_option("--n", o.n, "manifold label n (number field)");
  cmd->add_option("--m", o.m, "manifold label m (number field)");
  cmd->add_option("--nbar", o.nbar, "mean photon number attached to label n (coherent field)");
  cmd->add_option("--mbar", o.mbar, "mean photon number attached to label m (coherent field)");
  cmd->add_option("--omega1", o.omega1, "atomic frequency omega1 (oracle integration)");
  cmd->add_option("--omega2", o.omega2, "atomic frequency omega2 (oracle integration)");
  cmd->add_option("--delta1", o.delta1, "detuning of mode 1 (classical oracle only)");
  cmd->add_option("--delta2", o.delta2, "detuning of mode 2 (classical oracle only)");
  cmd->add_option("--initial", o.initial, "initially occupied level: 1, 2 or 3");
  cmd->add_option("--tmax", o.tmax, "end of the time grid");
  cmd->add_option("--samples", o.samples, "number of time samples (>= 2)");
  cmd->add_option("--format", o.format, "csv | json");
  cmd->add_option("--method", o.method, "auto | analytic | oracle");
  cmd->add_option("--weights", o.weights, "coherent weight indexing: literal | occupation");
}

RunOptions options_with_config(const RunOptions& flags, const std::string& config_path) {
  if (config_path.empty()) return flags;
  return merge(load_config_file(config_path), flags);
}

struct Summary {
  std::array<double, 3> lo{}, hi{};
};

Summary summarize(const TraceData& d) {
  Summary s;
  const std::array<const std::vector<double>*, 3> cols{&d.p1, &d.p2, &d.p3};
  for (std::size_t k = 0; k < 3; ++k) {
    const auto [lo, hi] = std::minmax_element(cols[k]->begin(), cols[k]->end());
    s.lo[k] = *lo;
    s.hi[k] = *hi;
  }
  return s;
}

int cmd_simulate(const RunOptions& flags, const std::string& config_path, std::ostream& out) {
  RunOptions options = options_with_config(flags, config_path);
  if (!options.out) throw UsageError("--out is required (use - for standard output)");
  const RunConfig config = resolve(options);
  const TraceData data = simulate(config);
  if (config.output_path == "-") {
    write_trace(data, config.format, out);
    return kOk;
  }
  write_trace_file(data, config.format, config.output_path);
  const Summary s = summarize(data);
  out << "wrote " << config.output_path << " (" << data.t.size() << " rows, "
      << to_string(config.format) << ")\n";
  for (std::size_t k = 0; k < 3; ++k)
    out << "p" << k + 1 << " min=" << fmt(s.lo[k]) << " max=" << fmt(s.hi[k]) << '\n';
  return kOk;
}

int cmd_verify(const std::string& suite, std::ostream& out) {
  std::vector<CheckResult> results;
  try {
    results = run_suite(suite);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    out << (r.passed ? "PASS" : "FAIL") << "  " << r.suite << ": " << r.name
        << "  max_dev=" << fmt(r.deviation) << "  tol=" << fmt(r.tolerance);
    if (!r.note.empty()) out << "  (" << r.note << ')';
    out << '\n';
  }
  const auto passed = std::count_if(results.begin(), results.end(),
                                    [](const CheckResult& r) { return r.passed; });
  out << passed << '/' << results.size() << " checks passed\n";
  return all ? kOk : kVerificationFailed;
}

std::vector<double> sweep_values(const std::string& values, const std::string& range) {
  if (!values.empty() && !range.empty()) throw UsageError("give either --values or --range");
  std::vector<double> out;
  const auto number = [](const std::string& text) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(text, &used);
    } catch (const std::exception&) {
      throw UsageError("invalid sweep value '" + text + "'");
    }
    if (used != text.size()) throw UsageError("invalid sweep value '" + text + "'");
    return v;
  };
  if (!values.empty()) {
    std::stringstream ss(values);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) out.push_back(number(item));
  } else if (!range.empty()) {
    std::stringstream ss(range);
    std::string a, b, c;
    if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c))
      throw UsageError("--range expects start:stop:count");
    const double start = number(a), stop = number(b), count = number(c);
    if (count < 1 || count != std::floor(count))
      throw UsageError("--range count must be a positive integer");
    const auto k = static_cast<std::size_t>(count);
    for (std::size_t i = 0; i < k; ++i)
      out.push_back(k == 1 ? start
                           : start + (stop - start) * static_cast<double>(i) /
                                         static_cast<double>(k - 1));
  }
  if (out.empty()) throw UsageError("sweep needs at least one value (--values or --range)");
  return out;
}

int cmd_sweep(const RunOptions& flags, const std::string& config_path, const std::string& param,
              const std::string& values_text, const std::string& range_text,
              const std::string& out_dir, bool force, unsigned jobs, std::ostream& out) {
  if (param.empty()) throw UsageError("--param is required");
  if (out_dir.empty()) throw UsageError("--out-dir is required");
  RunOptions base = options_with_config(flags, config_path);
  if (base.out) throw UsageError("--out is not used by sweep; give --out-dir");
  const std::vector<double> values = sweep_values(values_text, range_text);

  const TraceFormat format = parse_format(base.format.value_or("csv"));
  const std::filesystem::path dir(out_dir);
  struct Job {
    double value;
    std::filesystem::path file;
    RunConfig config;
  };
  std::vector<Job> work;
  std::set<std::string> names;
  for (const double v : values) {
    RunOptions o = base;
    set_parameter(o, param, v);
    const std::string name = o.model.value_or("model") + "_" + o.field.value_or("field") + "_" +
                             param + "-" + fmt(v) + "." + to_string(format);
    if (!names.insert(name).second)
      throw UsageError("sweep values produce the same file name twice: " + name);
    o.out = (dir / name).string();
    work.push_back({v, dir / name, resolve(o)});
  }

  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create '" + dir.string() + "': " + ec.message());
  const std::filesystem::path index = dir / "index.json";
  if (!force) {
    for (const auto& job : work)
      if (std::filesystem::exists(job.file))
        throw IoError("refusing to overwrite '" + job.file.string() + "' (use --force)");
    if (std::filesystem::exists(index))
      throw IoError("refusing to overwrite '" + index.string() + "' (use --force)");
  }

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;
  const auto worker = [&] {
    for (std::size_t k = next++; k < work.size(); k = next++) {
      try {
        write_trace_file(simulate(work[k].config), format, work[k].file);
      } catch (...) {
        const std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(work.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (first_error) std::rethrow_exception(first_error);

  nlohmann::ordered_json manifest;
  manifest["version"] = kVersion;
  manifest["param"] = param;
  manifest["format"] = to_string(format);
  nlohmann::ordered_json runs = nlohmann::ordered_json::array();
  for (const auto& job : work)
    runs.push_back({{"value", job.value},
                    {"file", job.file.filename().string()},
                    {"samples", job.config.samples},
                    {"t_max", job.config.t_max}});
  manifest["runs"] = std::move(runs);
  write_text_file_atomic(manifest.dump(2) + "\n", index);

  out << "wrote " << work.size() << " traces and " << index.string() << '\n';
  return kOk;
}

}  // namespace

RunOptions merge(const RunOptions& base, const RunOptions& over) {
  RunOptions r = base;
  take(r.model, over.model);
  take(r.field, over.field);
  take(r.out, over.out);
  take(r.format, over.format);
  take(r.method, over.method);
  take(r.weights, over.weights);
  take(r.kappa1, over.kappa1);
  take(r.kappa2, over.kappa2);
  take(r.g1, over.g1);
  take(r.g2, over.g2);
  take(r.nbar, over.nbar);
  take(r.mbar, over.mbar);
  take(r.omega1, over.omega1);
  take(r.omega2, over.omega2);
  take(r.delta1, over.delta1);
  take(r.delta2, over.delta2);
  take(r.n, over.n);
  take(r.m, over.m);
  take(r.initial, over.initial);
  take(r.tmax, over.tmax);
  take(r.samples, over.samples);
  return r;
}

void set_parameter(RunOptions& options, const std::string& name, double value) {
  const auto it = numeric_params().find(name);
  if (it == numeric_params().end()) throw UsageError("unknown numeric parameter '" + name + "'");
  const ParamSlot& slot = it->second;
  if (slot.kind == ParamKind::Real) {
    options.*(slot.real) = value;
    return;
  }
  if (value != std::floor(value) || std::abs(value) > std::numeric_limits<int>::max())
    throw UsageError("parameter '" + name + "' must be an integer, got " + fmt(value));
  if (slot.kind == ParamKind::Integer)
    options.*(slot.integer) = static_cast<int>(value);
  else
    options.samples = static_cast<long long>(value);
}

RunOptions load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path.string() + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError("config file '" + path.string() + "' is not valid JSON: " + e.what());
  }
  if (!doc.is_object()) throw UsageError("config file must hold a JSON object");
  RunOptions o;
  for (const auto& [key, value] : doc.items()) {
    if (const auto t = text_params().find(key); t != text_params().end()) {
      if (!value.is_string()) throw UsageError("config key '" + key + "' must be a string");
      o.*(t->second) = value.get<std::string>();
    } else if (numeric_params().count(key)) {
      if (!value.is_number()) throw UsageError("config key '" + key + "' must be a number");
      set_parameter(o, key, value.get<double>());
    } else {
      throw UsageError("unknown config key '" + key + "'");
    }
  }
  return o;
}

RunConfig resolve(const RunOptions& o) {
  RunConfig c;
  try {
    if (!o.model) throw UsageError("--model is required");
    if (!o.field) throw UsageError("--field is required");
    c.model = parse_configuration(*o.model);
    c.field = parse_field(*o.field);
    c.format = parse_format(o.format.value_or("csv"));
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const Method requested = parse_method(o.method.value_or("auto"));
  c.weights = parse_weights(o.weights.value_or("literal"));
  c.output_path = o.out.value_or("");

  const int initial = o.initial.value_or(1);
  if (initial < 1 || initial > 3) throw UsageError("--initial must be 1, 2 or 3");
  c.initial = static_cast<Level>(initial);

  c.atom.omega1 = o.omega1.value_or(c.atom.omega1);
  c.atom.omega2 = o.omega2.value_or(c.atom.omega2);
  c.delta1 = o.delta1.value_or(0.0);
  c.delta2 = o.delta2.value_or(0.0);
  const bool detuned = c.delta1 != 0.0 || c.delta2 != 0.0;
  const bool solvable = c.model != Configuration::Cascade;

  switch (c.field) {
    case FieldKind::Classical:
      c.kappa1 = non_negative(require(o.kappa1, "kappa1", c.field), "kappa1");
      c.kappa2 = non_negative(require(o.kappa2, "kappa2", c.field), "kappa2");
      if (requested == Method::Analytic && !solvable)
        throw UsageError("no closed form for the cascade configuration; use --method oracle");
      if (requested == Method::Analytic && detuned)
        throw UsageError("closed forms need zero detuning; use --method oracle");
      c.method = requested != Method::Auto ? requested
                 : (solvable && !detuned)  ? Method::Analytic
                                           : Method::Oracle;
      break;
    case FieldKind::Number: {
      c.cavity.g1 = non_negative(require(o.g1, "g1", c.field), "g1");
      c.cavity.g2 = non_negative(require(o.g2, "g2", c.field), "g2");
      c.n = require(o.n, "n", c.field);
      c.m = require(o.m, "m", c.field);
      if (c.n < 0 || c.m < 0) throw UsageError("--n and --m must be non-negative");
      if (detuned) throw UsageError("detunings apply to the classical field only");
      if (requested == Method::Analytic && !solvable)
        throw UsageError("no closed form for the cascade configuration; use --method oracle");
      const BareState start = coupled_triple(c.model, c.n, c.m)[basis_index(c.initial)];
      if (start.photons1 < 0 || start.photons2 < 0)
        throw UsageError("initial level " + std::to_string(initial) + " in manifold (n=" +
                         std::to_string(c.n) + ", m=" + std::to_string(c.m) +
                         ") would hold a negative photon number");
      c.method = requested != Method::Auto ? requested
                 : solvable                ? Method::Analytic
                                           : Method::Oracle;
      break;
    }
    case FieldKind::Coherent:
      c.cavity.g1 = non_negative(require(o.g1, "g1", c.field), "g1");
      c.cavity.g2 = non_negative(require(o.g2, "g2", c.field), "g2");
      c.nbar = non_negative(require(o.nbar, "nbar", c.field), "nbar");
      c.mbar = non_negative(require(o.mbar, "mbar", c.field), "mbar");
      if (!solvable)
        throw UsageError("coherent averaging is available for lambda and vee only");
      if (detuned) throw UsageError("detunings apply to the classical field only");
      if (requested == Method::Oracle)
        throw UsageError("the coherent field has no oracle path; use --method analytic");
      c.method = Method::Analytic;
      break;
  }

  if (o.tmax) {
    c.t_max = *o.tmax;
  } else if (c.field == FieldKind::Coherent) {
    const CoherentSpec spec{c.nbar, c.mbar, -1, -1, c.weights};
    const double revival = revival_time_estimate(c.model, c.cavity, spec, c.initial);
    c.t_max = revival > 0.0 ? 2.0 * revival : 100.0;
  }
  if (!(c.t_max > 0.0) || !std::isfinite(c.t_max)) throw UsageError("--tmax must be positive");

  if (o.samples) {
    if (*o.samples < 2) throw UsageError("--samples must be at least 2");
    c.samples = static_cast<std::size_t>(*o.samples);
  } else if (c.field == FieldKind::Coherent) {
    const CoherentSpec spec{c.nbar, c.mbar, -1, -1, c.weights};
    c.samples = recommended_samples(c.t_max, max_rabi_frequency(c.model, c.cavity, spec,
                                                                c.initial));
  }
  return c;
}

TraceData simulate(const RunConfig& c) {
  TraceData data;
  data.t = uniform_grid(0.0, c.t_max, c.samples);
  auto& meta = data.metadata;
  meta.emplace_back("version", std::string("trilevel ") + kVersion);
  meta.emplace_back("model", std::string(trilevel::to_string(c.model)));
  meta.emplace_back("field", to_string(c.field));
  meta.emplace_back("case", case_label(c.field, c.initial));
  meta.emplace_back("initial", std::to_string(level_number(c.initial)));
  meta.emplace_back("method", to_string(c.method));

  switch (c.field) {
    case FieldKind::Classical: {
      meta.emplace_back("kappa1", fmt(c.kappa1));
      meta.emplace_back("kappa2", fmt(c.kappa2));
      if (c.method == Method::Analytic) {
        for (const double t : data.t)
          put_probabilities(data,
                            semiclassical_probabilities(c.model, c.kappa1, c.kappa2, c.initial, t));
      } else {
        meta.emplace_back("omega1", fmt(c.atom.omega1));
        meta.emplace_back("omega2", fmt(c.atom.omega2));
        meta.emplace_back("delta1", fmt(c.delta1));
        meta.emplace_back("delta2", fmt(c.delta2));
        for (const auto& a : sample_rk4(c, data.t)) put_probabilities(data, probabilities_of(a));
      }
      break;
    }
    case FieldKind::Number: {
      meta.emplace_back("g1", fmt(c.cavity.g1));
      meta.emplace_back("g2", fmt(c.cavity.g2));
      meta.emplace_back("n", std::to_string(c.n));
      meta.emplace_back("m", std::to_string(c.m));
      const Amplitudes start = basis_amplitudes(c.initial);
      for (const double t : data.t) {
        const Amplitudes a =
            c.method == Method::Analytic
                ? quantized_amplitudes(c.model, c.cavity, c.n, c.m, start, t)
                : block_exponential(c.model, c.cavity, c.n, c.m, t) * start;
        put_probabilities(data, probabilities_of(a));
      }
      break;
    }
    case FieldKind::Coherent: {
      const CoherentSpec spec{c.nbar, c.mbar, -1, -1, c.weights};
      const AveragedTrace trace = averaged_probabilities(c.model, c.cavity, spec, c.initial, data.t);
      meta.emplace_back("g1", fmt(c.cavity.g1));
      meta.emplace_back("g2", fmt(c.cavity.g2));
      meta.emplace_back("nbar", fmt(c.nbar));
      meta.emplace_back("mbar", fmt(c.mbar));
      meta.emplace_back("weights", to_string(c.weights));
      meta.emplace_back("cutoff_n", std::to_string(trace.spec.cutoff_n));
      meta.emplace_back("cutoff_m", std::to_string(trace.spec.cutoff_m));
      meta.emplace_back("weight_mass", fmt(trace.weight_mass));
      data.p1 = trace.p1;
      data.p2 = trace.p2;
      data.p3 = trace.p3;
      break;
    }
  }
  meta.emplace_back("t_max", fmt(c.t_max));
  meta.emplace_back("samples", std::to_string(c.samples));
  return data;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Three-level atom dynamics: closed forms, oracles and trace output", "trilevel"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("trilevel ") + kVersion);

  RunOptions sim_opts;
  std::string sim_config;
  CLI::App* sim = app.add_subcommand("simulate", "Write a population trace");
  add_run_options(sim, sim_opts, sim_config);
  sim->add_option("--out", sim_opts.out, "output file, or - for standard output");

  std::string suite = "all";
  CLI::App* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("suite", suite, "algebra | oracle | symmetry | correspondence | all");

  CLI::App* algebra = app.add_subcommand("algebra-check", "Same as `verify algebra`");

  RunOptions sweep_opts;
  std::string sweep_config, param, values, range, out_dir;
  bool force = false;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  CLI::App* sweep = app.add_subcommand("sweep", "Run one simulation per parameter value");
  add_run_options(sweep, sweep_opts, sweep_config);
  sweep->add_option("--out", sweep_opts.out, "not used; traces go to --out-dir");
  sweep->add_option("--param", param, "parameter to vary (a flag name without dashes)");
  sweep->add_option("--values", values, "comma-separated values");
  sweep->add_option("--range", range, "start:stop:count, endpoints included");
  sweep->add_option("--out-dir", out_dir, "directory for the traces and index.json");
  sweep->add_flag("--force", force, "overwrite existing files");
  sweep->add_option("--jobs", jobs, "concurrent runs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return fail(err, kUsage, "usage", e.what());
  }

  try {
    if (*sim) return cmd_simulate(sim_opts, sim_config, out);
    if (*verify) return cmd_verify(suite, out);
    if (*algebra) return cmd_verify("algebra", out);
    if (*sweep)
      return cmd_sweep(sweep_opts, sweep_config, param, values, range, out_dir, force, jobs, out);
  } catch (const UsageError& e) {
    return fail(err, kUsage, "usage", e.what());
  } catch (const IoError& e) {
    return fail(err, kIo, "io", e.what());
  } catch (const OracleQualityError& e) {
    return fail(err, kVerificationFailed, "oracle", e.what());
  } catch (const std::invalid_argument& e) {
    return fail(err, kUsage, "usage", e.what());
  } catch (const std::domain_error& e) {
    return fail(err, kUsage, "usage", e.what());
  } catch (const std::exception& e) {
    return fail(err, kVerificationFailed, "runtime", e.what());
  }
  return fail(err, kUsage, "usage", "no subcommand given");
}

}  // namespace trilevel::cli
