// Copyright 2026 The qsearch Authors
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

#include "qsearch/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include "qsearch/analysis.hpp"
#include "qsearch/circuit_io.hpp"
#include "qsearch/database.hpp"
#include "qsearch/error.hpp"
#include "qsearch/grover_long.hpp"
#include "qsearch/oracle.hpp"
#include "qsearch/qesa.hpp"
#include "qsearch/qummsa.hpp"
#include "qsearch/simplify.hpp"

namespace qsearch {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fmt(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::uint64_t parse_u64(const std::string& token) {
  std::uint64_t v = 0;
  const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || res.ec != std::errc() || res.ptr != token.data() + token.size()) {
    throw UsageError("invalid non-negative integer '" + token + "'");
  }
  return v;
}

double parse_double(const std::string& token) {
  double v = 0.0;
  const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || res.ec != std::errc() || res.ptr != token.data() + token.size() ||
      !std::isfinite(v)) {
    throw UsageError("invalid number '" + token + "'");
  }
  return v;
}

std::vector<std::uint64_t> parse_u64_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_u64(part));
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_double(part));
  return out;
}

// Accepts a plain number or [k*]pi[/d], optionally negated.
double parse_angle(const std::string& raw) {
  std::string s = trim(raw);
  const auto pi_pos = s.find("pi");
  if (pi_pos == std::string::npos) return parse_double(s);
  double sign = 1.0;
  std::string head = s.substr(0, pi_pos);
  if (!head.empty() && head.front() == '-') {
    sign = -1.0;
    head.erase(0, 1);
  }
  double coeff = 1.0;
  if (!head.empty()) {
    if (head.back() != '*') throw UsageError("invalid angle '" + raw + "'");
    head.pop_back();
    coeff = parse_double(head);
  }
  double denom = 1.0;
  const std::string tail = s.substr(pi_pos + 2);
  if (!tail.empty()) {
    if (tail.front() != '/') throw UsageError("invalid angle '" + raw + "'");
    denom = parse_double(tail.substr(1));
    if (denom == 0.0) throw UsageError("invalid angle '" + raw + "'");
  }
  return sign * coeff * std::numbers::pi / denom;
}

// Accepts an integer or 2^k.
double parse_size(const std::string& raw) {
  const std::string s = trim(raw);
  if (s.rfind("2^", 0) == 0) {
    const std::uint64_t k = parse_u64(s.substr(2));
    if (k > 62) throw UsageError("size '" + raw + "' too large");
    return std::ldexp(1.0, static_cast<int>(k));
  }
  return static_cast<double>(parse_u64(s));
}

IterationReading parse_reading(const std::string& s) {
  if (s == "half-angle") return IterationReading::HalfAngle;
  if (s == "as-printed") return IterationReading::AsPrinted;
  throw UsageError("invalid reading '" + s + "'");
}

// Runs fn(i) for i in [0, trials) on a worker pool; results are indexed by
// trial, so the output does not depend on scheduling.
template <typename R, typename F>
std::vector<R> run_trials(std::uint64_t trials, unsigned threads, F fn) {
  std::vector<R> results(trials);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex mu;
  auto worker = [&] {
    while (true) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= trials) return;
      try {
        results[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        next.store(trials);
      }
    }
  };
  unsigned count = threads != 0 ? threads : std::max(1U, std::thread::hardware_concurrency());
  count = static_cast<unsigned>(std::min<std::uint64_t>(count, std::max<std::uint64_t>(trials, 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

struct Output {
  std::string path;
  std::ostream* fallback = nullptr;

  void write(const std::string& text) const {
    if (path.empty()) {
      *fallback << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw DataError("cannot write '" + path + "'");
    f << text;
    if (!f) throw DataError("failed writing '" + path + "'");
  }
};

std::string csv_stamp(const std::string& invocation) { return "# " + invocation + "\n"; }

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw DataError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

json cost_json(const GateCostReport& r) {
  return {{"n_multi_controlled", r.n_multi_controlled},
          {"n_two_qubit_equiv", r.n_two_qubit_equiv},
          {"n_other_controlled_equiv", r.n_other_controlled_equiv},
          {"n_single", r.n_single}};
}

// ---- find-min / find-max ----

struct FindArgs {
  std::string csv;
  std::uint64_t c = 3;
  std::string strategy = "uniform";
  double confidence = 0.95;
  double error = 0.05;
  double sigma2 = 0.25;
  std::uint64_t seed = 0;
  std::uint64_t trials = 1;
  std::uint64_t retry_cap = 32;
  unsigned threads = 0;
  unsigned qubits = 0;
  std::string reading = "half-angle";
  std::string format = "json";
  std::string out;
};

std::string run_find(const FindArgs& a, SearchMode mode, const std::string& invocation) {
  const Database db =
      load_database(a.csv, a.qubits ? std::optional<unsigned>(a.qubits) : std::nullopt);
  QummsaOptions base;
  base.c = a.c;
  base.mode = mode;
  base.retry_cap = a.retry_cap;
  base.reading = parse_reading(a.reading);
  if (a.strategy == "uniform") {
    base.strategy.kind = EstimationKind::Uniform;
  } else if (a.strategy == "sampled") {
    base.strategy.kind = EstimationKind::Sampled;
    base.strategy.sample = {z_for_confidence(a.confidence), a.sigma2, a.error};
    validate(base.strategy.sample);
  } else if (a.strategy == "exact") {
    base.strategy.kind = EstimationKind::Exact;
  } else {
    throw UsageError("invalid strategy '" + a.strategy + "'");
  }
  if (a.trials == 0) throw UsageError("--trials must be positive");

  const auto results = run_trials<QummsaResult>(a.trials, a.threads, [&](std::uint64_t i) {
    QummsaOptions o = base;
    o.seed = trial_seed(a.seed, i);
    return run_qummsa(db, o);
  });

  if (a.format == "csv") {
    std::string s = csv_stamp(invocation);
    s += "trial,seed,value,success,main_loops,total_loops,grover_iterations,preparations,aborted\n";
    for (std::uint64_t i = 0; i < results.size(); ++i) {
      const auto& r = results[i];
      s += std::to_string(i) + "," + std::to_string(trial_seed(a.seed, i)) + "," +
           std::to_string(r.value) + "," + (r.success ? "1" : "0") + "," +
           std::to_string(r.main_loops) + "," + std::to_string(r.total_loops) + "," +
           std::to_string(r.grover_iterations) + "," + std::to_string(r.preparations) + "," +
           (r.aborted ? "1" : "0") + "\n";
    }
    return s;
  }
  if (a.format != "json") throw UsageError("invalid format '" + a.format + "'");

  std::map<std::uint64_t, std::uint64_t> histogram;
  double successes = 0, loops = 0, iters = 0, preps = 0;
  std::uint64_t aborted = 0;
  json rows = json::array();
  for (std::uint64_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    ++histogram[r.value];
    successes += r.success;
    loops += static_cast<double>(r.main_loops);
    iters += static_cast<double>(r.grover_iterations);
    preps += static_cast<double>(r.preparations);
    aborted += r.aborted;
    json row = {{"trial", i},
                {"seed", trial_seed(a.seed, i)},
                {"value", r.value},
                {"success", r.success},
                {"initial_rank", r.initial_rank},
                {"main_loops", r.main_loops},
                {"total_loops", r.total_loops},
                {"grover_iterations", r.grover_iterations},
                {"preparations", r.preparations},
                {"aborted", r.aborted}};
    if (results.size() == 1) {
      json searches = json::array();
      for (const auto& s : r.searches) {
        searches.push_back({{"d0", s.d0},
                            {"m_est", s.m_est},
                            {"n_est", s.n_est},
                            {"iterations", s.iterations},
                            {"d1", s.d1},
                            {"accepted", s.accepted}});
      }
      row["searches"] = searches;
    }
    rows.push_back(row);
  }
  const auto top = std::max_element(histogram.begin(), histogram.end(),
                                     [](const auto& x, const auto& y) { return x.second < y.second; });
  const double t = static_cast<double>(results.size());
  json doc = {{"invocation", invocation},
              {"command", mode == SearchMode::Min ? "find-min" : "find-max"},
              {"database", a.csv},
              {"records", db.size()},
              {"qubits", db.num_qubits()},
              {"true_extremum", db.extremum(mode)},
              {"c", a.c},
              {"strategy", a.strategy},
              {"seed", a.seed},
              {"trials", a.trials},
              {"most_frequent_value", top->first},
              {"success_frequency", successes / t},
              {"mean_main_loops", loops / t},
              {"mean_grover_iterations", iters / t},
              {"mean_preparations", preps / t},
              {"aborted_runs", aborted},
              {"results", rows}};
  return doc.dump(2) + "\n";
}

// ---- baseline-dha ----

struct DhaArgs {
  std::string csv;
  std::uint64_t seed = 0;
  std::uint64_t trials = 1;
  unsigned threads = 0;
  unsigned qubits = 0;
  double lambda = 4.0 / 3.0;
  double budget_sqrt = 22.5;
  double budget_log2 = 1.4;
  std::string format = "json";
  std::string out;
};

std::string run_dha(const DhaArgs& a, const std::string& invocation) {
  const Database db =
      load_database(a.csv, a.qubits ? std::optional<unsigned>(a.qubits) : std::nullopt);
  DhaConfig cfg;
  cfg.qesa.lambda = a.lambda;
  cfg.budget_sqrt = a.budget_sqrt;
  cfg.budget_log2 = a.budget_log2;
  validate(cfg.qesa);
  if (a.trials == 0) throw UsageError("--trials must be positive");
  const auto results = run_trials<DhaResult>(a.trials, a.threads, [&](std::uint64_t i) {
    return run_dha_minimum(db, cfg, trial_seed(a.seed, i));
  });
  if (a.format == "csv") {
    std::string s = csv_stamp(invocation);
    s += "trial,seed,minimum,is_true_minimum,grover_iterations,preparations,threshold_updates\n";
    for (std::uint64_t i = 0; i < results.size(); ++i) {
      const auto& r = results[i];
      s += std::to_string(i) + "," + std::to_string(trial_seed(a.seed, i)) + "," +
           std::to_string(r.minimum) + "," + (r.is_true_minimum ? "1" : "0") + "," +
           std::to_string(r.grover_iterations) + "," + std::to_string(r.preparations) + "," +
           std::to_string(r.threshold_updates) + "\n";
    }
    return s;
  }
  if (a.format != "json") throw UsageError("invalid format '" + a.format + "'");
  double hits = 0, iters = 0, preps = 0;
  json rows = json::array();
  for (std::uint64_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    hits += r.is_true_minimum;
    iters += static_cast<double>(r.grover_iterations);
    preps += static_cast<double>(r.preparations);
    rows.push_back({{"trial", i},
                    {"seed", trial_seed(a.seed, i)},
                    {"minimum", r.minimum},
                    {"is_true_minimum", r.is_true_minimum},
                    {"grover_iterations", r.grover_iterations},
                    {"preparations", r.preparations},
                    {"threshold_updates", r.threshold_updates}});
  }
  const double t = static_cast<double>(results.size());
  json doc = {{"invocation", invocation},
              {"command", "baseline-dha"},
              {"database", a.csv},
              {"records", db.size()},
              {"true_minimum", db.min_value()},
              {"budget", results.front().budget},
              {"seed", a.seed},
              {"trials", a.trials},
              {"success_frequency", hits / t},
              {"mean_grover_iterations", iters / t},
              {"mean_preparations", preps / t},
              {"results", rows}};
  return doc.dump(2) + "\n";
}

// ---- analysis commands ----

std::string run_failure_map(std::uint64_t resolution, const std::string& invocation) {
  if (resolution < 10) throw UsageError("--resolution must be at least 10");
  std::string s = csv_stamp(invocation) + "ratio_true,ratio_est,failure\n";
  for (const auto& cell : failure_contour_grid(resolution)) {
    s += fmt(cell.ratio_true) + "," + fmt(cell.ratio_est) + "," + fmt(cell.failure) + "\n";
  }
  return s;
}

struct CurveArgs {
  std::string errors = "0.01,0.03,0.05";
  double confidence = 0.95;
  double sigma2 = 0.25;
  std::uint64_t resolution = 50;
  std::uint64_t draws = 100;
  std::uint64_t seed = 0;
  std::string population = "2^20";
  std::string out;
};

std::string run_failure_curves(const CurveArgs& a, const std::string& invocation) {
  const double z = z_for_confidence(a.confidence);
  const double population = parse_size(a.population);
  std::string s = csv_stamp(invocation) +
                  "E,sample_size,ratio,grover_iterations,grover_long_failure,qesa_attempts,"
                  "qesa_failure\n";
  for (const double e : parse_double_list(a.errors)) {
    const SampleSpec spec{z, a.sigma2, e};
    const std::string h = std::to_string(min_sample_size(spec));
    for (const auto& p : sampled_failure_curve(spec, a.resolution, a.draws, a.seed, population)) {
      s += fmt(e) + "," + h + "," + fmt(p.ratio) + "," + std::to_string(p.grover_iterations) +
           "," + fmt(p.grover_long_failure) + "," + std::to_string(p.qesa_attempts) + "," +
           fmt(p.qesa_failure) + "\n";
    }
  }
  return s;
}

struct ComplexityArgs {
  double eps = 0.1;
  double c = 3.0;
  std::string nmin = "2^8";
  std::string nmax = "2^30";
  std::string out;
};

std::string run_complexity(const ComplexityArgs& a, const std::string& invocation) {
  const double lo = parse_size(a.nmin);
  const double hi = parse_size(a.nmax);
  if (lo < 2 || hi < lo) throw UsageError("need 2 <= --nmin <= --nmax");
  std::string s = csv_stamp(invocation) +
                  "log2_n,n,qummsa,dha,ratio,qummsa_init,dha_init,grover_closed_form,grover_sum\n";
  for (double n = std::exp2(std::ceil(std::log2(lo))); n <= hi; n *= 2.0) {
    const double q = qummsa_complexity({n, a.c, a.eps});
    const double d = dha_complexity(n, a.eps);
    s += fmt(std::log2(n)) + "," + fmt(n) + "," + fmt(q) + "," + fmt(d) + "," + fmt(q / d) + "," +
         fmt(qummsa_init_term(n, a.c)) + "," + fmt(dha_init_term(n)) + "," +
         fmt(grover_iterations_closed_form(n, n / 2.0)) + "," +
         fmt(grover_iterations_sum(n, n / 2.0)) + "\n";
  }
  return s;
}

struct SampleSizeArgs {
  double confidence = 0.95;
  double z = 0.0;
  double error = 0.05;
  double sigma2 = 0.25;
  std::string format = "text";
};

std::string run_sample_size(const SampleSizeArgs& a, const std::string& invocation) {
  const double z = a.z > 0.0 ? a.z : z_for_confidence(a.confidence);
  const SampleSpec spec{z, a.sigma2, a.error};
  const std::uint64_t h = min_sample_size(spec);
  if (a.format == "json") {
    return json{{"invocation", invocation}, {"z", z}, {"sigma2", a.sigma2},
                {"error", a.error}, {"sample_size", h}}
               .dump(2) +
           "\n";
  }
  if (a.format != "text") throw UsageError("invalid format '" + a.format + "'");
  return std::to_string(h) + "\n";
}

// ---- circuits ----

struct OracleArgs {
  unsigned n = 0;
  std::string marked;
  std::string threshold_le;
  std::string threshold_ge;
  std::string phi = "pi";
  bool simplify = false;
  std::string out;
  std::string cost_out;
};

void emit_circuit(const Circuit& c, const std::string& out_path, const std::string& cost_path,
                  const std::string& invocation, std::ostream& out) {
  const std::string qc = export_circuit(c) + "\n";
  json cost = cost_json(gate_cost(c));
  cost["invocation"] = invocation;
  cost["gates"] = c.size();
  if (!cost_path.empty()) Output{cost_path, &out}.write(cost.dump(2) + "\n");
  if (out_path.empty()) {
    out << qc;
  } else {
    Output{out_path, &out}.write(qc);
    out << cost.dump(2) << "\n";
  }
}

void run_build_oracle(const OracleArgs& a, const std::string& invocation, std::ostream& out) {
  const int chosen = !a.marked.empty() + !a.threshold_le.empty() + !a.threshold_ge.empty();
  if (chosen != 1) {
    throw UsageError("give exactly one of --marked, --threshold-le, --threshold-ge");
  }
  const double phi = parse_angle(a.phi);
  Circuit c(a.n);
  if (!a.marked.empty()) {
    c = build_multi_oracle(MarkedSet(a.n, parse_u64_list(a.marked)), phi);
  } else {
    const bool le = !a.threshold_le.empty();
    const ThresholdPredicate pred{le ? SearchMode::Min : SearchMode::Max,
                                  parse_u64(le ? a.threshold_le : a.threshold_ge), a.n};
    c = build_threshold_oracle(pred, phi);
  }
  if (a.simplify) c = simplify_all(c);
  emit_circuit(c, a.out, a.cost_out, invocation, out);
}

struct SimplifyArgs {
  std::string file;
  std::string pass = "all";
  std::string out;
  std::string cost_out;
};

void run_simplify(const SimplifyArgs& a, const std::string& invocation, std::ostream& out) {
  const Circuit c = parse_circuit(read_text_file(a.file));
  Circuit r(c.num_qubits());
  if (a.pass == "all") {
    r = simplify_all(c);
  } else if (a.pass == "1") {
    r = simplify_principle1(c);
  } else if (a.pass == "2") {
    r = simplify_principle2(c);
  } else if (a.pass == "3") {
    r = simplify_principle3(c);
  } else {
    throw UsageError("invalid pass '" + a.pass + "'");
  }
  emit_circuit(r, a.out, a.cost_out, invocation, out);
}

struct SimulateArgs {
  std::string file;
  std::string initial = "uniform";
  std::uint64_t grover_iterations = 0;
  std::string phi;
  std::string marked;
  std::string out;
};

StateVector parse_initial(const std::string& spec, unsigned n) {
  if (spec == "uniform") {
    std::vector<std::uint64_t> all(std::size_t{1} << n);
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return make_superposition(n, all);
  }
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("invalid initial state '" + spec + "'");
  const std::string kind = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  if (kind == "basis") return make_basis_state(n, parse_u64(rest));
  if (kind == "set") return make_superposition(n, parse_u64_list(rest));
  if (kind == "db") return make_superposition(n, load_database(rest, n).sorted_values());
  throw UsageError("invalid initial state '" + spec + "'");
}

std::string run_simulate(const SimulateArgs& a, const std::string& invocation) {
  const Circuit c = parse_circuit(read_text_file(a.file));
  const unsigned n = c.num_qubits();
  if (n > kMaxQubits) throw RangeError("circuit too wide to simulate");
  const StateVector initial = parse_initial(a.initial, n);
  StateVector state = initial;
  if (a.grover_iterations == 0) {
    run_circuit(c, state);
  } else {
    if (a.phi.empty()) throw UsageError("--grover-iterations needs --phi");
    const double phi = parse_angle(a.phi);
    for (std::uint64_t j = 0; j < a.grover_iterations; ++j) {
      run_circuit(c, state);
      apply_rank1_reflection(state, initial, phi);
    }
  }
  std::string s = csv_stamp(invocation);
  if (!a.marked.empty()) {
    const MarkedSet m(n, parse_u64_list(a.marked));
    s += "# marked_probability: " + fmt(success_probability(state, m)) + "\n";
  }
  s += "index,bits,amplitude_re,amplitude_im,probability\n";
  for (std::size_t i = 0; i < state.size(); ++i) {
    s += std::to_string(i) + "," + encode_bits(i, n) + "," + fmt(state[i].real()) + "," +
         fmt(state[i].imag()) + "," + fmt(std::norm(state[i])) + "\n";
  }
  return s;
}

std::string join_invocation(const std::vector<std::string>& args) {
  std::string s = "qsearch";
  for (const auto& a : args) {
    s += ' ';
    if (a.find_first_of(" \t\"") == std::string::npos && !a.empty()) {
      s += a;
    } else {
      s += '"';
      for (char ch : a) {
        if (ch == '"') s += '\\';
        s += ch;
      }
      s += '"';
    }
  }
  return s;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classical simulator for exact quantum extremum search", "qsearch"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  FindArgs find_min_args, find_max_args;
  auto add_find = [&](const std::string& name, FindArgs& a, const std::string& what) {
    auto* sub = app.add_subcommand(name, what);
    sub->add_option("csv", a.csv, "Database CSV with header label,value")->required();
    sub->add_option("--c", a.c, "Interrupt constant")->check(CLI::PositiveNumber);
    sub->add_option("--strategy", a.strategy, "uniform, sampled or exact");
    sub->add_option("--confidence", a.confidence, "Sampled: confidence level");
    sub->add_option("--error", a.error, "Sampled: acceptable error");
    sub->add_option("--sigma2", a.sigma2, "Sampled: variance");
    sub->add_option("--seed", a.seed, "Base seed");
    sub->add_option("--trials", a.trials, "Independent trials");
    sub->add_option("--retry-cap", a.retry_cap, "Searches per main loop before giving up");
    sub->add_option("--threads", a.threads, "Worker threads (0: all cores)");
    sub->add_option("--qubits", a.qubits, "Qubit count (default: minimal)");
    sub->add_option("--reading", a.reading, "Iteration count reading: half-angle or as-printed");
    sub->add_option("--format", a.format, "json or csv");
    sub->add_option("--out", a.out, "Output file");
    return sub;
  };
  auto* find_min = add_find("find-min", find_min_args, "Find the minimum of a database");
  auto* find_max = add_find("find-max", find_max_args, "Find the maximum of a database");

  DhaArgs dha;
  auto* dha_cmd = app.add_subcommand("baseline-dha", "Durr-Hoyer minimum finding baseline");
  dha_cmd->add_option("csv", dha.csv, "Database CSV")->required();
  dha_cmd->add_option("--seed", dha.seed, "Base seed");
  dha_cmd->add_option("--trials", dha.trials, "Independent trials");
  dha_cmd->add_option("--threads", dha.threads, "Worker threads (0: all cores)");
  dha_cmd->add_option("--qubits", dha.qubits, "Qubit count (default: minimal)");
  dha_cmd->add_option("--lambda", dha.lambda, "Exponential searching growth factor");
  dha_cmd->add_option("--budget-sqrt", dha.budget_sqrt, "Time budget coefficient of sqrt(N)");
  dha_cmd->add_option("--budget-log2", dha.budget_log2, "Time budget coefficient of log2(N)^2");
  dha_cmd->add_option("--format", dha.format, "json or csv");
  dha_cmd->add_option("--out", dha.out, "Output file");

  std::uint64_t map_resolution = 50;
  std::string map_out;
  auto* map_cmd = app.add_subcommand("failure-map", "Failure rate over true and estimated ratios");
  map_cmd->add_option("--resolution", map_resolution, "Grid points per axis");
  map_cmd->add_option("--out", map_out, "Output file");

  CurveArgs curves;
  auto* curve_cmd =
      app.add_subcommand("failure-curves", "Sampled-estimation failure vs exponential searching");
  curve_cmd->add_option("--E", curves.errors, "Comma-separated acceptable errors");
  curve_cmd->add_option("--confidence", curves.confidence, "Confidence level");
  curve_cmd->add_option("--sigma2", curves.sigma2, "Variance");
  curve_cmd->add_option("--resolution", curves.resolution, "Ratio grid points");
  curve_cmd->add_option("--draws", curves.draws, "Sample draws per point");
  curve_cmd->add_option("--seed", curves.seed, "Base seed");
  curve_cmd->add_option("--population", curves.population, "Database size for the baseline");
  curve_cmd->add_option("--out", curves.out, "Output file");

  ComplexityArgs cx;
  auto* cx_cmd = app.add_subcommand("complexity", "Cost models over database sizes");
  cx_cmd->add_option("--eps", cx.eps, "Per-run failure rate");
  cx_cmd->add_option("--c", cx.c, "Interrupt constant");
  cx_cmd->add_option("--nmin", cx.nmin, "Smallest size (integer or 2^k)");
  cx_cmd->add_option("--nmax", cx.nmax, "Largest size (integer or 2^k)");
  cx_cmd->add_option("--out", cx.out, "Output file");

  SampleSizeArgs ss;
  auto* ss_cmd = app.add_subcommand("sample-size", "Minimum sample size");
  ss_cmd->add_option("--confidence", ss.confidence, "Confidence level in (0, 1)");
  ss_cmd->add_option("--z", ss.z, "Explicit Z value, overrides --confidence");
  ss_cmd->add_option("--error", ss.error, "Acceptable error");
  ss_cmd->add_option("--sigma2", ss.sigma2, "Variance");
  ss_cmd->add_option("--format", ss.format, "text or json");

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("build-oracle", "Build a phase oracle circuit");
  oracle_cmd->add_option("--n", oracle.n, "Qubit count")->required();
  oracle_cmd->add_option("--marked", oracle.marked, "Comma-separated marked indices");
  oracle_cmd->add_option("--threshold-le", oracle.threshold_le, "Mark every index <= value");
  oracle_cmd->add_option("--threshold-ge", oracle.threshold_ge, "Mark every index >= value");
  oracle_cmd->add_option("--phi", oracle.phi, "Phase (number or forms like pi/2)");
  oracle_cmd->add_flag("--simplify", oracle.simplify, "Apply all simplification passes");
  oracle_cmd->add_option("--out", oracle.out, "Write the circuit here; cost goes to stdout");
  oracle_cmd->add_option("--cost-out", oracle.cost_out, "Write the cost report here");

  SimplifyArgs simp;
  auto* simp_cmd = app.add_subcommand("simplify", "Simplify a circuit file");
  simp_cmd->add_option("file", simp.file, "Circuit file")->required();
  simp_cmd->add_option("--pass", simp.pass, "all, 1, 2 or 3");
  simp_cmd->add_option("--out", simp.out, "Write the circuit here; cost goes to stdout");
  simp_cmd->add_option("--cost-out", simp.cost_out, "Write the cost report here");

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Simulate a circuit file");
  sim_cmd->add_option("file", sim.file, "Circuit file")->required();
  sim_cmd->add_option("--initial", sim.initial, "uniform, basis:k, set:i,j,... or db:<csv>");
  sim_cmd->add_option("--grover-iterations", sim.grover_iterations,
                      "Use the circuit as oracle inside this many Grover-Long iterations");
  sim_cmd->add_option("--phi", sim.phi, "Diffusion phase for --grover-iterations");
  sim_cmd->add_option("--marked", sim.marked, "Report the probability of these indices");
  sim_cmd->add_option("--out", sim.out, "Output file");

  std::vector<const char*> argv{"qsearch"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  const std::string invocation = join_invocation(args);
  try {
    if (find_min->parsed()) {
      Output{find_min_args.out, &out}.write(run_find(find_min_args, SearchMode::Min, invocation));
    } else if (find_max->parsed()) {
      Output{find_max_args.out, &out}.write(run_find(find_max_args, SearchMode::Max, invocation));
    } else if (dha_cmd->parsed()) {
      Output{dha.out, &out}.write(run_dha(dha, invocation));
    } else if (map_cmd->parsed()) {
      Output{map_out, &out}.write(run_failure_map(map_resolution, invocation));
    } else if (curve_cmd->parsed()) {
      Output{curves.out, &out}.write(run_failure_curves(curves, invocation));
    } else if (cx_cmd->parsed()) {
      Output{cx.out, &out}.write(run_complexity(cx, invocation));
    } else if (ss_cmd->parsed()) {
      out << run_sample_size(ss, invocation);
    } else if (oracle_cmd->parsed()) {
      run_build_oracle(oracle, invocation, out);
    } else if (simp_cmd->parsed()) {
      run_simplify(simp, invocation, out);
    } else if (sim_cmd->parsed()) {
      Output{sim.out, &out}.write(run_simulate(sim, invocation));
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace qsearch
