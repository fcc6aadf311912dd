// qwm: continuous-time quantum walk construction, evolution, scanning and
// theorem verification on generalized hypercubes.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <numbers>
#include <random>

#include "qwm/verify.hpp"

using json = nlohmann::json;
using namespace qwm;

namespace {

struct GraphOptions {
  std::string graph;
  int n = 0;
  int q = 0;
  std::string eta;
  std::string connection;
  std::string scaling = "unnormalized";
};

void add_graph_options(CLI::App* cmd, GraphOptions& opts) {
  cmd->add_option("--graph", opts.graph, "hypercube|eta-cube|bunkbed|complete|hamming")
      ->required();
  cmd->add_option("--n", opts.n, "dimension");
  cmd->add_option("--q", opts.q, "complete-graph arity");
  cmd->add_option("--eta", opts.eta, "matching shift as a bit string (leftmost = coordinate n)");
  cmd->add_option("--connection", opts.connection,
                  "delta0|all-ones|hypercube|matching:<bits>|support:<bits,bits,...>");
  cmd->add_option("--scaling", opts.scaling, "unnormalized|degree|factor:<x>");
}

BooleanFunctionZ2 parse_connection(const std::string& name, int n) {
  std::vector<bits_t> support;
  if (name == "delta0") {
    support = {0};
  } else if (name == "all-ones") {
    for (bits_t x = 0; x < (bits_t{1} << n); ++x) support.push_back(x);
  } else if (name == "hypercube") {
    for (int j = 0; j < n; ++j) support.push_back(bits_t{1} << j);
  } else if (name.starts_with("matching:")) {
    support = {0, parse_bits(name.substr(9), n).bits};
  } else if (name.starts_with("support:")) {
    std::string rest = name.substr(8);
    std::size_t pos = 0;
    while (pos != std::string::npos) {
      const std::size_t comma = rest.find(',', pos);
      const std::string item = rest.substr(pos, comma == std::string::npos ? comma : comma - pos);
      support.push_back(parse_bits(item, n).bits);
      pos = comma == std::string::npos ? comma : comma + 1;
    }
  } else {
    throw std::invalid_argument("unknown connection function: " + name);
  }
  return BooleanFunctionZ2(n, std::move(support));
}

GraphSpec build_spec(const GraphOptions& opts) {
  GraphSpec spec = [&] {
    if (opts.graph == "hypercube") return hypercube_spec(opts.n);
    if (opts.graph == "eta-cube") return eta_cube_spec(opts.n, parse_bits(opts.eta, opts.n));
    if (opts.graph == "bunkbed") {
      if (opts.connection.empty()) throw std::invalid_argument("bunkbed requires --connection");
      return bunkbed_spec(opts.n, parse_connection(opts.connection, opts.n));
    }
    if (opts.graph == "complete") return complete_spec(opts.q);
    if (opts.graph == "hamming") return hamming_spec(opts.n, opts.q);
    throw std::invalid_argument("unknown graph family: " + opts.graph);
  }();
  if (opts.scaling == "unnormalized") {
    // eta-cube carries its 1/(n+1) convention unless overridden
    if (opts.graph != "eta-cube") spec.scaling = Scaling::unnormalized();
  } else if (opts.scaling == "degree") {
    spec.scaling = Scaling::degree_normalized();
  } else if (opts.scaling.starts_with("factor:")) {
    spec.scaling = Scaling::explicit_factor(std::stod(opts.scaling.substr(7)));
  } else {
    throw std::invalid_argument("unknown scaling: " + opts.scaling);
  }
  return spec;
}

std::size_t parse_vertex(const std::string& s, const GraphSpec& spec) {
  const auto circ = reduce_to_circulant(spec);
  if (circ && static_cast<int>(s.size()) == circ->n &&
      s.find_first_not_of("01") == std::string::npos)
    return parse_bits(s, circ->n).bits;
  return std::stoull(s);
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::invalid_argument("cannot open output file: " + path);
  return file;
}

int cmd_spectrum(const GraphOptions& opts, const std::string& output) {
  const auto spec = build_spec(opts);
  std::ofstream file;
  std::ostream& out = open_output(output, file);
  if (const auto circ = reduce_to_circulant(spec)) {
    const double s = scale_factor(spec);
    const auto lambda = integer_spectrum(circ->f);
    out << "a,weight,lambda\n";
    out.precision(17);
    for (bits_t a = 0; a < lambda.size(); ++a) {
      out << format_bits(a, circ->n) << "," << hamming_weight(a) << ",";
      if (s == 1.0)
        out << lambda[a] << "\n";
      else
        out << s * static_cast<double>(lambda[a]) << "\n";
    }
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense_adjacency(spec));
    out << "index,lambda\n";
    out.precision(17);
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
      out << i << "," << solver.eigenvalues()(i) << "\n";
  }
  return 0;
}

int cmd_walk(const GraphOptions& opts, double t, const std::string& start,
             const std::string& superposition, const std::string& output) {
  const auto spec = build_spec(opts);
  InitialState init = InitialState::point(0);
  if (!superposition.empty()) {
    const auto comma = superposition.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("--superposition expects two comma-separated vertices");
    init = InitialState::superposition(parse_vertex(superposition.substr(0, comma), spec),
                                       parse_vertex(superposition.substr(comma + 1), spec));
  } else if (!start.empty()) {
    init = InitialState::point(parse_vertex(start, spec));
  }
  const auto psi = walk(spec, init, t);
  std::ofstream file;
  std::ostream& out = open_output(output, file);
  out << "vertex,re,im,prob\n";
  out.precision(17);
  for (std::size_t v = 0; v < psi.amp.size(); ++v)
    out << v << "," << psi.amp[v].real() << "," << psi.amp[v].imag() << ","
        << std::norm(psi.amp[v]) << "\n";
  return 0;
}

int cmd_scan(const GraphOptions& opts, double t_max, std::size_t steps, double eps,
             unsigned threads, const std::string& start, const std::string& output) {
  const auto spec = build_spec(opts);
  const auto init = InitialState::point(start.empty() ? 0 : parse_vertex(start, spec));
  const auto result = scan(spec, init, t_max, steps, eps, threads);
  std::ofstream file;
  std::ostream& out = open_output(output, file);
  write_scan_csv(result, out);
  std::cout.precision(12);
  std::cout << "min_tv: " << result.min_tv << "\n";
  std::cout << "argmin_t: " << result.argmin_t << "\n";
  if (result.earliest_uniform)
    std::cout << "uniform_time: " << *result.earliest_uniform << "\n";
  else
    std::cout << "uniform_time: none\n";
  return 0;
}

json verdict_to_json(const SuiteVerdict& verdict) {
  json cases = json::array();
  for (const auto& c : verdict.checks)
    cases.push_back({{"params", verdict.params + " " + c.name},
                     {"expected", c.expected},
                     {"observed", c.observed},
                     {"pass", c.pass}});
  return {{"suite", verdict.suite}, {"cases", cases}, {"pass", verdict.pass()}};
}

int cmd_verify(const std::string& suite, int max_n, int q_max, double eps,
               const std::string& output) {
  std::vector<SuiteVerdict> verdicts;
  const bool all = suite == "all";

  if (all || suite == "hypercube")
    for (int n = 1; n <= max_n; ++n) verdicts.push_back(verify_hypercube(n, eps));

  if (all || suite == "eta")
    for (int n = 2; n <= max_n; ++n)
      for (bits_t e = 0; e < (bits_t{1} << n); ++e) {
        if (hamming_weight(e) == 1) continue;
        verdicts.push_back(verify_eta_theorem(n, GroupElement(e, n), eps));
      }

  if (all || suite == "hamming")
    for (int q = 2; q <= q_max; ++q)
      for (int n = 1; n <= std::min(max_n, 3); ++n) verdicts.push_back(verify_hamming(n, q, eps));

  if (all || suite == "bunkbed")
    for (int n = 2; n <= max_n; ++n) {
      std::vector<bits_t> all_ones;
      for (bits_t x = 0; x < (bits_t{1} << n); ++x) all_ones.push_back(x);
      verdicts.push_back(verify_bunkbed_theorem(n, BooleanFunctionZ2(n, all_ones), eps));
      verdicts.push_back(verify_bunkbed_theorem(n, BooleanFunctionZ2(n, {0}), eps));
      verdicts.push_back(
          verify_bunkbed_theorem(n, BooleanFunctionZ2(n, {0, (bits_t{1} << n) - 1}), eps));
    }

  if (all || suite == "bbqn")
    for (int n = 2; n <= max_n; ++n) verdicts.push_back(verify_bbqn(n, eps));

  if (verdicts.empty()) throw std::invalid_argument("unknown suite: " + suite);

  bool pass = true;
  json cases = json::array();
  for (const auto& v : verdicts) {
    pass = pass && v.pass();
    const json one = verdict_to_json(v);
    for (const auto& item : one.at("cases")) cases.push_back(item);
  }
  const json report = {{"suite", suite}, {"cases", cases}, {"pass", pass}};

  std::ofstream file;
  std::ostream& out = open_output(output, file);
  out << report.dump(2) << "\n";
  if (&out != &std::cout)
    std::cout << "verify " << suite << ": " << (pass ? "pass" : "FAIL") << " (" << cases.size()
              << " checks)\n";
  return pass ? 0 : 1;
}

int cmd_oracle_compare(const GraphOptions& opts, int trials, unsigned seed) {
  const auto spec = build_spec(opts);
  const auto init = InitialState::point(0);
  const auto adj = dense_adjacency(spec);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> time_dist(0.0, 4.0 * std::numbers::pi);

  double max_dev = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    const double t = trial == 0 ? 0.0 : time_dist(rng);
    const auto fast = walk(spec, init, t);
    const auto oracle = dense_walk_oracle(adj, init, t);
    for (std::size_t v = 0; v < fast.amp.size(); ++v)
      max_dev = std::max(max_dev, std::abs(fast.amp[v] - oracle.amp[v]));
  }
  std::cout.precision(6);
  std::cout << "max_deviation: " << std::scientific << max_dev << "\n";
  return max_dev > 1e-8 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum walk mixing analyzer for generalized hypercubes"};
  app.require_subcommand(1);

  GraphOptions opts;
  std::string output, start, superposition, suite = "all";
  double t = 0.0, t_max = 0.0, eps = 1e-6, verify_eps = 1e-9;
  std::size_t steps = 1000;
  unsigned threads = 0, seed = 42;
  int max_n = 6, q_max = 6, trials = 20;

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalue table");
  add_graph_options(spectrum, opts);
  spectrum->add_option("--output", output, "CSV output path (default stdout)");

  auto* walk_cmd = app.add_subcommand("walk", "amplitudes and probabilities at one time");
  add_graph_options(walk_cmd, opts);
  walk_cmd->add_option("--time", t, "evolution time")->required();
  walk_cmd->add_option("--start", start, "start vertex (bit string or index)");
  walk_cmd->add_option("--superposition", superposition, "two start vertices, e.g. 000,111");
  walk_cmd->add_option("--output", output, "CSV output path (default stdout)");

  auto* scan_cmd = app.add_subcommand("scan", "mixing scan over a time grid");
  add_graph_options(scan_cmd, opts);
  scan_cmd->add_option("--t-max", t_max, "scan endpoint")->required();
  scan_cmd->add_option("--steps", steps, "grid points (>= 2)");
  scan_cmd->add_option("--eps", eps, "uniformity tolerance");
  scan_cmd->add_option("--threads", threads, "parallelism degree (default: cores, or QWM_THREADS)");
  scan_cmd->add_option("--start", start, "start vertex");
  scan_cmd->add_option("--output", output, "CSV output path (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "run theorem verification suites");
  verify_cmd->add_option("--suite", suite, "hypercube|eta|hamming|bunkbed|bbqn|all");
  verify_cmd->add_option("--max-n", max_n, "largest dimension");
  verify_cmd->add_option("--q-max", q_max, "largest complete-graph arity");
  verify_cmd->add_option("--eps", verify_eps, "uniformity tolerance");
  verify_cmd->add_option("--output", output, "JSON report path (default stdout)");

  auto* compare = app.add_subcommand("oracle-compare", "fast path vs dense oracle");
  add_graph_options(compare, opts);
  compare->add_option("--trials", trials, "random time points");
  compare->add_option("--seed", seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(opts, output);
    if (walk_cmd->parsed()) return cmd_walk(opts, t, start, superposition, output);
    if (scan_cmd->parsed()) return cmd_scan(opts, t_max, steps, eps, threads, start, output);
    if (verify_cmd->parsed()) return cmd_verify(suite, max_n, q_max, verify_eps, output);
    if (compare->parsed()) return cmd_oracle_compare(opts, trials, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
