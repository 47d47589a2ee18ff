// Command line front end: sketch sets and run the estimation-error, timing,
// buffer-size and equivalence experiments.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "probminhash/errors.hpp"
#include "probminhash/estimate.hpp"
#include "probminhash/harness.hpp"
#include "probminhash/sketch.hpp"

namespace pmh = probminhash;
namespace hx = probminhash::harness;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

std::vector<pmh::Algorithm> parse_algorithms(const std::vector<std::string>& names) {
  std::vector<pmh::Algorithm> result;
  for (const auto& name : names) {
    if (name == "all") {
      const auto all = pmh::all_algorithms();
      result.insert(result.end(), all.begin(), all.end());
      continue;
    }
    const auto a = pmh::parse_algorithm(name);
    if (!a) throw pmh::InvalidParamsError("unknown algorithm '" + name + "'");
    result.push_back(*a);
  }
  if (result.empty()) throw pmh::InvalidParamsError("no algorithm given");
  return result;
}

std::vector<hx::Fixture> parse_fixtures(const std::vector<std::string>& specs) {
  std::vector<hx::Fixture> result;
  for (const auto& spec : specs) {
    if (spec == "standard" || spec == "calibration") {
      const auto table = spec == "standard" ? hx::standard_fixtures() : hx::calibration_fixtures();
      result.insert(result.end(), table.begin(), table.end());
    } else {
      result.push_back(hx::parse_fixture(spec));
    }
  }
  return result;
}

// Writes to --out if given, otherwise to stdout.
template <class Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw pmh::InvalidParamsError("cannot open output file '" + path + "'");
  fn(file);
  if (!file) throw std::runtime_error("failed writing '" + path + "'");
}

pmh::WeightedSet read_set(std::istream& in, bool unweighted) {
  pmh::WeightedSet set;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string id_text;
    if (!(fields >> id_text)) continue;
    pmh::WeightedElement e;
    std::size_t used = 0;
    try {
      e.id = std::stoull(id_text, &used, 0);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != id_text.size()) {
      throw pmh::InvalidParamsError("line " + std::to_string(line_number) + ": bad id '" +
                                    id_text + "'");
    }
    e.weight = 1.0;
    if (!unweighted && !(fields >> e.weight)) {
      throw pmh::InvalidParamsError("line " + std::to_string(line_number) +
                                    ": expected 'id weight'");
    }
    set.push_back(e);
  }
  return set;
}

struct Options {
  std::vector<std::string> algorithms;
  std::vector<std::uint32_t> m_values;
  std::vector<std::string> fixtures;
  std::vector<std::uint64_t> n_values;
  std::vector<std::string> distributions;
  std::uint64_t pairs = 2000;
  std::uint64_t seed = 1;
  std::string out;
  int bbit = 0;
  unsigned threads = 0;
  bool unweighted = false;
};

int run_sketch(const Options& o, const std::string& input, bool shuffle) {
  const auto algorithms = parse_algorithms(o.algorithms);
  if (algorithms.size() != 1) throw pmh::InvalidParamsError("sketch takes exactly one --algo");
  if (o.m_values.size() != 1) throw pmh::InvalidParamsError("sketch takes exactly one --m");
  pmh::WeightedSet set;
  const bool unweighted = o.unweighted || !pmh::accepts_weights(algorithms[0]);
  if (input.empty() || input == "-") {
    set = read_set(std::cin, unweighted);
  } else {
    std::ifstream file(input);
    if (!file) throw pmh::InvalidParamsError("cannot open input file '" + input + "'");
    set = read_set(file, unweighted);
  }
  if (shuffle) {
    pmh::RandomStream rng(o.seed);
    hx::shuffle_set(set, rng);
  }
  pmh::Sketcher sketcher(algorithms[0], o.m_values[0]);
  const auto signature = unweighted ? sketcher.compute_unweighted(hx::ids_of(set)).signature
                                    : sketcher.compute(set).signature;
  with_output(o.out, [&](std::ostream& out) {
    if (o.bbit > 0) {
      for (const auto c : pmh::bbit_reduce(signature, o.bbit).components) out << c << '\n';
    } else {
      for (const auto id : signature) out << id << '\n';
    }
  });
  return kExitOk;
}

int run_mse(const Options& o, double zmax) {
  hx::MseConfig config;
  config.algorithms = parse_algorithms(o.algorithms);
  config.m_values = o.m_values;
  config.fixtures = parse_fixtures(o.fixtures);
  config.pairs = o.pairs;
  config.seed = o.seed;
  config.mode = o.unweighted ? hx::InputMode::kUnweighted : hx::InputMode::kWeighted;
  config.bbit = o.bbit;
  config.threads = o.threads;
  const auto rows = hx::run_mse_experiment(config);
  with_output(o.out, [&](std::ostream& out) { hx::write_mse_csv(out, rows); });
  if (zmax > 0.0) {
    int failed = 0;
    for (const auto& r : rows) {
      if (std::abs(r.zscore) > zmax) {
        std::fprintf(stderr, "z-score out of band: %s m=%u fixture=%s z=%.3f\n",
                     r.algorithm.c_str(), r.m, r.fixture.c_str(), r.zscore);
        ++failed;
      }
    }
    if (failed > 0) return kExitFailure;
  }
  return kExitOk;
}

int run_bench(const Options& o, std::uint64_t sets, std::uint64_t warmup) {
  hx::TimingConfig config;
  config.algorithms = parse_algorithms(o.algorithms);
  config.m_values = o.m_values;
  config.n_values = o.n_values;
  config.sets = sets;
  config.warmup = warmup;
  config.seed = o.seed;
  if (o.distributions.size() > 1) {
    throw pmh::InvalidParamsError("bench takes one --distribution");
  }
  if (!o.distributions.empty()) config.distribution = hx::parse_distribution(o.distributions[0]);
  const auto rows = hx::run_timing_experiment(config);
  with_output(o.out, [&](std::ostream& out) { hx::write_timing_csv(out, rows); });
  return kExitOk;
}

int run_buffer(const Options& o, std::uint64_t runs) {
  hx::BufferConfig config;
  config.algorithms = parse_algorithms(o.algorithms);
  for (const auto& d : o.distributions) config.distributions.push_back(hx::parse_distribution(d));
  config.n_values = o.n_values;
  if (o.m_values.size() != 1) throw pmh::InvalidParamsError("buffer takes exactly one --m");
  config.m = o.m_values[0];
  config.runs = runs;
  config.seed = o.seed;
  config.threads = o.threads;
  const auto rows = hx::run_buffer_experiment(config);
  with_output(o.out, [&](std::ostream& out) { hx::write_buffer_csv(out, rows); });
  return kExitOk;
}

int run_equivalence(const Options& o, std::uint64_t trials, std::uint64_t max_size) {
  hx::EquivalenceConfig config;
  config.seed = o.seed;
  config.trials = trials;
  config.max_size = max_size;
  config.threads = o.threads;
  const auto report = hx::run_equivalence_suite(config);
  for (const auto& f : report.failures) std::fprintf(stderr, "mismatch: %s\n", f.c_str());
  std::printf("trials=%llu comparisons=%llu mismatches=%llu\n",
              static_cast<unsigned long long>(report.trials),
              static_cast<unsigned long long>(report.comparisons),
              static_cast<unsigned long long>(report.mismatches));
  return report.ok() ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ProbMinHash sketches and experiments"};
  app.require_subcommand(1);

  Options o;
  auto add_common = [&](CLI::App* cmd, bool many_algorithms) {
    auto* algo = cmd->add_option("--algo", o.algorithms, "Algorithm name(s), comma separated");
    if (many_algorithms) algo->delimiter(',');
    cmd->add_option("--seed", o.seed, "Master seed");
    cmd->add_option("--out", o.out, "Output path (default: stdout)");
    cmd->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  };

  auto* sketch = app.add_subcommand("sketch", "Sketch a set read as 'id weight' lines");
  std::string input;
  bool shuffle = false;
  add_common(sketch, false);
  sketch->add_option("input", input, "Input file (default: stdin)");
  sketch->add_option("--m", o.m_values, "Signature size")->delimiter(',');
  sketch->add_option("--bbit", o.bbit, "Reduce components to b bits")->check(CLI::Range(1, 16));
  sketch->add_flag("--unweighted", o.unweighted, "Lines hold ids only; use the unweighted variant");
  sketch->add_flag("--shuffle", shuffle, "Shuffle the input order with --seed first");

  auto* mse = app.add_subcommand("mse", "Estimation error on weight-pair fixtures");
  double zmax = 0.0;
  add_common(mse, true);
  mse->add_option("--m", o.m_values, "Signature sizes")->delimiter(',');
  mse->add_option("--fixture", o.fixtures,
                  "Fixture name, inline 'wa:wb,wa:wb,...', 'standard' or 'calibration'; repeatable");
  mse->add_option("--pairs", o.pairs, "Set pairs per cell")->check(CLI::PositiveNumber);
  mse->add_option("--bbit", o.bbit, "Estimate from b-bit reduced signatures")
      ->check(CLI::Range(1, 16));
  mse->add_flag("--unweighted", o.unweighted, "Use unweighted variants (binary fixtures only)");
  mse->add_option("--zmax", zmax, "Exit with 1 if any |z| exceeds this bound");

  auto* bench = app.add_subcommand("bench", "Mean time per signature");
  std::uint64_t sets = 100;
  std::uint64_t warmup = 3;
  add_common(bench, true);
  bench->add_option("--m", o.m_values, "Signature sizes")->delimiter(',');
  bench->add_option("--n", o.n_values, "Set sizes")->delimiter(',');
  bench->add_option("--sets,--pairs", sets, "Timed sets per cell")->check(CLI::PositiveNumber);
  bench->add_option("--warmup", warmup, "Untimed warm-up sets per cell");
  bench->add_option("--distribution", o.distributions, "unweighted or pareto:<a>");

  auto* buffer = app.add_subcommand("buffer", "Buffer size of the interleaved variants");
  std::uint64_t runs = 100;
  add_common(buffer, true);
  buffer->add_option("--m", o.m_values, "Signature size");
  buffer->add_option("--n", o.n_values, "Set sizes")->delimiter(',');
  buffer->add_option("--runs,--pairs", runs, "Sets per cell")->check(CLI::PositiveNumber);
  buffer->add_option("--distribution", o.distributions, "unweighted or pareto:<a>")
      ->delimiter(',');

  auto* equivalence =
      app.add_subcommand("equivalence", "Check bit-identity of interleaved variants and scaling");
  std::uint64_t trials = 1000;
  std::uint64_t max_size = 10000;
  add_common(equivalence, true);
  equivalence->add_option("--trials,--pairs", trials, "Random sets")->check(CLI::PositiveNumber);
  equivalence->add_option("--max-size", max_size, "Largest set size")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*sketch) {
      if (o.algorithms.empty()) o.algorithms = {"probminhash2"};
      if (o.m_values.empty()) o.m_values = {256};
      return run_sketch(o, input, shuffle);
    }
    if (*mse) {
      if (o.algorithms.empty()) o.algorithms = {"pminhash"};
      if (o.m_values.empty()) o.m_values = {256};
      if (o.fixtures.empty()) o.fixtures = {"standard"};
      return run_mse(o, zmax);
    }
    if (*bench) {
      if (o.algorithms.empty()) o.algorithms = {"pminhash", "probminhash2", "probminhash3a"};
      if (o.m_values.empty()) o.m_values = {256};
      if (o.n_values.empty()) o.n_values = {1000};
      return run_bench(o, sets, warmup);
    }
    if (*buffer) {
      if (o.algorithms.empty()) o.algorithms = {"probminhash1a", "probminhash3a"};
      if (o.m_values.empty()) o.m_values = {256};
      if (o.n_values.empty()) o.n_values = {1000, 10000, 100000};
      if (o.distributions.empty()) o.distributions = {"unweighted"};
      return run_buffer(o, runs);
    }
    if (*equivalence) return run_equivalence(o, trials, max_size);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "failure: %s\n", e.what());
    return kExitFailure;
  }
  return kExitConfig;
}
