#include "ehvi/workbench/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ehvi/workbench/bench.hpp"
#include "ehvi/workbench/io.hpp"
#include "ehvi/workbench/schemes.hpp"
#include "ehvi/workbench/verify.hpp"

namespace ehvi::workbench {

namespace {

struct InputFlags {
  std::string front;
  std::string ref;
  std::string mu;
  std::string sigma;
  std::string predictors;
  bool minimize = false;
};

void add_input_flags(CLI::App& cmd, InputFlags& f, bool batch) {
  cmd.add_option("--front", f.front, "front CSV path or generator (paper3, diag:N, sphere:N[:seed[:radius]], ties:N[:seed[:levels]])")
      ->required();
  cmd.add_option("--ref", f.ref, "reference point x,y[,z]; overrides the CSV header");
  cmd.add_option("--mu", f.mu, "predictor mean");
  cmd.add_option("--sigma", f.sigma, "predictor standard deviation");
  if (batch) cmd.add_option("--predictors", f.predictors, "JSON file with one or more predictors");
  cmd.add_flag("--minimize", f.minimize, "treat all inputs as minimisation data");
}

Front build_front(const InputFlags& f) {
  RawFront raw = load_front_source(f.front);
  if (!f.ref.empty()) raw.reference = Point(parse_list(f.ref));
  if (!raw.reference) {
    throw Error(ErrorKind::InvalidArgument,
                "no reference point: pass --ref or add a '# reference:' header");
  }
  if (f.minimize) raw = negated(raw);
  return validate_front(std::move(raw.points), *raw.reference);
}

std::vector<GaussianPredictor> build_predictors(const InputFlags& f) {
  std::vector<GaussianPredictor> gs;
  if (!f.predictors.empty()) {
    if (!f.mu.empty() || !f.sigma.empty()) {
      throw Error(ErrorKind::InvalidArgument, "--predictors cannot be combined with --mu/--sigma");
    }
    std::ifstream in(f.predictors);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open predictor file '" + f.predictors + "'");
    gs = read_predictors_json(in);
  } else {
    if (f.mu.empty() || f.sigma.empty()) {
      throw Error(ErrorKind::InvalidArgument, "a predictor needs both --mu and --sigma");
    }
    gs.emplace_back(parse_list(f.mu), parse_list(f.sigma));
  }
  if (gs.empty()) throw Error(ErrorKind::InvalidArgument, "no predictors given");
  if (f.minimize) {
    for (auto& g : gs) g = negated(g);
  }
  return gs;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  for (double v : parse_list(text)) {
    if (!(v >= 0.0) || v != std::floor(v)) {
      throw Error(ErrorKind::InvalidArgument, "--sizes expects non-negative integers");
    }
    sizes.push_back(static_cast<std::size_t>(v));
  }
  return sizes;
}

// Writes to --out when given, otherwise to the default stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Expected hypervolume improvement workbench"};
  app.require_subcommand(1);

  InputFlags compute_in;
  std::string compute_scheme;
  std::string compute_out;
  EvalOptions compute_opts;
  auto* compute = app.add_subcommand("compute", "evaluate EHVI for one or more predictors");
  add_input_flags(*compute, compute_in, true);
  compute->add_option("--scheme", compute_scheme, "2d-naive, 2d-fast, 8term, 5term, 2term, slice, mc, quadrature")
      ->required();
  compute->add_option("--trials", compute_opts.trials, "Monte Carlo trials");
  compute->add_option("--seed", compute_opts.seed, "Monte Carlo seed");
  compute->add_option("--cells", compute_opts.quadrature_cells, "quadrature panel cap per axis");
  compute->add_option("--threads", compute_opts.threads, "evaluate predictors in parallel");
  compute->add_option("--out", compute_out, "write the report to a file");

  InputFlags verify_in;
  std::size_t verify_trials = 1'000'000;
  std::uint64_t verify_seed = 1;
  auto* verify = app.add_subcommand("verify", "cross-check every exact scheme and Monte Carlo");
  add_input_flags(*verify, verify_in, false);
  verify->add_option("--trials", verify_trials, "Monte Carlo trials");
  verify->add_option("--seed", verify_seed, "Monte Carlo seed");

  std::string bench_sizes;
  std::string bench_schemes = "2d-naive,2d-fast";
  std::string bench_out;
  BenchRequest bench_req;
  auto* bench = app.add_subcommand("bench", "time schemes over front sizes, CSV output");
  bench->add_option("--sizes", bench_sizes, "comma-separated front sizes")->required();
  bench->add_option("--scheme", bench_schemes, "comma-separated scheme names");
  bench->add_option("--reps", bench_req.repetitions, "repetitions per (scheme, n)");
  bench->add_option("--seed", bench_req.seed, "front generator seed");
  bench->add_option("--trials", bench_req.trials, "Monte Carlo trials");
  bench->add_option("--batch", bench_req.batch, "predictors per timed call");
  bench->add_option("--out", bench_out, "write the CSV to a file");

  std::string gen_front;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "write a generated front as CSV");
  gen->add_option("--front", gen_front, "generator, e.g. sphere:100:7")->required();
  gen->add_option("--out", gen_out, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  try {
    if (compute->parsed()) {
      const Scheme scheme = parse_scheme(compute_scheme);
      const Front front = build_front(compute_in);
      const auto gs = build_predictors(compute_in);
      const EvalResult result = evaluate(front, gs, scheme, compute_opts);
      Sink sink(compute_out, out);
      std::ostream& o = sink.get();
      o << "scheme: " << to_string(scheme) << '\n';
      o << "n: " << front.size() << '\n';
      if (scheme == Scheme::MonteCarlo) {
        o << "trials: " << compute_opts.trials << '\n';
        o << "seed: " << compute_opts.seed << '\n';
      }
      for (std::size_t i = 0; i < result.values.size(); ++i) {
        o << "ehvi[" << i << "]: " << format_double(result.values[i]) << '\n';
        if (scheme == Scheme::MonteCarlo) {
          o << "stderr[" << i << "]: " << format_double(result.standard_errors[i]) << '\n';
        }
      }
      return kExitOk;
    }

    if (verify->parsed()) {
      const Front front = build_front(verify_in);
      const auto gs = build_predictors(verify_in);
      const VerifyReport report = run_verification(front, gs.front(), verify_trials, verify_seed);
      out << "n: " << front.size() << '\n';
      for (const auto& s : report.exact) out << s.name << ": " << format_double(s.value) << '\n';
      out << "mc: " << format_double(report.mc.estimate) << '\n';
      out << "mc_stderr: " << format_double(report.mc.standard_error) << '\n';
      out << "max_relative_deviation: " << format_double(report.max_relative_deviation) << '\n';
      out << "z_score: " << format_double(report.z_score) << '\n';
      out << "result: " << (report.passed ? "PASS" : "FAIL") << '\n';
      return report.passed ? kExitOk : kExitVerifyFailed;
    }

    if (bench->parsed()) {
      bench_req.sizes = parse_sizes(bench_sizes);
      for (const auto& name : split_commas(bench_schemes)) {
        bench_req.schemes.push_back(parse_scheme(name));
      }
      if (bench_req.schemes.empty()) throw Error(ErrorKind::InvalidArgument, "no schemes given");
      const auto records = run_bench(bench_req);
      Sink sink(bench_out, out);
      write_bench_csv(sink.get(), records);
      return kExitOk;
    }

    if (gen->parsed()) {
      RawFront raw = load_front_source(gen_front);
      if (!raw.reference) throw Error(ErrorKind::InvalidArgument, "generator produced no reference");
      const Front front = validate_front(std::move(raw.points), *raw.reference);
      Sink sink(gen_out, out);
      write_front_csv(sink.get(), front);
      return kExitOk;
    }
  } catch (const ConvergenceFailure& e) {
    err << "error: " << e.what() << '\n';
    return kExitNoConvergence;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace ehvi::workbench
