#include "ehvi/workbench/bench.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <ostream>

#include "ehvi/random.hpp"
#include "ehvi/workbench/generators.hpp"
#include "ehvi/workbench/io.hpp"

namespace ehvi::workbench {

namespace {

bool is_2d(Scheme scheme) { return scheme_dim(scheme) == std::optional<std::size_t>(2); }

}  // namespace

Front bench_front(Scheme scheme, std::size_t n, std::uint64_t seed) {
  if (is_2d(scheme)) return gen_diagonal_front_2d(n, seed);
  return gen_sphere_front(n, 1.0, seed);
}

std::vector<GaussianPredictor> bench_predictors(Scheme scheme, std::size_t n, std::size_t count,
                                                std::uint64_t seed) {
  std::vector<double> mu, sigma;
  if (is_2d(scheme)) {
    const double half = std::max(1.0, static_cast<double>(n)) / 2.0;
    mu = {half, half};
    sigma = {half / 2.0, half / 2.0};
  } else {
    mu = {0.6, 0.6, 0.6};
    sigma = {0.2, 0.2, 0.2};
  }
  std::vector<GaussianPredictor> out;
  out.reserve(count);
  NormalSampler jitter(seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<double> m = mu;
    if (k > 0) {
      for (std::size_t d = 0; d < m.size(); ++d) m[d] += 0.25 * sigma[d] * jitter();
    }
    out.emplace_back(std::move(m), sigma);
  }
  return out;
}

std::vector<BenchRecord> run_bench(const BenchRequest& request) {
  if (request.sizes.empty()) throw Error(ErrorKind::InvalidArgument, "bench needs at least one size");
  if (request.repetitions == 0) throw Error(ErrorKind::InvalidArgument, "repetitions must be >= 1");
  if (request.batch == 0) throw Error(ErrorKind::InvalidArgument, "batch must be >= 1");

  using Clock = std::chrono::steady_clock;
  EvalOptions options;
  options.trials = request.trials;
  options.seed = request.seed;

  std::vector<BenchRecord> records;
  for (Scheme scheme : request.schemes) {
    for (std::size_t n : request.sizes) {
      const Front front = bench_front(scheme, n, request.seed);
      const auto predictors = bench_predictors(scheme, n, request.batch, request.seed);
      BenchRecord rec;
      rec.scheme = std::string(to_string(scheme));
      rec.n = n;
      rec.repetitions = request.repetitions;
      rec.min_seconds = std::numeric_limits<double>::infinity();
      double total = 0.0;
      for (std::size_t rep = 0; rep < request.repetitions; ++rep) {
        const auto start = Clock::now();
        const EvalResult result = evaluate(front, predictors, scheme, options);
        const auto stop = Clock::now();
        double seconds = std::chrono::duration<double>(stop - start).count();
        // Never report a zero duration, even below clock resolution.
        seconds = std::max(seconds, 1e-9);
        total += seconds;
        rec.min_seconds = std::min(rec.min_seconds, seconds);
        rec.value = result.values.front();
      }
      rec.mean_seconds = total / static_cast<double>(request.repetitions);
      records.push_back(rec);
    }
  }
  return records;
}

void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << "scheme,n,repetitions,mean_seconds,min_seconds,value\n";
  for (const auto& r : records) {
    out << r.scheme << ',' << r.n << ',' << r.repetitions << ',' << format_double(r.mean_seconds)
        << ',' << format_double(r.min_seconds) << ',' << format_double(r.value) << '\n';
  }
}

}  // namespace ehvi::workbench
