#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ehvi/core.hpp"
#include "ehvi/workbench/schemes.hpp"

namespace ehvi::workbench {

struct BenchRequest {
  std::vector<std::size_t> sizes;
  std::vector<Scheme> schemes;
  std::size_t repetitions = 10;
  std::uint64_t seed = 1;
  /// Monte Carlo trials per evaluation.
  std::size_t trials = 100'000;
  /// Predictors evaluated together per timed call.
  std::size_t batch = 1;
};

struct BenchRecord {
  std::string scheme;
  std::size_t n = 0;
  std::size_t repetitions = 0;
  double mean_seconds = 0.0;
  double min_seconds = 0.0;
  double value = 0.0;
};

/// Front used for a scheme at size n: the diagonal front for 2-D schemes,
/// the unit sphere octant otherwise.
Front bench_front(Scheme scheme, std::size_t n, std::uint64_t seed);

/// `count` predictors matched to bench_front(scheme, n, seed). The first is
/// centred on the front (mu = n/2, sigma = n/4 for the diagonal front;
/// mu = 0.6, sigma = 0.2 per axis for the sphere); the rest are jittered.
std::vector<GaussianPredictor> bench_predictors(Scheme scheme, std::size_t n, std::size_t count,
                                                std::uint64_t seed);

/// Times every (scheme, n) pair. Front generation is not timed.
std::vector<BenchRecord> run_bench(const BenchRequest& request);

/// Header: scheme,n,repetitions,mean_seconds,min_seconds,value
void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records);

}  // namespace ehvi::workbench
