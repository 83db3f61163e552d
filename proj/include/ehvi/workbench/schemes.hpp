#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ehvi/core.hpp"

namespace ehvi::workbench {

enum class Scheme { Naive2d, Fast2d, EightTerm, FiveTerm, TwoTerm, Slice, MonteCarlo, Quadrature };

std::string_view to_string(Scheme scheme);

/// Accepts the CLI names: 2d-naive, 2d-fast, 8term, 5term, 2term, slice, mc,
/// quadrature. Throws InvalidArgument otherwise.
Scheme parse_scheme(std::string_view name);

/// Required front dimension, or nullopt for the dimension-agnostic oracles.
std::optional<std::size_t> scheme_dim(Scheme scheme);

struct EvalOptions {
  std::size_t trials = 1'000'000;
  std::uint64_t seed = 1;
  std::size_t quadrature_cells = 256;
  std::size_t threads = 1;
};

struct EvalResult {
  std::vector<double> values;
  /// Filled for Monte Carlo only.
  std::vector<double> standard_errors;
};

/// Evaluates every predictor with the chosen scheme. Output order follows the
/// input order regardless of `threads`.
EvalResult evaluate(const Front& front, std::span<const GaussianPredictor> gs, Scheme scheme,
                    const EvalOptions& options = {});

}  // namespace ehvi::workbench
