#include "ehvi/workbench/schemes.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "ehvi/ehvi2d.hpp"
#include "ehvi/ehvi3d.hpp"
#include "ehvi/oracle.hpp"

namespace ehvi::workbench {

namespace {

struct SchemeName {
  Scheme scheme;
  std::string_view name;
};

constexpr SchemeName kNames[] = {
    {Scheme::Naive2d, "2d-naive"}, {Scheme::Fast2d, "2d-fast"}, {Scheme::EightTerm, "8term"},
    {Scheme::FiveTerm, "5term"},   {Scheme::TwoTerm, "2term"},  {Scheme::Slice, "slice"},
    {Scheme::MonteCarlo, "mc"},    {Scheme::Quadrature, "quadrature"},
};

Scheme3d to_scheme3d(Scheme s) {
  switch (s) {
    case Scheme::EightTerm: return Scheme3d::EightTerm;
    case Scheme::FiveTerm: return Scheme3d::FiveTerm;
    case Scheme::TwoTerm: return Scheme3d::TwoTerm;
    default: return Scheme3d::Slice;
  }
}

void evaluate_range(const Front& front, std::span<const GaussianPredictor> gs, Scheme scheme,
                    const EvalOptions& options, std::span<double> values,
                    std::span<double> errors) {
  switch (scheme) {
    case Scheme::Naive2d:
      for (std::size_t i = 0; i < gs.size(); ++i) values[i] = ehvi_2d_naive(front, gs[i]);
      return;
    case Scheme::Fast2d:
      for (std::size_t i = 0; i < gs.size(); ++i) values[i] = ehvi_2d_fast(front, gs[i]);
      return;
    case Scheme::EightTerm:
    case Scheme::FiveTerm:
    case Scheme::TwoTerm:
    case Scheme::Slice: {
      const auto out = ehvi_3d_batch(front, gs, to_scheme3d(scheme));
      std::copy(out.begin(), out.end(), values.begin());
      return;
    }
    case Scheme::MonteCarlo:
      for (std::size_t i = 0; i < gs.size(); ++i) {
        const McResult mc = ehvi_mc(front, gs[i], options.trials, options.seed);
        values[i] = mc.estimate;
        errors[i] = mc.standard_error;
      }
      return;
    case Scheme::Quadrature:
      for (std::size_t i = 0; i < gs.size(); ++i) {
        values[i] = ehvi_quadrature(front, gs[i], options.quadrature_cells);
      }
      return;
  }
}

}  // namespace

std::string_view to_string(Scheme scheme) {
  for (const auto& entry : kNames) {
    if (entry.scheme == scheme) return entry.name;
  }
  return "unknown";
}

Scheme parse_scheme(std::string_view name) {
  for (const auto& entry : kNames) {
    if (entry.name == name) return entry.scheme;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown scheme '" + std::string(name) + "'");
}

std::optional<std::size_t> scheme_dim(Scheme scheme) {
  switch (scheme) {
    case Scheme::Naive2d:
    case Scheme::Fast2d: return 2;
    case Scheme::EightTerm:
    case Scheme::FiveTerm:
    case Scheme::TwoTerm:
    case Scheme::Slice: return 3;
    case Scheme::MonteCarlo:
    case Scheme::Quadrature: return std::nullopt;
  }
  return std::nullopt;
}

EvalResult evaluate(const Front& front, std::span<const GaussianPredictor> gs, Scheme scheme,
                    const EvalOptions& options) {
  if (const auto dim = scheme_dim(scheme); dim && *dim != front.dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "scheme " + std::string(to_string(scheme)) + " needs a " + std::to_string(*dim) +
                    "-D front, got " + std::to_string(front.dim()) + "-D");
  }
  for (const auto& g : gs) require_compatible(front, g);

  EvalResult result;
  result.values.assign(gs.size(), 0.0);
  if (scheme == Scheme::MonteCarlo) result.standard_errors.assign(gs.size(), 0.0);
  std::vector<double> scratch_errors(gs.size(), 0.0);
  std::span<double> errors =
      scheme == Scheme::MonteCarlo ? std::span<double>(result.standard_errors) : scratch_errors;

  const std::size_t workers = std::clamp<std::size_t>(options.threads, 1, std::max<std::size_t>(gs.size(), 1));
  if (workers == 1) {
    evaluate_range(front, gs, scheme, options, result.values, errors);
    return result;
  }

  // Contiguous chunks keep output order; each chunk is an independent batch.
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> failures(workers);
  const std::size_t chunk = (gs.size() + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(gs.size(), begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&, w, begin, end] {
      try {
        evaluate_range(front, gs.subspan(begin, end - begin), scheme, options,
                       std::span<double>(result.values).subspan(begin, end - begin),
                       errors.subspan(begin, end - begin));
      } catch (...) {
        failures[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return result;
}

}  // namespace ehvi::workbench
