#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ehvi/core.hpp"

namespace ehvi::workbench {

/// Points and an optional reference as read from a file or generator,
/// before orientation handling and validation.
struct RawFront {
  std::vector<Point> points;
  std::optional<Point> reference;
};

/// Shortest decimal form that round-trips a double ("%.17g").
std::string format_double(double value);

/// Comma-separated list of reals, e.g. "1.5,-2,3e-4".
std::vector<double> parse_list(std::string_view text);

/// Front CSV: one point per line, comma-separated coordinates. Blank lines and
/// lines starting with '#' are skipped, except an optional
/// "# reference: x,y[,z]" header. Throws ParseError naming the offending line.
RawFront read_front_csv(std::istream& in, std::string_view source_name);

void write_front_csv(std::ostream& out, const Front& front);

/// Resolves a --front argument: "paper3", "diag:N", "sphere:N[:seed[:radius]]",
/// "ties:N[:seed[:levels]]", or else a path to a front CSV file.
RawFront load_front_source(std::string_view source);

/// Predictor JSON: {"mu": [...], "sigma": [...]} or an array of such objects.
std::vector<GaussianPredictor> read_predictors_json(std::istream& in);

/// Negates every coordinate (minimisation data -> maximisation form).
Point negated(const Point& p);
RawFront negated(const RawFront& raw);
GaussianPredictor negated(const GaussianPredictor& g);

}  // namespace ehvi::workbench
