#include "ehvi/workbench/io.hpp"

#include <cerrno>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>

#include "json.hpp"

#include "ehvi/workbench/generators.hpp"

namespace ehvi::workbench {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view text, double& out) {
  const std::string buf(trim(text));
  if (buf.empty()) return false;
  char* end = nullptr;
  errno = 0;
  out = std::strtod(buf.c_str(), &end);
  return end == buf.c_str() + buf.size() && errno != ERANGE;
}

bool parse_size(std::string_view text, std::size_t& out) {
  text = trim(text);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

RawFront to_raw(const Front& front) { return RawFront{front.points(), front.reference()}; }

}  // namespace

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::vector<double> parse_list(std::string_view text) {
  std::vector<double> values;
  for (std::string_view field : split(text, ',')) {
    double v = 0.0;
    if (!parse_double(field, v)) {
      throw Error(ErrorKind::ParseError, "not a number: '" + std::string(trim(field)) + "'");
    }
    values.push_back(v);
  }
  return values;
}

RawFront read_front_csv(std::istream& in, std::string_view source_name) {
  RawFront raw;
  std::string line;
  std::size_t line_no = 0;
  std::size_t dim = 0;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorKind::ParseError,
                std::string(source_name) + ":" + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text = trim(line);
    if (text.empty()) continue;
    if (text.front() == '#') {
      text = trim(text.substr(1));
      constexpr std::string_view key = "reference:";
      if (text.substr(0, key.size()) == key) {
        try {
          raw.reference = Point(parse_list(text.substr(key.size())));
        } catch (const Error& e) {
          fail(std::string("bad reference header: ") + e.what());
        }
      }
      continue;
    }
    std::vector<double> coords;
    for (std::string_view field : split(text, ',')) {
      double v = 0.0;
      if (!parse_double(field, v)) fail("not a number: '" + std::string(trim(field)) + "'");
      coords.push_back(v);
    }
    if (dim == 0) dim = coords.size();
    if (coords.size() != dim) {
      fail("expected " + std::to_string(dim) + " fields, found " + std::to_string(coords.size()));
    }
    raw.points.emplace_back(std::move(coords));
  }
  return raw;
}

void write_front_csv(std::ostream& out, const Front& front) {
  const Point& r = front.reference();
  out << "# reference: ";
  for (std::size_t d = 0; d < r.dim(); ++d) out << (d ? "," : "") << format_double(r[d]);
  out << '\n';
  for (const Point& p : front.points()) {
    for (std::size_t d = 0; d < p.dim(); ++d) out << (d ? "," : "") << format_double(p[d]);
    out << '\n';
  }
}

RawFront load_front_source(std::string_view source) {
  const auto parts = split(source, ':');
  const std::string_view kind = parts.front();
  auto arg_size = [&](std::size_t i, std::size_t fallback) {
    if (parts.size() <= i) return fallback;
    std::size_t v = 0;
    if (!parse_size(parts[i], v)) {
      throw Error(ErrorKind::ParseError, "bad generator argument in '" + std::string(source) + "'");
    }
    return v;
  };
  auto arg_double = [&](std::size_t i, double fallback) {
    if (parts.size() <= i) return fallback;
    double v = 0.0;
    if (!parse_double(parts[i], v)) {
      throw Error(ErrorKind::ParseError, "bad generator argument in '" + std::string(source) + "'");
    }
    return v;
  };

  if (source == "paper3") return to_raw(three_point_front());
  if (kind == "diag" && parts.size() == 2) return to_raw(gen_diagonal_front_2d(arg_size(1, 0)));
  if (kind == "sphere" && parts.size() >= 2 && parts.size() <= 4) {
    return to_raw(gen_sphere_front(arg_size(1, 0), arg_double(3, 1.0), arg_size(2, 1)));
  }
  if (kind == "ties" && parts.size() >= 2 && parts.size() <= 4) {
    return to_raw(gen_tied_sphere_front(arg_size(1, 0), arg_size(3, 5), 1.0, arg_size(2, 1)));
  }

  std::ifstream file{std::string(source)};
  if (!file) throw Error(ErrorKind::ParseError, "cannot open front file '" + std::string(source) + "'");
  return read_front_csv(file, source);
}

std::vector<GaussianPredictor> read_predictors_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("predictor JSON: ") + e.what());
  }
  auto one = [](const nlohmann::json& obj) {
    if (!obj.is_object() || !obj.contains("mu") || !obj.contains("sigma")) {
      throw Error(ErrorKind::ParseError, "predictor objects need 'mu' and 'sigma' arrays");
    }
    try {
      return GaussianPredictor(obj.at("mu").get<std::vector<double>>(),
                               obj.at("sigma").get<std::vector<double>>());
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::ParseError, std::string("predictor JSON: ") + e.what());
    }
  };
  std::vector<GaussianPredictor> out;
  if (doc.is_array()) {
    for (const auto& obj : doc) out.push_back(one(obj));
  } else {
    out.push_back(one(doc));
  }
  return out;
}

Point negated(const Point& p) {
  std::vector<double> c(p.begin(), p.end());
  for (double& v : c) v = -v;
  return Point(std::move(c));
}

RawFront negated(const RawFront& raw) {
  RawFront out;
  for (const Point& p : raw.points) out.points.push_back(negated(p));
  if (raw.reference) out.reference = negated(*raw.reference);
  return out;
}

GaussianPredictor negated(const GaussianPredictor& g) {
  std::vector<double> mu = g.mu();
  for (double& v : mu) v = -v;
  return GaussianPredictor(std::move(mu), g.sigma());
}

}  // namespace ehvi::workbench
