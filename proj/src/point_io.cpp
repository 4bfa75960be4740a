#include "chromospan/point_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

namespace chromospan {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  return out;
}

}  // namespace

PointSet parse_points(std::istream& in) {
  PointSet points;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text = raw;
    if (const auto hash = text.find('#'); hash != std::string_view::npos) {
      text = text.substr(0, hash);
    }
    text = trim(text);
    if (text.empty()) continue;

    std::istringstream fields{std::string(text)};
    std::string xs, ys, extra;
    if (!(fields >> xs >> ys) || (fields >> extra)) {
      parse_error(line, "expected two coordinates");
    }
    Point p;
    for (auto [field, target] : {std::pair{&xs, &p.x}, std::pair{&ys, &p.y}}) {
      const char* end = field->data() + field->size();
      const auto [ptr, ec] = std::from_chars(field->data(), end, *target);
      if (ec != std::errc() || ptr != end || !std::isfinite(*target)) {
        parse_error(line, "bad coordinate '" + *field + "'");
      }
    }
    points.push_back(p);
  }
  require_distinct(points);
  return points;
}

PointSet read_points(const std::filesystem::path& path) {
  std::ifstream in = open_in(path);
  return parse_points(in);
}

void format_points(std::ostream& out, const PointSet& points) {
  const auto old = out.precision(std::numeric_limits<double>::max_digits10);
  for (const Point& p : points) out << p.x << ' ' << p.y << '\n';
  out.precision(old);
}

void write_points(const PointSet& points, const std::filesystem::path& path) {
  std::ofstream out = open_out(path);
  format_points(out, points);
}

void format_coloring(std::ostream& out, const Coloring& coloring) {
  out << "index,color\n";
  for (std::size_t i = 0; i < coloring.size(); ++i) {
    out << i << ',' << coloring[i] << '\n';
  }
}

Coloring parse_coloring(std::istream& in, int k) {
  Coloring coloring{k, {}};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view text = trim(raw);
    if (text.empty() || text == "index,color") continue;
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) parse_error(line, "expected index,color");
    std::size_t index = 0;
    Color color = 0;
    const auto idx = text.substr(0, comma);
    const auto col = text.substr(comma + 1);
    if (std::from_chars(idx.data(), idx.data() + idx.size(), index).ptr !=
            idx.data() + idx.size() ||
        std::from_chars(col.data(), col.data() + col.size(), color).ptr !=
            col.data() + col.size()) {
      parse_error(line, "expected integers");
    }
    if (index != coloring.size()) parse_error(line, "indices must be 0,1,2,...");
    coloring.colors.push_back(color);
  }
  coloring.validate();
  return coloring;
}

Coloring read_coloring(const std::filesystem::path& path, int k) {
  std::ifstream in = open_in(path);
  return parse_coloring(in, k);
}

void format_edges(std::ostream& out, const PointSet& points, const EdgeSet& edges) {
  const auto old = out.precision(std::numeric_limits<double>::max_digits10);
  out << "u,v,length\n";
  for (const Edge& e : edges) {
    out << e.u << ',' << e.v << ',' << distance(points[e.u], points[e.v]) << '\n';
  }
  out.precision(old);
}

}  // namespace chromospan
