#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "chromospan/coloring.hpp"
#include "chromospan/geometry.hpp"
#include "chromospan/graph.hpp"

namespace chromospan {

// Point files hold one "x y" pair per line. Blank lines and anything after
// '#' are ignored. Parse failures throw ParseError naming the 1-based line.

PointSet parse_points(std::istream& in);
PointSet read_points(const std::filesystem::path& path);

/// Writes with round-trip precision.
void format_points(std::ostream& out, const PointSet& points);
void write_points(const PointSet& points, const std::filesystem::path& path);

/// "index,color" CSV with a header row.
void format_coloring(std::ostream& out, const Coloring& coloring);
Coloring parse_coloring(std::istream& in, int k);
Coloring read_coloring(const std::filesystem::path& path, int k);

/// "u,v,length" CSV with a header row.
void format_edges(std::ostream& out, const PointSet& points, const EdgeSet& edges);

}  // namespace chromospan
