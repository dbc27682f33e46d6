#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "kpspan/geometry.hpp"

namespace kpspan {

enum class PointFormat { Csv, Json };

/// Shortest decimal text that parses back to exactly `x`.
std::string format_double(double x);
double parse_double(std::string_view text);

/// CSV: one point per line, `color,x1,...,xd`. Blank lines and lines starting
/// with '#' are ignored.
ColoredPointSet read_points_csv(std::istream& in);
void write_points_csv(std::ostream& out, const ColoredPointSet& set);

/// JSON: {"d": d, "k": k, "points": [{"color": c, "coords": [...]}, ...]}
ColoredPointSet read_points_json(std::istream& in);
void write_points_json(std::ostream& out, const ColoredPointSet& set);

/// Picks the format from the extension (".json" -> JSON, anything else CSV).
PointFormat format_for_path(const std::string& path);
ColoredPointSet read_points_file(const std::string& path);
void write_points(std::ostream& out, const ColoredPointSet& set, PointFormat format);

}  // namespace kpspan
