#include "kpspan/point_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <system_error>

#include <nlohmann/json.hpp>

namespace kpspan {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

int parse_color(std::string_view text, std::size_t line) {
  text = trim(text);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw InputError("line " + std::to_string(line) + ": bad colour '" +
                     std::string(text) + "'");
  return value;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

double parse_double(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw InputError("bad number '" + std::string(text) + "'");
  return value;
}

ColoredPointSet read_points_csv(std::istream& in) {
  std::vector<std::vector<double>> coords;
  std::vector<Color> colors;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;

    std::size_t comma = view.find(',');
    if (comma == std::string_view::npos)
      throw InputError("line " + std::to_string(lineno) + ": expected color,x1,...,xd");
    colors.push_back(parse_color(view.substr(0, comma), lineno));
    std::vector<double> point;
    view.remove_prefix(comma + 1);
    while (true) {
      comma = view.find(',');
      try {
        point.push_back(parse_double(view.substr(0, comma)));
      } catch (const InputError& e) {
        throw InputError("line " + std::to_string(lineno) + ": " + e.what());
      }
      if (comma == std::string_view::npos) break;
      view.remove_prefix(comma + 1);
    }
    coords.push_back(std::move(point));
  }
  return ColoredPointSet(std::move(coords), std::move(colors));
}

void write_points_csv(std::ostream& out, const ColoredPointSet& set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    out << set.color_of(i);
    for (double x : set[i].coords) out << ',' << format_double(x);
    out << '\n';
  }
}

ColoredPointSet read_points_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  std::vector<std::vector<double>> coords;
  std::vector<Color> colors;
  try {
    for (const auto& p : doc.at("points")) {
      colors.push_back(p.at("color").get<int>());
      coords.push_back(p.at("coords").get<std::vector<double>>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed point set: ") + e.what());
  }
  ColoredPointSet set(std::move(coords), std::move(colors));
  if (doc.contains("d") && doc["d"].get<std::size_t>() != set.dim())
    throw InputError("declared d does not match the coordinates");
  if (doc.contains("k") && doc["k"].get<int>() != set.num_colors())
    throw InputError("declared k does not match the colours");
  return set;
}

void write_points_json(std::ostream& out, const ColoredPointSet& set) {
  // nlohmann prints doubles in a round-trip exact form.
  nlohmann::ordered_json doc;
  doc["d"] = set.dim();
  doc["k"] = set.num_colors();
  auto& points = doc["points"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < set.size(); ++i) {
    nlohmann::ordered_json p;
    p["color"] = set.color_of(i);
    p["coords"] = set[i].coords;
    points.push_back(std::move(p));
  }
  out << doc.dump(1) << '\n';
}

PointFormat format_for_path(const std::string& path) {
  const std::string ext = ".json";
  if (path.size() >= ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0)
    return PointFormat::Json;
  return PointFormat::Csv;
}

ColoredPointSet read_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return format_for_path(path) == PointFormat::Json ? read_points_json(in)
                                                     : read_points_csv(in);
}

void write_points(std::ostream& out, const ColoredPointSet& set, PointFormat format) {
  if (format == PointFormat::Json)
    write_points_json(out, set);
  else
    write_points_csv(out, set);
}

}  // namespace kpspan
