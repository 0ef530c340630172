#include "io.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "errors.hpp"

namespace concavehull {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_double(std::string_view s, double& out) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

struct CoordKey {
  std::uint64_t x, y;
  friend bool operator==(const CoordKey&, const CoordKey&) = default;
};

struct CoordKeyHash {
  std::size_t operator()(const CoordKey& k) const noexcept {
    return static_cast<std::size_t>(k.x * 0x9E3779B97F4A7C15ULL ^ (k.y + 0x7F4A7C15ULL + (k.x << 6)));
  }
};

CoordKey key_of(const Point& p) {
  auto bits = [](double v) { return std::bit_cast<std::uint64_t>(v == 0.0 ? 0.0 : v); };
  return {bits(p.x), bits(p.y)};
}

// Collects ring coordinates, merging repeated coordinates into one index.
class GeometryBuilder {
 public:
  PointIndex index_of(const Point& p) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) fail(ErrorCode::Parse, "non-finite coordinate");
    auto [it, inserted] = lookup_.emplace(key_of(p), static_cast<PointIndex>(points_.size()));
    if (inserted) points_.push_back(p);
    return it->second;
  }

  LinearRing ring(const std::vector<Point>& coords) {
    LinearRing r;
    for (const Point& p : coords) r.indices.push_back(index_of(p));
    if (r.indices.size() > 1 && r.indices.front() == r.indices.back()) r.indices.pop_back();
    return r;
  }

  GeometryDocument finish(MultiPolygon mp) {
    return GeometryDocument{std::move(mp), PointSet(std::move(points_))};
  }

 private:
  std::vector<Point> points_;
  std::unordered_map<CoordKey, PointIndex, CoordKeyHash> lookup_;
};

class WktReader {
 public:
  explicit WktReader(std::string_view text) : text_(text) {}

  GeometryDocument read() {
    MultiPolygon mp;
    const std::string kind = word();
    if (kind == "POLYGON") {
      if (!try_word("EMPTY")) mp.polygons.push_back(polygon());
    } else if (kind == "MULTIPOLYGON") {
      if (!try_word("EMPTY")) {
        expect('(');
        mp.polygons.push_back(polygon());
        while (try_char(',')) mp.polygons.push_back(polygon());
        expect(')');
      }
    } else {
      error("expected POLYGON or MULTIPOLYGON");
    }
    skip_ws();
    if (pos_ != text_.size()) error("trailing characters");
    return builder_.finish(std::move(mp));
  }

 private:
  Polygon polygon() {
    Polygon p;
    expect('(');
    p.shell = ring();
    while (try_char(',')) p.holes.push_back(ring());
    expect(')');
    return p;
  }

  LinearRing ring() {
    std::vector<Point> coords;
    expect('(');
    do {
      const double x = number();
      const double y = number();
      coords.push_back({x, y});
    } while (try_char(','));
    expect(')');
    return builder_.ring(coords);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string word() {
    skip_ws();
    std::string w;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      w.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(text_[pos_++]))));
    }
    return w;
  }

  bool try_word(std::string_view w) {
    const std::size_t save = pos_;
    if (word() == w) return true;
    pos_ = save;
    return false;
  }

  bool try_char(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!try_char(c)) error(std::string("expected '") + c + "'");
  }

  double number() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                                   std::string_view("+-.eE").find(text_[pos_]) != std::string_view::npos)) {
      ++pos_;
    }
    double v = 0.0;
    if (!parse_double(text_.substr(start, pos_ - start), v)) error("expected a number");
    return v;
  }

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::Parse, "WKT: " + what + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  GeometryBuilder builder_;
};

Point json_point(const json& c, const std::string& where) {
  if (!c.is_array() || c.size() < 2 || !c[0].is_number() || !c[1].is_number()) {
    fail(ErrorCode::Parse, "GeoJSON: " + where + ": coordinate must be [x, y]");
  }
  return {c[0].get<double>(), c[1].get<double>()};
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(ErrorCode::Parse, std::string("GeoJSON: ") + e.what());
  }
}

std::string type_of(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) return {};
  return j["type"].get<std::string>();
}

double rounded(double v, int precision) {
  const std::string s = format_number(v, precision);
  return std::strtod(s.c_str(), nullptr);
}

void append_ring_wkt(std::string& out, const LinearRing& ring, const PointSet& ps, int precision) {
  out += '(';
  for (std::size_t i = 0; i <= ring.size(); ++i) {
    const Point& p = ps[ring.indices[i % ring.size()]];
    if (i) out += ", ";
    out += format_number(p.x, precision);
    out += ' ';
    out += format_number(p.y, precision);
  }
  out += ')';
}

void append_polygon_wkt(std::string& out, const Polygon& poly, const PointSet& ps, int precision) {
  out += '(';
  append_ring_wkt(out, poly.shell, ps, precision);
  for (const LinearRing& h : poly.holes) {
    out += ", ";
    append_ring_wkt(out, h, ps, precision);
  }
  out += ')';
}

std::string to_wkt(const MultiPolygon& mp, const PointSet& ps, int precision) {
  if (mp.empty()) return "MULTIPOLYGON EMPTY";
  std::string out;
  if (mp.polygons.size() == 1) {
    out = "POLYGON ";
    append_polygon_wkt(out, mp.polygons[0], ps, precision);
    return out;
  }
  out = "MULTIPOLYGON (";
  for (std::size_t i = 0; i < mp.polygons.size(); ++i) {
    if (i) out += ", ";
    append_polygon_wkt(out, mp.polygons[i], ps, precision);
  }
  out += ')';
  return out;
}

json ring_json(const LinearRing& ring, const PointSet& ps, int precision) {
  json coords = json::array();
  for (std::size_t i = 0; i <= ring.size(); ++i) {
    const Point& p = ps[ring.indices[i % ring.size()]];
    coords.push_back({rounded(p.x, precision), rounded(p.y, precision)});
  }
  return coords;
}

json polygon_json(const Polygon& poly, const PointSet& ps, int precision) {
  json rings = json::array();
  rings.push_back(ring_json(poly.shell, ps, precision));
  for (const LinearRing& h : poly.holes) rings.push_back(ring_json(h, ps, precision));
  return rings;
}

std::string to_geojson(const MultiPolygon& mp, const PointSet& ps, int precision) {
  json geometry;
  if (mp.polygons.size() == 1) {
    geometry = {{"type", "Polygon"}, {"coordinates", polygon_json(mp.polygons[0], ps, precision)}};
  } else {
    json polys = json::array();
    for (const Polygon& p : mp.polygons) polys.push_back(polygon_json(p, ps, precision));
    geometry = {{"type", "MultiPolygon"}, {"coordinates", polys}};
  }
  json feature = {{"type", "Feature"}, {"properties", json::object()}, {"geometry", geometry}};
  return feature.dump();
}

void append_ring_path(std::string& out, const LinearRing& ring, const PointSet& ps, int precision) {
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Point& p = ps[ring.indices[i]];
    out += i ? " L " : "M ";
    out += format_number(p.x, precision);
    out += ',';
    out += format_number(-p.y, precision);
  }
  out += " Z ";
}

std::string to_svg(const MultiPolygon& mp, const PointSet& ps, int precision) {
  BoundingBox box;
  for (const Polygon& p : mp.polygons) {
    for (PointIndex pi : p.shell.indices) box.extend(ps[pi]);
  }
  if (box.empty()) box = BoundingBox{0.0, 0.0, 1.0, 1.0};
  const double span = std::max({box.width(), box.height(), 1e-9});
  const double margin = 0.02 * span;
  const double w = box.width() + 2 * margin;
  const double h = box.height() + 2 * margin;
  const double px_w = 800.0;
  const double px_h = std::max(1.0, std::round(px_w * h / w));

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + format_number(px_w, 6) +
                    "\" height=\"" + format_number(px_h, 6) + "\" viewBox=\"" +
                    format_number(box.min_x - margin, precision) + " " +
                    format_number(-box.max_y - margin, precision) + " " + format_number(w, precision) +
                    " " + format_number(h, precision) + "\">\n";
  for (const Polygon& p : mp.polygons) {
    std::string d;
    append_ring_path(d, p.shell, ps, precision);
    for (const LinearRing& hole : p.holes) append_ring_path(d, hole, ps, precision);
    out += "  <path d=\"" + d +
           "\" fill=\"#4caf50\" fill-opacity=\"0.6\" fill-rule=\"evenodd\" stroke=\"#2e7d32\" "
           "stroke-width=\"1\" vector-effect=\"non-scaling-stroke\"/>\n";
    for (const LinearRing& hole : p.holes) {
      std::string hd;
      append_ring_path(hd, hole, ps, precision);
      out += "  <path d=\"" + hd +
             "\" fill=\"none\" stroke=\"#ff9800\" stroke-width=\"1.5\" "
             "vector-effect=\"non-scaling-stroke\"/>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace

std::string format_number(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

PointSet parse_points_csv(std::string_view text) {
  std::vector<Point> pts;
  std::unordered_map<CoordKey, std::size_t, CoordKeyHash> seen;
  std::size_t line_no = 0;
  bool first_content = true;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const std::size_t comma = line.find(',');
    const std::string where = "line " + std::to_string(line_no);
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
      fail(ErrorCode::Parse, where + ": expected exactly two comma-separated values");
    }
    Point p;
    const bool ok = parse_double(line.substr(0, comma), p.x) && parse_double(line.substr(comma + 1), p.y);
    if (!ok) {
      std::string lower(line);
      for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      lower.erase(std::remove_if(lower.begin(), lower.end(), [](unsigned char c) { return std::isspace(c); }),
                  lower.end());
      if (first_content && lower == "x,y") {
        first_content = false;
        continue;
      }
      fail(ErrorCode::Parse, where + ": could not parse '" + std::string(line) + "' as x,y");
    }
    first_content = false;
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) fail(ErrorCode::Parse, where + ": non-finite coordinate");
    auto [it, inserted] = seen.emplace(key_of(p), line_no);
    if (!inserted) {
      fail(ErrorCode::Parse, where + ": duplicate of the point on line " + std::to_string(it->second));
    }
    pts.push_back(p);
    if (end == text.size()) break;
  }
  return PointSet(std::move(pts));
}

PointSet parse_points_geojson(std::string_view text) {
  const json doc = parse_json(text);
  std::vector<Point> pts;
  std::unordered_map<CoordKey, std::string, CoordKeyHash> seen;

  auto add = [&](const json& c, const std::string& where) {
    const Point p = json_point(c, where);
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) fail(ErrorCode::Parse, "GeoJSON: " + where + ": non-finite coordinate");
    auto [it, inserted] = seen.emplace(key_of(p), where);
    if (!inserted) fail(ErrorCode::Parse, "GeoJSON: " + where + ": duplicate of " + it->second);
    pts.push_back(p);
  };
  auto add_geometry = [&](const json& g, const std::string& where) {
    const std::string t = type_of(g);
    if (!g.contains("coordinates")) fail(ErrorCode::Parse, "GeoJSON: " + where + ": missing coordinates");
    const json& c = g["coordinates"];
    if (t == "Point") {
      add(c, where);
    } else if (t == "MultiPoint") {
      if (!c.is_array()) fail(ErrorCode::Parse, "GeoJSON: " + where + ": coordinates must be an array");
      for (std::size_t i = 0; i < c.size(); ++i) add(c[i], where + " point " + std::to_string(i));
    } else {
      fail(ErrorCode::Parse, "GeoJSON: " + where + ": expected Point or MultiPoint, got '" + t + "'");
    }
  };

  const std::string t = type_of(doc);
  if (t == "FeatureCollection") {
    if (!doc.contains("features") || !doc["features"].is_array()) {
      fail(ErrorCode::Parse, "GeoJSON: FeatureCollection without a features array");
    }
    const json& features = doc["features"];
    for (std::size_t i = 0; i < features.size(); ++i) {
      const std::string where = "feature " + std::to_string(i);
      if (!features[i].contains("geometry")) fail(ErrorCode::Parse, "GeoJSON: " + where + ": missing geometry");
      add_geometry(features[i]["geometry"], where);
    }
  } else if (t == "Feature") {
    if (!doc.contains("geometry")) fail(ErrorCode::Parse, "GeoJSON: feature without geometry");
    add_geometry(doc["geometry"], "feature 0");
  } else if (t == "MultiPoint" || t == "Point") {
    add_geometry(doc, "geometry");
  } else {
    fail(ErrorCode::Parse, "GeoJSON: unsupported top-level type '" + t + "'");
  }
  return PointSet(std::move(pts));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::Io, "cannot write '" + path.string() + "'");
  out << contents;
  if (!out) fail(ErrorCode::Io, "failed writing '" + path.string() + "'");
}

PointSet parse_points(const std::filesystem::path& path, PointFormat format) {
  const std::string text = read_file(path);
  return format == PointFormat::Csv ? parse_points_csv(text) : parse_points_geojson(text);
}

std::string serialize(const MultiPolygon& mp, const PointSet& ps, GeometryFormat format, int precision) {
  if (precision < 1 || precision > 17) fail(ErrorCode::InvalidArgument, "precision must be in [1, 17]");
  switch (format) {
    case GeometryFormat::Wkt: return to_wkt(mp, ps, precision);
    case GeometryFormat::GeoJson: return to_geojson(mp, ps, precision);
    case GeometryFormat::Svg: return to_svg(mp, ps, precision);
  }
  fail(ErrorCode::InvalidArgument, "unknown geometry format");
}

GeometryDocument parse_geometry_wkt(std::string_view text) { return WktReader(text).read(); }

GeometryDocument parse_geometry_geojson(std::string_view text) {
  const json doc = parse_json(text);
  GeometryBuilder builder;
  MultiPolygon mp;

  auto read_polygon = [&](const json& rings, const std::string& where) {
    if (!rings.is_array() || rings.empty()) fail(ErrorCode::Parse, "GeoJSON: " + where + ": polygon needs rings");
    Polygon poly;
    for (std::size_t r = 0; r < rings.size(); ++r) {
      if (!rings[r].is_array()) fail(ErrorCode::Parse, "GeoJSON: " + where + ": ring must be an array");
      std::vector<Point> coords;
      for (const json& c : rings[r]) coords.push_back(json_point(c, where));
      LinearRing ring = builder.ring(coords);
      if (r == 0) {
        poly.shell = std::move(ring);
      } else {
        poly.holes.push_back(std::move(ring));
      }
    }
    mp.polygons.push_back(std::move(poly));
  };
  auto read_geometry_object = [&](const json& g, const std::string& where) {
    const std::string t = type_of(g);
    if (!g.contains("coordinates")) fail(ErrorCode::Parse, "GeoJSON: " + where + ": missing coordinates");
    const json& c = g["coordinates"];
    if (t == "Polygon") {
      read_polygon(c, where);
    } else if (t == "MultiPolygon") {
      if (!c.is_array()) fail(ErrorCode::Parse, "GeoJSON: " + where + ": coordinates must be an array");
      for (std::size_t i = 0; i < c.size(); ++i) read_polygon(c[i], where + " polygon " + std::to_string(i));
    } else {
      fail(ErrorCode::Parse, "GeoJSON: " + where + ": expected Polygon or MultiPolygon, got '" + t + "'");
    }
  };

  const std::string t = type_of(doc);
  if (t == "FeatureCollection") {
    const json& features = doc.at("features");
    for (std::size_t i = 0; i < features.size(); ++i) {
      read_geometry_object(features[i].at("geometry"), "feature " + std::to_string(i));
    }
  } else if (t == "Feature") {
    read_geometry_object(doc.at("geometry"), "feature 0");
  } else {
    read_geometry_object(doc, "geometry");
  }
  return builder.finish(std::move(mp));
}

GeometryDocument read_geometry(const std::filesystem::path& path, GeometryFormat format) {
  const std::string text = read_file(path);
  if (format == GeometryFormat::Wkt) return parse_geometry_wkt(text);
  if (format == GeometryFormat::GeoJson) return parse_geometry_geojson(text);
  fail(ErrorCode::InvalidArgument, "geometry input must be WKT or GeoJSON");
}

std::string report_json(const ExtractionReport& r) {
  auto ms = [](double v) { return std::round(v * 1000.0) / 1000.0; };
  const nlohmann::ordered_json j = {
      {"triangulation_ms", ms(r.triangulation_ms)},
      {"shape_extraction_ms", ms(r.shape_extraction_ms)},
      {"polygon_extraction_ms", ms(r.polygon_extraction_ms)},
      {"total_ms", ms(r.total_ms)},
      {"n_points", r.n_points},
      {"n_triangles", r.n_triangles},
      {"n_retained_triangles", r.n_retained_triangles},
      {"n_regions", r.n_regions},
      {"n_polygons", r.n_polygons},
      {"n_holes", r.n_holes},
  };
  return j.dump();
}

}  // namespace concavehull
