#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "geom.hpp"
#include "polygon_extract.hpp"

namespace concavehull {

enum class PointFormat { Csv, GeoJson };
enum class GeometryFormat { Wkt, GeoJson, Svg };

inline constexpr int kDefaultPrecision = 9;

// CSV: one `x,y` pair per line, optional `x,y` header. GeoJSON: a MultiPoint
// geometry, a Feature holding one, or a FeatureCollection of Point/MultiPoint
// features. Errors are Error(Parse) naming the offending line or feature.
PointSet parse_points_csv(std::string_view text);
PointSet parse_points_geojson(std::string_view text);
PointSet parse_points(const std::filesystem::path& path, PointFormat format);

// WKT rings are closed by repeating the first coordinate. GeoJSON output is a
// single Feature whose geometry is a Polygon (exactly one polygon) or a
// MultiPolygon; exterior rings are counterclockwise and holes clockwise, as
// extracted. SVG fills shells (even-odd, so holes stay open) and outlines
// holes in orange.
std::string serialize(const MultiPolygon& mp, const PointSet& ps, GeometryFormat format,
                      int precision = kDefaultPrecision);

struct GeometryDocument {
  MultiPolygon multipolygon;
  PointSet points;  // ring coordinates, one entry per distinct coordinate
};

// Polygon / MultiPolygon readers. Ring closure, when present, is dropped.
GeometryDocument parse_geometry_wkt(std::string_view text);
GeometryDocument parse_geometry_geojson(std::string_view text);
GeometryDocument read_geometry(const std::filesystem::path& path, GeometryFormat format);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

std::string report_json(const ExtractionReport& report);

std::string format_number(double v, int precision);

}  // namespace concavehull
