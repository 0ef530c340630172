#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <string>

#include "errors.hpp"
#include "fixtures.hpp"
#include "io.hpp"
#include "metrics.hpp"
#include "oracles.hpp"
#include "polygon_extract.hpp"

using namespace concavehull;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

std::string message_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

MultiPolygon single(const Polygon& p) {
  MultiPolygon mp;
  mp.polygons.push_back(p);
  return mp;
}

std::vector<Point> ring_points(const LinearRing& r, const PointSet& ps) {
  std::vector<Point> out;
  for (PointIndex i : r.indices) out.push_back(ps[i]);
  return out;
}

// Drops the closing coordinate after checking it is there.
std::vector<Point> open_ring(const oracle::Ring& r) {
  REQUIRE(r.size() >= 4);
  CHECK(r.front() == r.back());
  return {r.begin(), r.end() - 1};
}

struct Holey {
  PointSet ps;
  ExtractionResult res;
};

Holey holey_extraction() {
  const auto shape = fixtures::square_with_void(60, 20);
  Holey h{sample_points_in_polygon(shape.polygon, shape.points, 3000, 5), {}};
  FilterConfig cfg;
  cfg.alpha = 2.2;
  h.res = extract_multipolygon(h.ps, cfg);
  return h;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("CSV points") {
  const PointSet a = parse_points_csv("0,0\n1,0\n0,1\n");
  REQUIRE(a.size() == 3);
  CHECK(a[1] == Point{1, 0});
  const PointSet b = parse_points_csv("x,y\n0,0\n1,0\n0,1\n");
  REQUIRE(b.size() == 3);
  CHECK(std::equal(a.points().begin(), a.points().end(), b.points().begin()));
  const PointSet c = parse_points_csv("X , Y\r\n 0 , 0 \r\n1e0,-0\r\n\r\n0,1.0");
  CHECK(c.size() == 3);
  CHECK(parse_points_csv("").size() == 0);
}

TEST_CASE("CSV diagnostics name the line") {
  CHECK(code_of([] { parse_points_csv("0,0\n1,abc\n"); }) == ErrorCode::Parse);
  CHECK(message_of([] { parse_points_csv("0,0\n1,abc\n"); }).find("line 2") != std::string::npos);
  CHECK(message_of([] { parse_points_csv("x,y\n0,0\n\n1,2,3\n"); }).find("line 4") != std::string::npos);
  CHECK(message_of([] { parse_points_csv("0,0\n1,1\n0,0\n"); }).find("line 3") != std::string::npos);
  CHECK(message_of([] { parse_points_csv("0,0\n1,1\n0,0\n"); }).find("line 1") != std::string::npos);
  CHECK(code_of([] { parse_points_csv("0,nan\n"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_points_csv("0,inf\n"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_points_csv("0,0\nx,y\n"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_points_csv("0;0\n"); }) == ErrorCode::Parse);
}

TEST_CASE("GeoJSON points") {
  const PointSet mp = parse_points_geojson(R"({"type":"MultiPoint","coordinates":[[0,0],[1,0],[0,1]]})");
  CHECK(mp.size() == 3);
  const PointSet fc = parse_points_geojson(R"({"type":"FeatureCollection","features":[
      {"type":"Feature","properties":{},"geometry":{"type":"Point","coordinates":[0,0]}},
      {"type":"Feature","properties":{},"geometry":{"type":"Point","coordinates":[2,0]}},
      {"type":"Feature","properties":{},"geometry":{"type":"MultiPoint","coordinates":[[0,2],[1,1]]}}]})");
  CHECK(fc.size() == 4);
  const std::string dup = R"({"type":"FeatureCollection","features":[
      {"type":"Feature","geometry":{"type":"Point","coordinates":[0,0]}},
      {"type":"Feature","geometry":{"type":"Point","coordinates":[0,0]}}]})";
  CHECK(code_of([&] { parse_points_geojson(dup); }) == ErrorCode::Parse);
  CHECK(message_of([&] { parse_points_geojson(dup); }).find("feature 1") != std::string::npos);
  CHECK(code_of([] { parse_points_geojson("{not json"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_points_geojson(R"({"type":"Polygon","coordinates":[]})"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_points_geojson(R"({"type":"MultiPoint","coordinates":[[0]]})"); }) == ErrorCode::Parse);
}

TEST_CASE("point files") {
  const auto dir = std::filesystem::temp_directory_path() / "concavehull_io_test";
  std::filesystem::create_directories(dir);
  write_file(dir / "p.csv", "0,0\n1,0\n0,1\n");
  CHECK(parse_points(dir / "p.csv", PointFormat::Csv).size() == 3);
  CHECK(code_of([&] { parse_points(dir / "missing.csv", PointFormat::Csv); }) == ErrorCode::Io);
  std::filesystem::remove_all(dir);
}

TEST_CASE("WKT output") {
  const auto sq = fixtures::unit_square();
  CHECK(serialize(single(sq.polygon), sq.points, GeometryFormat::Wkt) == "POLYGON ((0 0, 1 0, 1 1, 0 1, 0 0))");
  CHECK(serialize(MultiPolygon{}, sq.points, GeometryFormat::Wkt) == "MULTIPOLYGON EMPTY");
  MultiPolygon two = single(sq.polygon);
  two.polygons.push_back(sq.polygon);
  CHECK(serialize(two, sq.points, GeometryFormat::Wkt).rfind("MULTIPOLYGON (((0 0", 0) == 0);
  const PointSet odd({{0.1, -0.0}, {1.0 / 3, 2}, {-1e-12, 5e20}});
  Polygon tri;
  tri.shell.indices = {0, 1, 2};
  CHECK(serialize(single(tri), odd, GeometryFormat::Wkt) ==
        "POLYGON ((0.1 0, 0.333333333 2, -1e-12 5e+20, 0.1 0))");
  CHECK(serialize(single(tri), odd, GeometryFormat::Wkt, 3) == "POLYGON ((0.1 0, 0.333 2, -1e-12 5e+20, 0.1 0))");
  CHECK_THROWS_AS(serialize(single(tri), odd, GeometryFormat::Wkt, 0), Error);
}

TEST_CASE("GeoJSON output") {
  const auto sq = fixtures::unit_square();
  CHECK(serialize(MultiPolygon{}, sq.points, GeometryFormat::GeoJson) ==
        R"({"geometry":{"coordinates":[],"type":"MultiPolygon"},"properties":{},"type":"Feature"})");
  const auto polys = oracle::read_geojson(serialize(single(sq.polygon), sq.points, GeometryFormat::GeoJson));
  REQUIRE(polys.size() == 1);
  CHECK(oracle::same_cycle(open_ring(polys[0][0]), ring_points(sq.polygon.shell, sq.points)));
}

TEST_CASE("round trip through independent readers") {
  const Holey h = holey_extraction();
  const MultiPolygon& mp = h.res.multipolygon;
  const PointSet& ps = h.ps;
  REQUIRE(mp.polygons.size() == 1);
  REQUIRE(mp.polygons[0].holes.size() >= 1);

  for (GeometryFormat fmt : {GeometryFormat::Wkt, GeometryFormat::GeoJson}) {
    const std::string text = serialize(mp, ps, fmt, 17);
    const auto polys = fmt == GeometryFormat::Wkt ? oracle::read_wkt(text) : oracle::read_geojson(text);
    REQUIRE(polys.size() == mp.polygons.size());
    for (std::size_t i = 0; i < polys.size(); ++i) {
      const Polygon& src = mp.polygons[i];
      REQUIRE(polys[i].size() == 1 + src.holes.size());
      CHECK(oracle::same_cycle(open_ring(polys[i][0]), ring_points(src.shell, ps)));
      CHECK(oracle::shoelace(polys[i][0]) > 0);
      for (std::size_t h = 0; h < src.holes.size(); ++h) {
        CHECK(oracle::same_cycle(open_ring(polys[i][h + 1]), ring_points(src.holes[h], ps)));
        CHECK(oracle::shoelace(polys[i][h + 1]) < 0);
      }
    }
    // Default precision stays within 9 significant digits of the source.
    const auto rounded = fmt == GeometryFormat::Wkt ? oracle::read_wkt(serialize(mp, ps, fmt))
                                                    : oracle::read_geojson(serialize(mp, ps, fmt));
    const auto exact = ring_points(mp.polygons[0].shell, ps);
    const auto approx = open_ring(rounded[0][0]);
    REQUIRE(approx.size() == exact.size());
    for (std::size_t k = 0; k < exact.size(); ++k) {
      CHECK(std::abs(approx[k].x - exact[k].x) <= 1e-8 * std::max(1.0, std::abs(exact[k].x)));
      CHECK(std::abs(approx[k].y - exact[k].y) <= 1e-8 * std::max(1.0, std::abs(exact[k].y)));
    }
  }
}

TEST_CASE("geometry readers") {
  const GeometryDocument w = parse_geometry_wkt("POLYGON ((0 0, 4 0, 4 4, 0 4, 0 0), (1 1, 1 2, 2 2, 2 1, 1 1))");
  REQUIRE(w.multipolygon.polygons.size() == 1);
  CHECK(w.points.size() == 8);
  CHECK(w.multipolygon.polygons[0].shell.size() == 4);
  CHECK(w.multipolygon.polygons[0].holes.size() == 1);
  CHECK(validate_polygon(w.multipolygon.polygons[0], w.points).is_valid);

  const GeometryDocument shared = parse_geometry_wkt(
      "multipolygon (((0 0, 1 0, 1 1, 0 0)), ((1 1, 2 1, 2 2, 1 1)))");
  CHECK(shared.multipolygon.polygons.size() == 2);
  CHECK(shared.points.size() == 5);

  CHECK(parse_geometry_wkt("MULTIPOLYGON EMPTY").multipolygon.empty());
  CHECK(parse_geometry_wkt("POLYGON EMPTY").multipolygon.empty());

  const GeometryDocument g = parse_geometry_geojson(
      R"({"type":"Feature","geometry":{"type":"Polygon","coordinates":[[[0,0],[4,0],[4,4],[0,4],[0,0]]]}})");
  REQUIRE(g.multipolygon.polygons.size() == 1);
  CHECK(g.multipolygon.polygons[0].shell.size() == 4);

  const GeometryDocument fc = parse_geometry_geojson(R"({"type":"FeatureCollection","features":[
      {"type":"Feature","geometry":{"type":"Polygon","coordinates":[[[0,0],[1,0],[0,1],[0,0]]]}},
      {"type":"Feature","geometry":{"type":"MultiPolygon","coordinates":[[[[5,5],[6,5],[5,6],[5,5]]]]}}]})");
  CHECK(fc.multipolygon.polygons.size() == 2);

  CHECK(code_of([] { parse_geometry_wkt("POLYGON ((0 0, 1 0, 1 1, 0 0)"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_geometry_wkt("LINESTRING (0 0, 1 1)"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_geometry_wkt("POLYGON ((0 0, 1 x, 1 1, 0 0))"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_geometry_wkt("POLYGON ((0 0, 1 0, 1 1, 0 0)) junk"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_geometry_geojson(R"({"type":"Point","coordinates":[0,0]})"); }) == ErrorCode::Parse);
}

TEST_CASE("geometry written by serialize reads back") {
  const Holey h = holey_extraction();
  const ExtractionResult& res = h.res;
  const PointSet& ps = h.ps;
  for (GeometryFormat fmt : {GeometryFormat::Wkt, GeometryFormat::GeoJson}) {
    const std::string text = serialize(res.multipolygon, ps, fmt, 17);
    const GeometryDocument doc = fmt == GeometryFormat::Wkt ? parse_geometry_wkt(text) : parse_geometry_geojson(text);
    REQUIRE(doc.multipolygon.polygons.size() == res.multipolygon.polygons.size());
    const Polygon& a = res.multipolygon.polygons[0];
    const Polygon& b = doc.multipolygon.polygons[0];
    CHECK(ring_points(b.shell, doc.points) == ring_points(a.shell, ps));
    REQUIRE(b.holes.size() == a.holes.size());
    CHECK(signed_area(b.shell, doc.points) == signed_area(a.shell, ps));
    CHECK(validate_polygon(b, doc.points).is_valid);
  }
}

TEST_CASE("SVG output") {
  const auto v = fixtures::square_with_void(10, 4);
  const std::string svg = serialize(single(v.polygon), v.points, GeometryFormat::Svg);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("viewBox=\"") != std::string::npos);
  CHECK(svg.find("fill-rule=\"evenodd\"") != std::string::npos);
  CHECK(svg.find("#ff9800") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  std::size_t paths = 0;
  for (std::size_t pos = svg.find("<path"); pos != std::string::npos; pos = svg.find("<path", pos + 1)) ++paths;
  CHECK(paths == 2);
  CHECK(serialize(MultiPolygon{}, v.points, GeometryFormat::Svg).find("<path") == std::string::npos);
}

TEST_CASE("report JSON") {
  ExtractionReport r;
  r.triangulation_ms = 1.23456;
  r.n_points = 10;
  const std::string j = report_json(r);
  CHECK(j.find("\"triangulation_ms\":1.235") != std::string::npos);
  CHECK(j.find("\"n_points\":10") != std::string::npos);
  CHECK(j.find('\n') == std::string::npos);
  CHECK(j.rfind("{\"triangulation_ms\"", 0) == 0);
}

TEST_CASE("format_number") {
  CHECK(format_number(-0.0, 9) == "0");
  CHECK(format_number(1.0, 9) == "1");
  CHECK(format_number(123456789012.0, 9) == "1.23456789e+11");
  CHECK(format_number(0.1, 17) == "0.10000000000000001");
}

}  // TEST_SUITE
