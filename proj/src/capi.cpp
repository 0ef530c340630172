#include "concavehull/concavehull.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include <json.hpp>

#include "benchmark.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "metrics.hpp"
#include "polygon_extract.hpp"
#include "triangulation.hpp"

using namespace concavehull;

struct ch_point_set {
  std::shared_ptr<const PointSet> points;
};

struct ch_result {
  std::shared_ptr<const PointSet> points;
  ExtractionResult result;
};

struct ch_geometry {
  GeometryDocument doc;
};

namespace {

thread_local std::string last_error;

ch_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return CH_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return CH_ERR_PARSE;
    case ErrorCode::TooFewPoints: return CH_ERR_TOO_FEW_POINTS;
    case ErrorCode::DegenerateInput: return CH_ERR_DEGENERATE_INPUT;
    case ErrorCode::CorruptBoundary: return CH_ERR_CORRUPT_BOUNDARY;
    case ErrorCode::Io: return CH_ERR_IO;
    case ErrorCode::Internal: return CH_ERR_INTERNAL;
  }
  return CH_ERR_INTERNAL;
}

ch_status set_error(ch_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename F>
ch_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return CH_OK;
  } catch (const Error& e) {
    return set_error(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(CH_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(CH_ERR_INTERNAL, e.what());
  }
}

void require(bool cond, const char* what) {
  if (!cond) fail(ErrorCode::InvalidArgument, what);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

FilterConfig to_config(const ch_filter_config& c) {
  FilterConfig cfg;
  if (c.has_alpha) cfg.alpha = c.alpha;
  if (c.has_lmax) cfg.l_max = c.lmax;
  cfg.min_region_size = c.min_region_size;
  cfg.validate();
  return cfg;
}

GeometryFormat to_format(ch_geometry_format f) {
  switch (f) {
    case CH_GEOMETRY_WKT: return GeometryFormat::Wkt;
    case CH_GEOMETRY_GEOJSON: return GeometryFormat::GeoJson;
    case CH_GEOMETRY_SVG: return GeometryFormat::Svg;
  }
  fail(ErrorCode::InvalidArgument, "unknown geometry format");
}

PointFormat to_format(ch_point_format f) {
  switch (f) {
    case CH_POINTS_CSV: return PointFormat::Csv;
    case CH_POINTS_GEOJSON: return PointFormat::GeoJson;
  }
  fail(ErrorCode::InvalidArgument, "unknown point format");
}

}  // namespace

extern "C" {

const char* ch_last_error(void) { return last_error.c_str(); }

const char* ch_status_string(ch_status status) {
  switch (status) {
    case CH_OK: return "ok";
    case CH_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CH_ERR_PARSE: return "parse error";
    case CH_ERR_TOO_FEW_POINTS: return "too few points";
    case CH_ERR_DEGENERATE_INPUT: return "degenerate input";
    case CH_ERR_CORRUPT_BOUNDARY: return "corrupt boundary";
    case CH_ERR_IO: return "i/o error";
    case CH_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void ch_string_free(char* s) { std::free(s); }

void ch_filter_config_init(ch_filter_config* cfg) {
  if (!cfg) return;
  *cfg = ch_filter_config{0, 0.0, 0, 0.0, 1};
}

ch_status ch_point_set_create(const double* xy, size_t n, ch_point_set** out) {
  return guarded([&] {
    require(out && (xy || n == 0), "null argument");
    std::vector<Point> pts(n);
    for (size_t i = 0; i < n; ++i) pts[i] = {xy[2 * i], xy[2 * i + 1]};
    auto ps = std::make_shared<const PointSet>(std::move(pts));
    *out = new ch_point_set{std::move(ps)};
  });
}

ch_status ch_point_set_parse(const char* text, size_t len, ch_point_format format, ch_point_set** out) {
  return guarded([&] {
    require(out && (text || len == 0), "null argument");
    const std::string_view sv(text ? text : "", len);
    PointSet ps = to_format(format) == PointFormat::Csv ? parse_points_csv(sv) : parse_points_geojson(sv);
    *out = new ch_point_set{std::make_shared<const PointSet>(std::move(ps))};
  });
}

ch_status ch_point_set_read(const char* path, ch_point_format format, ch_point_set** out) {
  return guarded([&] {
    require(path && out, "null argument");
    PointSet ps = parse_points(path, to_format(format));
    *out = new ch_point_set{std::make_shared<const PointSet>(std::move(ps))};
  });
}

size_t ch_point_set_size(const ch_point_set* ps) { return ps ? ps->points->size() : 0; }

ch_status ch_point_set_point(const ch_point_set* ps, size_t i, double* x, double* y) {
  return guarded([&] {
    require(ps && x && y, "null argument");
    require(i < ps->points->size(), "point index out of range");
    const Point& p = (*ps->points)[static_cast<PointIndex>(i)];
    *x = p.x;
    *y = p.y;
  });
}

void ch_point_set_free(ch_point_set* ps) { delete ps; }

ch_status ch_suggest_alpha(const ch_point_set* ps, double* out) {
  return guarded([&] {
    require(ps && out, "null argument");
    *out = suggest_alpha(*ps->points);
  });
}

ch_status ch_triangulation_dump(const ch_point_set* ps, char** out) {
  return guarded([&] {
    require(ps && out, "null argument");
    const HalfEdgeMesh mesh = triangulate(*ps->points);
    std::ostringstream ss;
    write_debug_dump(mesh, ss);
    *out = dup_string(ss.str());
  });
}

ch_status ch_extract(const ch_point_set* ps, const ch_filter_config* cfg, ch_result** out) {
  return guarded([&] {
    require(ps && cfg && out, "null argument");
    auto r = std::make_unique<ch_result>();
    r->points = ps->points;
    r->result = extract_multipolygon(*ps->points, to_config(*cfg));
    *out = r.release();
  });
}

ch_status ch_result_report(const ch_result* r, ch_report* out) {
  return guarded([&] {
    require(r && out, "null argument");
    const ExtractionReport& rep = r->result.report;
    *out = ch_report{rep.triangulation_ms, rep.shape_extraction_ms, rep.polygon_extraction_ms,
                     rep.total_ms,         rep.n_points,            rep.n_triangles,
                     rep.n_retained_triangles, rep.n_regions,       rep.n_polygons,
                     rep.n_holes};
  });
}

size_t ch_result_polygon_count(const ch_result* r) {
  return r ? r->result.multipolygon.polygons.size() : 0;
}

size_t ch_result_hole_count(const ch_result* r, size_t polygon) {
  if (!r || polygon >= r->result.multipolygon.polygons.size()) return 0;
  return r->result.multipolygon.polygons[polygon].holes.size();
}

ch_status ch_result_ring(const ch_result* r, size_t polygon, size_t ring, const uint32_t** indices,
                         size_t* count) {
  return guarded([&] {
    require(r && indices && count, "null argument");
    const auto& polys = r->result.multipolygon.polygons;
    require(polygon < polys.size(), "polygon index out of range");
    const Polygon& p = polys[polygon];
    require(ring <= p.holes.size(), "ring index out of range");
    const LinearRing& lr = ring == 0 ? p.shell : p.holes[ring - 1];
    *indices = lr.indices.data();
    *count = lr.indices.size();
  });
}

ch_status ch_result_serialize(const ch_result* r, ch_geometry_format format, int precision, char** out) {
  return guarded([&] {
    require(r && out, "null argument");
    const int prec = precision <= 0 ? kDefaultPrecision : precision;
    *out = dup_string(serialize(r->result.multipolygon, *r->points, to_format(format), prec));
  });
}

ch_status ch_result_report_json(const ch_result* r, char** out) {
  return guarded([&] {
    require(r && out, "null argument");
    *out = dup_string(report_json(r->result.report));
  });
}

ch_status ch_result_validate(const ch_result* r, int* all_valid) {
  return guarded([&] {
    require(r && all_valid, "null argument");
    bool ok = true;
    for (const Polygon& p : r->result.multipolygon.polygons) ok = ok && validate_polygon(p, *r->points).is_valid;
    *all_valid = ok ? 1 : 0;
  });
}

void ch_result_free(ch_result* r) { delete r; }

ch_status ch_geometry_parse(const char* text, size_t len, ch_geometry_format format, ch_geometry** out) {
  return guarded([&] {
    require(out && (text || len == 0), "null argument");
    const std::string_view sv(text ? text : "", len);
    const GeometryFormat fmt = to_format(format);
    require(fmt != GeometryFormat::Svg, "geometry input must be WKT or GeoJSON");
    *out = new ch_geometry{fmt == GeometryFormat::Wkt ? parse_geometry_wkt(sv) : parse_geometry_geojson(sv)};
  });
}

ch_status ch_geometry_read(const char* path, ch_geometry_format format, ch_geometry** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new ch_geometry{read_geometry(path, to_format(format))};
  });
}

size_t ch_geometry_polygon_count(const ch_geometry* g) {
  return g ? g->doc.multipolygon.polygons.size() : 0;
}

ch_status ch_geometry_validate(const ch_geometry* g, int* all_valid, char** report_json) {
  return guarded([&] {
    require(g && all_valid, "null argument");
    nlohmann::json polys = nlohmann::json::array();
    bool ok = true;
    for (const Polygon& p : g->doc.multipolygon.polygons) {
      const ValidityReport rep = validate_polygon(p, g->doc.points);
      ok = ok && rep.is_valid;
      nlohmann::json violations = nlohmann::json::array();
      for (const Violation& v : rep.violations) {
        violations.push_back({{"ring", v.ring}, {"kind", std::string(to_string(v.kind))}});
      }
      nlohmann::json entry = {{"valid", rep.is_valid}, {"violations", violations}};
      try {
        entry["convexity"] = convexity(p, g->doc.points);
      } catch (const Error&) {
        entry["convexity"] = nullptr;
      }
      polys.push_back(std::move(entry));
    }
    *all_valid = ok ? 1 : 0;
    if (report_json) *report_json = dup_string(nlohmann::json{{"valid", ok}, {"polygons", polys}}.dump());
  });
}

void ch_geometry_free(ch_geometry* g) { delete g; }

ch_status ch_benchmark_run(const char* suite_path, size_t reps, uint64_t seed, char** csv_out) {
  return guarded([&] {
    require(suite_path && csv_out, "null argument");
    const BenchmarkSuite suite = read_benchmark_suite(suite_path);
    *csv_out = dup_string(benchmark_csv(run_benchmark(suite, reps, seed)));
  });
}

const char* ch_benchmark_csv_header(void) {
  static const std::string header(kBenchmarkCsvHeader);
  return header.c_str();
}

}  // extern "C"
