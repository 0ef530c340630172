#include "benchmark.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "errors.hpp"
#include "io.hpp"
#include "metrics.hpp"
#include "polygon_extract.hpp"

namespace concavehull {

using nlohmann::json;

namespace {

std::size_t positive_size(const json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() <= 0) {
    fail(ErrorCode::InvalidArgument, what + " must be a positive integer");
  }
  return j.get<std::size_t>();
}

double positive_real(const json& j, const std::string& what) {
  if (!j.is_number() || !(j.get<double>() > 0.0) || !std::isfinite(j.get<double>())) {
    fail(ErrorCode::InvalidArgument, what + " must be a positive number");
  }
  return j.get<double>();
}

BenchmarkCase parse_case(const json& c, std::size_t index, const std::filesystem::path& base_dir) {
  const std::string where = "case " + std::to_string(index);
  if (!c.is_object()) fail(ErrorCode::InvalidArgument, where + " must be an object");
  BenchmarkCase bc;
  bc.name = c.value("name", where);

  if (c.contains("generator") == c.contains("fixture")) {
    fail(ErrorCode::InvalidArgument, where + ": give exactly one of generator or fixture");
  }
  if (c.contains("generator")) {
    const json& g = c["generator"];
    GeneratorSpec spec;
    if (g.contains("vertices")) spec.vertices = positive_size(g["vertices"], where + " vertices");
    if (g.contains("holes")) {
      if (!g["holes"].is_number_integer() || g["holes"].get<std::int64_t>() < 0) {
        fail(ErrorCode::InvalidArgument, where + " holes must be a nonnegative integer");
      }
      spec.holes = g["holes"].get<std::size_t>();
    }
    if (g.contains("seed")) spec.seed = g["seed"].get<std::uint64_t>();
    if (g.contains("radius")) spec.options.radius = positive_real(g["radius"], where + " radius");
    if (g.contains("min_radius_fraction")) {
      spec.options.min_radius_fraction = positive_real(g["min_radius_fraction"], where + " min_radius_fraction");
    }
    bc.source = spec;
  } else {
    std::filesystem::path p = c["fixture"].get<std::string>();
    bc.source = p.is_absolute() ? p : base_dir / p;
  }

  if (!c.contains("n_points")) fail(ErrorCode::InvalidArgument, where + ": missing n_points");
  const json& n = c["n_points"];
  if (n.is_array()) {
    for (const json& v : n) bc.n_points.push_back(positive_size(v, where + " n_points"));
  } else {
    bc.n_points.push_back(positive_size(n, where + " n_points"));
  }
  if (bc.n_points.empty()) fail(ErrorCode::InvalidArgument, where + ": n_points is empty");

  if (c.contains("alpha")) {
    if (c["alpha"].is_string() && c["alpha"].get<std::string>() == "auto") {
      bc.auto_alpha = true;
    } else {
      bc.alpha = positive_real(c["alpha"], where + " alpha");
    }
  }
  if (c.contains("lmax")) bc.l_max = positive_real(c["lmax"], where + " lmax");
  if (!bc.alpha && !bc.auto_alpha && !bc.l_max) {
    fail(ErrorCode::InvalidArgument, where + ": needs alpha (number or \"auto\") or lmax");
  }
  if (c.contains("min_region_size")) {
    bc.min_region_size = positive_size(c["min_region_size"], where + " min_region_size");
  }
  return bc;
}

struct Stats {
  double mean = 0.0;
  double std = 0.0;
};

Stats stats(const std::vector<double>& v) {
  Stats s;
  for (double x : v) s.mean += x;
  s.mean /= static_cast<double>(v.size());
  if (v.size() > 1) {
    double ss = 0.0;
    for (double x : v) ss += (x - s.mean) * (x - s.mean);
    s.std = std::sqrt(ss / static_cast<double>(v.size() - 1));
  }
  return s;
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9E3779B97F4A7C15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

}  // namespace

BenchmarkSuite parse_benchmark_suite(std::string_view text, const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(ErrorCode::Parse, std::string("benchmark suite: ") + e.what());
  }
  BenchmarkSuite suite;
  try {
    if (!doc.is_object() || !doc.contains("cases") || !doc["cases"].is_array()) {
      fail(ErrorCode::InvalidArgument, "benchmark suite needs a \"cases\" array");
    }
    if (doc.contains("error_samples")) suite.error_samples = positive_size(doc["error_samples"], "error_samples");
    for (std::size_t i = 0; i < doc["cases"].size(); ++i) {
      suite.cases.push_back(parse_case(doc["cases"][i], i, base_dir));
    }
  } catch (const json::exception& e) {
    fail(ErrorCode::InvalidArgument, std::string("benchmark suite: ") + e.what());
  }
  return suite;
}

BenchmarkSuite read_benchmark_suite(const std::filesystem::path& path) {
  return parse_benchmark_suite(read_file(path), path.parent_path());
}

std::vector<BenchmarkRow> run_benchmark(const BenchmarkSuite& suite, std::size_t reps,
                                        std::uint64_t seed) {
  if (reps == 0) fail(ErrorCode::InvalidArgument, "reps must be positive");
  std::vector<BenchmarkRow> rows;
  for (std::size_t ci = 0; ci < suite.cases.size(); ++ci) {
    const BenchmarkCase& bc = suite.cases[ci];
    MultiPolygon truth;
    PointSet truth_points;
    if (const auto* g = std::get_if<GeneratorSpec>(&bc.source)) {
      PolygonFixture fx = generate_random_polygon(g->vertices, g->holes, g->seed, g->options);
      truth.polygons.push_back(std::move(fx.polygon));
      truth_points = std::move(fx.points);
    } else {
      const auto& path = std::get<std::filesystem::path>(bc.source);
      const std::string ext = path.extension().string();
      const GeometryFormat fmt =
          (ext == ".json" || ext == ".geojson") ? GeometryFormat::GeoJson : GeometryFormat::Wkt;
      GeometryDocument doc = read_geometry(path, fmt);
      if (doc.multipolygon.polygons.size() != 1) {
        fail(ErrorCode::InvalidArgument, "fixture '" + path.string() + "' must hold exactly one polygon");
      }
      truth = std::move(doc.multipolygon);
      truth_points = std::move(doc.points);
    }

    for (std::size_t n : bc.n_points) {
      const std::uint64_t case_seed = mix(seed, mix(ci, n));
      const PointSet ps = sample_points_in_polygon(truth.polygons[0], truth_points, n, case_seed);
      FilterConfig cfg;
      cfg.alpha = bc.auto_alpha ? std::optional<double>(suggest_alpha(ps)) : bc.alpha;
      cfg.l_max = bc.l_max;
      cfg.min_region_size = bc.min_region_size;

      std::vector<double> tri, shape, poly, total;
      ExtractionResult last;
      for (std::size_t r = 0; r < reps; ++r) {
        last = extract_multipolygon(ps, cfg);
        tri.push_back(last.report.triangulation_ms);
        shape.push_back(last.report.shape_extraction_ms);
        poly.push_back(last.report.polygon_extraction_ms);
        total.push_back(last.report.total_ms);
      }

      BenchmarkRow row;
      row.case_name = bc.name;
      row.n_points = n;
      row.reps = reps;
      const Stats st = stats(tri), ss = stats(shape), sp = stats(poly), s_total = stats(total);
      row.triangulation_ms_mean = st.mean;
      row.triangulation_ms_std = st.std;
      row.shape_ms_mean = ss.mean;
      row.shape_ms_std = ss.std;
      row.polygon_ms_mean = sp.mean;
      row.polygon_ms_std = sp.std;
      row.total_ms_mean = s_total.mean;
      row.total_ms_std = s_total.std;

      row.valid = true;
      for (const Polygon& p : last.multipolygon.polygons) {
        row.valid = row.valid && validate_polygon(p, ps).is_valid;
      }
      row.l2_error = last.multipolygon.empty()
                         ? 1.0
                         : l2_error(truth, last.multipolygon, truth_points, ps, suite.error_samples,
                                    mix(case_seed, 1))
                               .l2_error;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string benchmark_csv(const std::vector<BenchmarkRow>& rows) {
  std::string out(kBenchmarkCsvHeader);
  out += '\n';
  for (const BenchmarkRow& r : rows) {
    std::string name = r.case_name;
    if (name.find_first_of(",\"\n") != std::string::npos) {
      std::string quoted = "\"";
      for (char c : name) {
        if (c == '"') quoted += '"';
        quoted += c;
      }
      name = quoted + "\"";
    }
    out += name + ',' + std::to_string(r.n_points) + ',' + std::to_string(r.reps);
    for (double v : {r.triangulation_ms_mean, r.triangulation_ms_std, r.shape_ms_mean, r.shape_ms_std,
                     r.polygon_ms_mean, r.polygon_ms_std, r.total_ms_mean, r.total_ms_std}) {
      out += ',' + fixed(v, 3);
    }
    out += ',' + fixed(r.l2_error, 6) + ',' + (r.valid ? "true" : "false") + '\n';
  }
  return out;
}

}  // namespace concavehull
