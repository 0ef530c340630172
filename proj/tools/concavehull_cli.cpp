#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "concavehull/concavehull.h"

namespace {

enum ExitCode : int {
  kOk = 0,
  kParseFailure = 1,
  kBadParameters = 2,
  kExtractionFailure = 3,
  kInvalidGeometry = 4,
};

int exit_code_for(ch_status s) {
  switch (s) {
    case CH_OK: return kOk;
    case CH_ERR_PARSE:
    case CH_ERR_IO: return kParseFailure;
    case CH_ERR_INVALID_ARGUMENT: return kBadParameters;
    default: return kExtractionFailure;
  }
}

struct Failure {
  int code;
};

void check(ch_status s, const std::string& context) {
  if (s == CH_OK) return;
  std::cerr << "error: " << context << ": " << ch_last_error() << " (" << ch_status_string(s) << ")\n";
  throw Failure{exit_code_for(s)};
}

[[noreturn]] void usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  throw Failure{kBadParameters};
}

struct CString {
  char* p = nullptr;
  ~CString() { ch_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

struct PointSetFree {
  void operator()(ch_point_set* p) const { ch_point_set_free(p); }
};
struct ResultFree {
  void operator()(ch_result* p) const { ch_result_free(p); }
};
struct GeometryFree {
  void operator()(ch_geometry* p) const { ch_geometry_free(p); }
};

void write_output(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << data)) {
    std::cerr << "error: cannot write '" << path << "'\n";
    throw Failure{kParseFailure};
  }
}

bool has_json_extension(const std::string& path) {
  const std::string ext = std::filesystem::path(path).extension().string();
  return ext == ".json" || ext == ".geojson";
}

struct ExtractArgs {
  std::string input;
  std::string format;
  std::optional<double> alpha;
  std::optional<double> lmax;
  bool auto_alpha = false;
  std::size_t min_region_size = 1;
  std::string out;
  std::string out_format = "wkt";
  std::string svg;
  std::string report;
  std::string dump_mesh;
  int precision = 9;
};

ch_geometry_format geometry_format(const std::string& name) {
  if (name == "wkt") return CH_GEOMETRY_WKT;
  if (name == "geojson") return CH_GEOMETRY_GEOJSON;
  if (name == "svg") return CH_GEOMETRY_SVG;
  usage_error("unknown geometry format '" + name + "'");
}

int run_extract(ExtractArgs a) {
  ch_point_format in_fmt = has_json_extension(a.input) ? CH_POINTS_GEOJSON : CH_POINTS_CSV;
  if (a.format == "csv") {
    in_fmt = CH_POINTS_CSV;
  } else if (a.format == "geojson") {
    in_fmt = CH_POINTS_GEOJSON;
  } else if (a.format == "wkt" || a.format == "svg") {
    // Points cannot be WKT or SVG; the value names the output format.
    a.out_format = a.format;
  } else if (!a.format.empty()) {
    usage_error("unknown --format '" + a.format + "'");
  }
  const ch_geometry_format out_fmt = geometry_format(a.out_format);

  if (a.auto_alpha && a.alpha) usage_error("--alpha and --auto-alpha are mutually exclusive");
  if (!a.auto_alpha && !a.alpha && !a.lmax) usage_error("give --alpha, --lmax or --auto-alpha");
  if (a.precision < 1 || a.precision > 17) usage_error("--precision must be in [1, 17]");

  ch_point_set* raw_ps = nullptr;
  check(ch_point_set_read(a.input.c_str(), in_fmt, &raw_ps), "reading '" + a.input + "'");
  const std::unique_ptr<ch_point_set, PointSetFree> ps(raw_ps);

  if (!a.dump_mesh.empty()) {
    CString dump;
    check(ch_triangulation_dump(ps.get(), &dump.p), "triangulation");
    write_output(a.dump_mesh, dump.str());
  }

  ch_filter_config cfg;
  ch_filter_config_init(&cfg);
  if (a.auto_alpha) {
    double alpha = 0.0;
    check(ch_suggest_alpha(ps.get(), &alpha), "suggesting alpha");
    a.alpha = alpha;
  }
  if (a.alpha) {
    cfg.has_alpha = 1;
    cfg.alpha = *a.alpha;
  }
  if (a.lmax) {
    cfg.has_lmax = 1;
    cfg.lmax = *a.lmax;
  }
  cfg.min_region_size = a.min_region_size;

  ch_result* raw_result = nullptr;
  check(ch_extract(ps.get(), &cfg, &raw_result), "extraction");
  const std::unique_ptr<ch_result, ResultFree> result(raw_result);

  CString geometry;
  check(ch_result_serialize(result.get(), out_fmt, a.precision, &geometry.p), "serialization");
  if (a.out.empty()) {
    std::cout << geometry.str();
    if (out_fmt != CH_GEOMETRY_SVG) std::cout << '\n';
  } else {
    write_output(a.out, geometry.str() + (out_fmt == CH_GEOMETRY_SVG ? "" : "\n"));
  }
  if (!a.svg.empty()) {
    CString svg;
    check(ch_result_serialize(result.get(), CH_GEOMETRY_SVG, a.precision, &svg.p), "svg rendering");
    write_output(a.svg, svg.str());
  }

  CString report;
  check(ch_result_report_json(result.get(), &report.p), "report");
  if (!a.report.empty()) write_output(a.report, report.str() + "\n");
  std::cout << report.str() << std::endl;
  return kOk;
}

int run_validate(const std::string& input, const std::string& format) {
  ch_geometry_format fmt = has_json_extension(input) ? CH_GEOMETRY_GEOJSON : CH_GEOMETRY_WKT;
  if (format == "wkt") {
    fmt = CH_GEOMETRY_WKT;
  } else if (format == "geojson") {
    fmt = CH_GEOMETRY_GEOJSON;
  } else if (!format.empty()) {
    usage_error("validate reads wkt or geojson, not '" + format + "'");
  }
  ch_geometry* raw = nullptr;
  check(ch_geometry_read(input.c_str(), fmt, &raw), "reading '" + input + "'");
  const std::unique_ptr<ch_geometry, GeometryFree> geometry(raw);
  int valid = 0;
  CString report;
  check(ch_geometry_validate(geometry.get(), &valid, &report.p), "validation");
  std::cout << report.str() << std::endl;
  return valid ? kOk : kInvalidGeometry;
}

int run_benchmark(const std::string& suite, std::size_t reps, std::uint64_t seed, const std::string& report) {
  CString csv;
  check(ch_benchmark_run(suite.c_str(), reps, seed, &csv.p), "benchmark");
  if (report.empty()) {
    std::cout << csv.str();
  } else {
    write_output(report, csv.str());
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Concave hull extraction: point sets to polygons with holes"};
  app.require_subcommand(1);

  ExtractArgs ex;
  CLI::App* extract = app.add_subcommand("extract", "Extract polygons from a point file");
  extract->add_option("--input", ex.input, "Point file (CSV or GeoJSON)")->required();
  extract->add_option("--format", ex.format, "Input format: csv or geojson (default from extension)");
  extract->add_option("--alpha", ex.alpha, "Keep triangles with circumradius <= alpha");
  extract->add_option("--lmax", ex.lmax, "Keep triangles whose longest edge <= lmax");
  extract->add_flag("--auto-alpha", ex.auto_alpha, "Use the density-based alpha suggestion");
  extract->add_option("--min-region-size", ex.min_region_size, "Drop regions with fewer triangles");
  extract->add_option("--out", ex.out, "Geometry output path (default stdout)");
  extract->add_option("--out-format", ex.out_format, "wkt, geojson or svg");
  extract->add_option("--svg", ex.svg, "Also render an SVG to this path");
  extract->add_option("--report", ex.report, "Also write the report JSON to this path");
  extract->add_option("--precision", ex.precision, "Significant digits for coordinates");
  extract->add_option("--dump-mesh", ex.dump_mesh, "Write the triangulation half-edge table");

  std::string v_input, v_format;
  CLI::App* validate = app.add_subcommand("validate", "Audit polygon validity of a WKT or GeoJSON file");
  validate->add_option("--input", v_input, "Geometry file")->required();
  validate->add_option("--format", v_format, "wkt or geojson (default from extension)");

  std::string b_input, b_report;
  std::size_t b_reps = 10;
  std::uint64_t b_seed = 0;
  CLI::App* bench = app.add_subcommand("benchmark", "Run a benchmark suite and write a CSV report");
  bench->add_option("--input", b_input, "Suite configuration (JSON)")->required();
  bench->add_option("--reps", b_reps, "Repetitions per case");
  bench->add_option("--seed", b_seed, "Seed for sampling and error estimation");
  bench->add_option("--report", b_report, "CSV report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadParameters;
  }

  try {
    if (extract->parsed()) return run_extract(ex);
    if (validate->parsed()) return run_validate(v_input, v_format);
    if (bench->parsed()) {
      if (b_reps == 0) usage_error("--reps must be positive");
      return run_benchmark(b_input, b_reps, b_seed, b_report);
    }
  } catch (const Failure& f) {
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExtractionFailure;
  }
  return kBadParameters;
}
