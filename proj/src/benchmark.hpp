#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "generators.hpp"

namespace concavehull {

struct GeneratorSpec {
  std::size_t vertices = 16;
  std::size_t holes = 0;
  std::uint64_t seed = 0;
  GeneratorOptions options;
};

struct BenchmarkCase {
  std::string name;
  // Ground truth: a generated polygon or a WKT/GeoJSON polygon file.
  std::variant<GeneratorSpec, std::filesystem::path> source;
  std::vector<std::size_t> n_points;
  std::optional<double> alpha;
  bool auto_alpha = false;
  std::optional<double> l_max;
  std::size_t min_region_size = 1;
};

struct BenchmarkSuite {
  std::vector<BenchmarkCase> cases;
  std::size_t error_samples = 100000;
};

struct BenchmarkRow {
  std::string case_name;
  std::size_t n_points = 0;
  std::size_t reps = 0;
  double triangulation_ms_mean = 0.0, triangulation_ms_std = 0.0;
  double shape_ms_mean = 0.0, shape_ms_std = 0.0;
  double polygon_ms_mean = 0.0, polygon_ms_std = 0.0;
  double total_ms_mean = 0.0, total_ms_std = 0.0;
  double l2_error = 0.0;
  bool valid = false;
};

inline constexpr std::string_view kBenchmarkCsvHeader =
    "case,n_points,reps,triangulation_ms_mean,triangulation_ms_std,shape_ms_mean,shape_ms_std,"
    "polygon_ms_mean,polygon_ms_std,total_ms_mean,total_ms_std,l2_error,valid";

/// Suite file layout:
///
///   {"error_samples": 100000,
///    "cases": [{"name": "star", "generator": {"vertices": 24, "holes": 2, "seed": 3,
///               "radius": 50, "min_radius_fraction": 0.4},
///               "n_points": [2000, 4000], "alpha": "auto"},
///              {"name": "ring", "fixture": "annulus.wkt", "n_points": 8000, "lmax": 2.5}]}
///
/// Fixture paths are resolved against `base_dir`. Throws Error(Parse) for
/// malformed JSON and Error(InvalidArgument) for bad values.
BenchmarkSuite parse_benchmark_suite(std::string_view text, const std::filesystem::path& base_dir);
BenchmarkSuite read_benchmark_suite(const std::filesystem::path& path);

/// Runs every case sequentially. Point sampling and error estimation depend
/// only on `seed`, so two runs differ only in their timing columns.
std::vector<BenchmarkRow> run_benchmark(const BenchmarkSuite& suite, std::size_t reps,
                                        std::uint64_t seed);

std::string benchmark_csv(const std::vector<BenchmarkRow>& rows);

}  // namespace concavehull
