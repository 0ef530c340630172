#ifndef CONCAVEHULL_CONCAVEHULL_H
#define CONCAVEHULL_CONCAVEHULL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(CONCAVEHULL_BUILD)
#    define CH_API __declspec(dllexport)
#  else
#    define CH_API __declspec(dllimport)
#  endif
#else
#  define CH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ch_status {
  CH_OK = 0,
  CH_ERR_INVALID_ARGUMENT = 1,
  CH_ERR_PARSE = 2,
  CH_ERR_TOO_FEW_POINTS = 3,
  CH_ERR_DEGENERATE_INPUT = 4,
  CH_ERR_CORRUPT_BOUNDARY = 5,
  CH_ERR_IO = 6,
  CH_ERR_INTERNAL = 7
} ch_status;

typedef enum ch_point_format { CH_POINTS_CSV = 0, CH_POINTS_GEOJSON = 1 } ch_point_format;

typedef enum ch_geometry_format {
  CH_GEOMETRY_WKT = 0,
  CH_GEOMETRY_GEOJSON = 1,
  CH_GEOMETRY_SVG = 2
} ch_geometry_format;

typedef struct ch_point_set ch_point_set;
typedef struct ch_result ch_result;
typedef struct ch_geometry ch_geometry;

/* A criterion is active when its has_ flag is nonzero. */
typedef struct ch_filter_config {
  int has_alpha;
  double alpha;
  int has_lmax;
  double lmax;
  size_t min_region_size;
} ch_filter_config;

typedef struct ch_report {
  double triangulation_ms;
  double shape_extraction_ms;
  double polygon_extraction_ms;
  double total_ms;
  size_t n_points;
  size_t n_triangles;
  size_t n_retained_triangles;
  size_t n_regions;
  size_t n_polygons;
  size_t n_holes;
} ch_report;

/* Every function returning ch_status stores a message for ch_last_error on
 * failure. Messages are per thread. Strings returned through char** out
 * parameters are released with ch_string_free. */
CH_API const char* ch_last_error(void);
CH_API const char* ch_status_string(ch_status status);
CH_API void ch_string_free(char* s);

CH_API void ch_filter_config_init(ch_filter_config* cfg);

/* xy holds n interleaved x, y pairs. */
CH_API ch_status ch_point_set_create(const double* xy, size_t n, ch_point_set** out);
CH_API ch_status ch_point_set_parse(const char* text, size_t len, ch_point_format format,
                                    ch_point_set** out);
CH_API ch_status ch_point_set_read(const char* path, ch_point_format format, ch_point_set** out);
CH_API size_t ch_point_set_size(const ch_point_set* ps);
CH_API ch_status ch_point_set_point(const ch_point_set* ps, size_t i, double* x, double* y);
CH_API void ch_point_set_free(ch_point_set* ps);

CH_API ch_status ch_suggest_alpha(const ch_point_set* ps, double* out);

/* One "he, origin, opposite" line per half-edge, -1 for a missing opposite. */
CH_API ch_status ch_triangulation_dump(const ch_point_set* ps, char** out);

/* The result keeps its own reference to the points; ps may be freed first. */
CH_API ch_status ch_extract(const ch_point_set* ps, const ch_filter_config* cfg, ch_result** out);
CH_API ch_status ch_result_report(const ch_result* r, ch_report* out);
CH_API size_t ch_result_polygon_count(const ch_result* r);
CH_API size_t ch_result_hole_count(const ch_result* r, size_t polygon);
/* ring 0 is the shell, ring k the (k-1)th hole. Indices refer to the input
 * point set; the ring is open (first index not repeated). */
CH_API ch_status ch_result_ring(const ch_result* r, size_t polygon, size_t ring,
                                const uint32_t** indices, size_t* count);
/* precision <= 0 selects the default of 9 significant digits. */
CH_API ch_status ch_result_serialize(const ch_result* r, ch_geometry_format format, int precision,
                                     char** out);
CH_API ch_status ch_result_report_json(const ch_result* r, char** out);
CH_API ch_status ch_result_validate(const ch_result* r, int* all_valid);
CH_API void ch_result_free(ch_result* r);

CH_API ch_status ch_geometry_parse(const char* text, size_t len, ch_geometry_format format,
                                   ch_geometry** out);
CH_API ch_status ch_geometry_read(const char* path, ch_geometry_format format, ch_geometry** out);
CH_API size_t ch_geometry_polygon_count(const ch_geometry* g);
/* report_json: {"valid": bool, "polygons": [{"valid": bool, "convexity": x,
 * "violations": [{"ring": k, "kind": "..."}]}]}. May be NULL. */
CH_API ch_status ch_geometry_validate(const ch_geometry* g, int* all_valid, char** report_json);
CH_API void ch_geometry_free(ch_geometry* g);

/* Runs a benchmark suite file and returns the CSV report. */
CH_API ch_status ch_benchmark_run(const char* suite_path, size_t reps, uint64_t seed, char** csv_out);
CH_API const char* ch_benchmark_csv_header(void);

#ifdef __cplusplus
}
#endif

#endif
