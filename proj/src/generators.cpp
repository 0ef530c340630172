#include "generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <unordered_set>

#include "errors.hpp"
#include "metrics.hpp"

namespace concavehull {

namespace {

double segment_distance(const Point& p, const Point& a, const Point& b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len_sq = dx * dx + dy * dy;
  double t = len_sq > 0.0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len_sq : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  const double ex = a.x + t * dx - p.x;
  const double ey = a.y + t * dy - p.y;
  return std::sqrt(ex * ex + ey * ey);
}

struct Circle {
  Point c;
  double r;
};

}  // namespace

PolygonFixture generate_random_polygon(std::size_t n_vertices, std::size_t holes,
                                       std::uint64_t seed, const GeneratorOptions& opts) {
  if (n_vertices < 3) fail(ErrorCode::InvalidArgument, "polygon needs at least 3 vertices");
  if (!(opts.radius > 0.0) || !(opts.min_radius_fraction > 0.0) || opts.min_radius_fraction > 1.0) {
    fail(ErrorCode::InvalidArgument, "invalid generator radius options");
  }
  std::mt19937_64 rng(seed);
  auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * unit_uniform(rng()); };
  constexpr double two_pi = 2.0 * std::numbers::pi;

  for (std::size_t attempt = 0; attempt < 100; ++attempt) {
    std::vector<Point> pts;
    pts.reserve(n_vertices + holes * opts.hole_vertices);
    const double step = two_pi / static_cast<double>(n_vertices);
    for (std::size_t i = 0; i < n_vertices; ++i) {
      const double theta = (static_cast<double>(i) + uniform(0.0, 0.8)) * step;
      const double rad = opts.radius * uniform(opts.min_radius_fraction, 1.0);
      pts.push_back({rad * std::cos(theta), rad * std::sin(theta)});
    }
    // Rescale to a fixed shell area so density-based parameters see one scale.
    double twice_area = 0.0;
    for (std::size_t i = 0; i < n_vertices; ++i) {
      const Point& a = pts[i];
      const Point& b = pts[(i + 1) % n_vertices];
      twice_area += a.x * b.y - b.x * a.y;
    }
    const double k = std::sqrt(std::numbers::pi * opts.radius * opts.radius / twice_area);
    for (Point& p : pts) p = {p.x * k, p.y * k};
    const std::vector<Point> shell(pts.begin(), pts.end());
    auto shell_clearance = [&](const Point& c) {
      double d = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < shell.size(); ++i) {
        d = std::min(d, segment_distance(c, shell[i], shell[(i + 1) % shell.size()]));
      }
      return d;
    };
    auto inside_shell = [&](const Point& c) {
      bool in = false;
      for (std::size_t i = 0, j = shell.size() - 1; i < shell.size(); j = i++) {
        const Point& a = shell[j];
        const Point& b = shell[i];
        if ((a.y > c.y) != (b.y > c.y) &&
            c.x < a.x + (c.y - a.y) * (b.x - a.x) / (b.y - a.y)) {
          in = !in;
        }
      }
      return in;
    };

    std::vector<Circle> placed;
    for (std::size_t h = 0; h < holes; ++h) {
      bool ok = false;
      for (std::size_t tries = 0; tries < opts.max_attempts && !ok; ++tries) {
        const double r = opts.radius * uniform(opts.hole_radius_min, opts.hole_radius_max);
        const double reach = opts.radius * k;
        const Point c{uniform(-reach, reach), uniform(-reach, reach)};
        if (!inside_shell(c) || shell_clearance(c) < 1.25 * r) continue;
        ok = std::all_of(placed.begin(), placed.end(), [&](const Circle& o) {
          return std::hypot(c.x - o.c.x, c.y - o.c.y) > 1.25 * (r + o.r);
        });
        if (ok) placed.push_back({c, r});
      }
      if (!ok) {
        fail(ErrorCode::DegenerateInput,
             "could not place " + std::to_string(holes) + " holes inside the generated shell");
      }
    }

    Polygon poly;
    for (std::size_t i = 0; i < n_vertices; ++i) poly.shell.indices.push_back(static_cast<PointIndex>(i));
    for (const Circle& h : placed) {
      LinearRing ring;
      const double phase = uniform(0.0, two_pi);
      for (std::size_t k = 0; k < opts.hole_vertices; ++k) {
        const double theta = phase - two_pi * static_cast<double>(k) / static_cast<double>(opts.hole_vertices);
        ring.indices.push_back(static_cast<PointIndex>(pts.size()));
        pts.push_back({h.c.x + h.r * std::cos(theta), h.c.y + h.r * std::sin(theta)});
      }
      poly.holes.push_back(std::move(ring));
    }

    PolygonFixture fx{std::move(poly), PointSet(std::move(pts))};
    if (validate_polygon(fx.polygon, fx.points).is_valid) return fx;
  }
  fail(ErrorCode::Internal, "failed to generate a valid polygon");
}

PointSet sample_points_in_polygon(const Polygon& p, const PointSet& ps, std::size_t n,
                                  std::uint64_t seed) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "sample size must be positive");
  MultiPolygon mp;
  mp.polygons.push_back(p);
  const MultiPolygonLocator locator(mp, ps);
  const BoundingBox box = locator.bounds();

  std::mt19937_64 rng(seed);
  std::vector<Point> out;
  out.reserve(n);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(2 * n);
  std::size_t attempts = 0;
  constexpr std::size_t kMinAttempts = 100000;
  constexpr double kMinAcceptance = 1e-4;
  while (out.size() < n) {
    ++attempts;
    if (attempts >= kMinAttempts &&
        static_cast<double>(out.size()) < kMinAcceptance * static_cast<double>(attempts)) {
      fail(ErrorCode::DegenerateInput, "polygon too thin to sample: acceptance rate below 1e-4");
    }
    const Point q{box.min_x + unit_uniform(rng()) * box.width(),
                  box.min_y + unit_uniform(rng()) * box.height()};
    if (!locator.contains(q)) continue;
    const std::uint64_t key = std::hash<double>{}(q.x) * 0x9E3779B97F4A7C15ULL ^ std::hash<double>{}(q.y);
    if (!seen.insert(key).second) {
      const bool duplicate = std::any_of(out.begin(), out.end(), [&](const Point& o) { return o == q; });
      if (duplicate) continue;
    }
    out.push_back(q);
  }
  return PointSet(std::move(out));
}

}  // namespace concavehull
