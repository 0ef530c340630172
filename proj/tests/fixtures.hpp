#pragma once

#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "generators.hpp"
#include "geom.hpp"

namespace fixtures {

using concavehull::LinearRing;
using concavehull::Point;
using concavehull::PointSet;
using concavehull::Polygon;

inline PointSet random_points(std::size_t n, std::uint64_t seed, double lo = 0.0, double hi = 1.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<Point> pts;
  std::set<std::pair<double, double>> seen;
  while (pts.size() < n) {
    const Point p{u(rng), u(rng)};
    if (seen.insert({p.x, p.y}).second) pts.push_back(p);
  }
  return PointSet(std::move(pts));
}

// Integer lattice points, row by row, plus an optional per-point jitter.
inline PointSet grid(int nx, int ny, double jitter = 0.0, std::uint64_t seed = 1) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-jitter, jitter);
  std::vector<Point> pts;
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      pts.push_back({i + (jitter > 0 ? u(rng) : 0.0), j + (jitter > 0 ? u(rng) : 0.0)});
    }
  }
  return PointSet(std::move(pts));
}

// Regular polygon with `n` vertices, counterclockwise when ccw is set.
inline std::vector<Point> circle(double cx, double cy, double r, int n, bool ccw, double phase = 0.0) {
  std::vector<Point> out;
  for (int k = 0; k < n; ++k) {
    const double t = phase + (ccw ? 1.0 : -1.0) * 2.0 * std::numbers::pi * k / n;
    out.push_back({cx + r * std::cos(t), cy + r * std::sin(t)});
  }
  return out;
}

struct Shape {
  Polygon polygon;
  PointSet points;
};

inline Shape make_shape(const std::vector<std::vector<Point>>& rings) {
  Shape s;
  std::vector<Point> pts;
  std::map<std::pair<double, double>, concavehull::PointIndex> index;  // rings may share vertices
  for (std::size_t r = 0; r < rings.size(); ++r) {
    LinearRing ring;
    for (const Point& p : rings[r]) {
      const auto [it, fresh] = index.try_emplace({p.x, p.y}, static_cast<concavehull::PointIndex>(pts.size()));
      if (fresh) pts.push_back(p);
      ring.indices.push_back(it->second);
    }
    if (r == 0) {
      s.polygon.shell = ring;
    } else {
      s.polygon.holes.push_back(ring);
    }
  }
  s.points = PointSet(std::move(pts));
  return s;
}

inline Shape unit_square() { return make_shape({{{0, 0}, {1, 0}, {1, 1}, {0, 1}}}); }

// Annulus between radii r_in and r_out, circles approximated finely enough
// that the polygon area is within 1e-4 relative of the analytic value.
inline Shape annulus(double r_in = 25.0, double r_out = 50.0, int n = 720) {
  return make_shape({circle(0, 0, r_out, n, true), circle(0, 0, r_in, n, false)});
}

inline Shape square_with_void(double side = 100.0, double hole = 40.0) {
  const double a = (side - hole) / 2.0, b = a + hole;
  return make_shape({{{0, 0}, {side, 0}, {side, side}, {0, side}}, {{a, a}, {a, b}, {b, b}, {b, a}}});
}

}  // namespace fixtures
