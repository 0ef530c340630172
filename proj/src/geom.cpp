#include "geom.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>
#include <unordered_map>

#include "errors.hpp"
#include "predicates.hpp"

namespace concavehull {

namespace {

struct PointKeyHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const noexcept {
    std::uint64_t h = k.first * 0x9E3779B97F4A7C15ULL;
    h ^= k.second + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

std::uint64_t coordinate_key(double v) {
  if (v == 0.0) v = 0.0;  // folds -0 onto +0
  return std::bit_cast<std::uint64_t>(v);
}

}  // namespace

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.size() >= kNone) {
    fail(ErrorCode::InvalidArgument, "point set too large");
  }
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, std::size_t, PointKeyHash> seen;
  seen.reserve(points_.size() * 2);
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const Point& p = points_[i];
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      fail(ErrorCode::InvalidArgument, "point " + std::to_string(i) + " has a non-finite coordinate");
    }
    auto [it, inserted] = seen.emplace(std::pair{coordinate_key(p.x), coordinate_key(p.y)}, i);
    if (!inserted) {
      fail(ErrorCode::InvalidArgument, "point " + std::to_string(i) + " duplicates point " +
                                           std::to_string(it->second));
    }
  }
}

BoundingBox PointSet::bounds() const {
  BoundingBox box;
  for (const Point& p : points_) box.extend(p);
  return box;
}

double signed_area(const LinearRing& ring, const PointSet& ps) {
  const auto& idx = ring.indices;
  const std::size_t n = idx.size();
  if (n < 3) return 0.0;
  // Shoelace relative to the first vertex keeps the terms small.
  const Point& o = ps[idx[0]];
  double twice = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const Vec2 a = ps[idx[i]] - o;
    const Vec2 b = ps[idx[i + 1]] - o;
    twice += a.x * b.y - a.y * b.x;
  }
  return 0.5 * twice;
}

LinearRing reversed(const LinearRing& ring) {
  LinearRing out{{ring.indices.rbegin(), ring.indices.rend()}};
  return out;
}

double circumradius_sq(const Point& a, const Point& b, const Point& c) {
  if (orient2d(a, b, c) == Sign::Zero) return std::numeric_limits<double>::infinity();
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double ex = c.x - a.x;
  const double ey = c.y - a.y;
  const double bl = dx * dx + dy * dy;
  const double cl = ex * ex + ey * ey;
  const double d = 0.5 / (dx * ey - dy * ex);
  const double x = (ey * bl - dy * cl) * d;
  const double y = (dx * cl - ex * bl) * d;
  return x * x + y * y;
}

double ccw_angle(const Vec2& ref, const Vec2& cand) {
  if ((ref.x == 0.0 && ref.y == 0.0) || (cand.x == 0.0 && cand.y == 0.0)) {
    fail(ErrorCode::InvalidArgument, "ccw_angle: zero-length vector");
  }
  const double cross = ref.x * cand.y - ref.y * cand.x;
  const double dot = ref.x * cand.x + ref.y * cand.y;
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double a = std::atan2(cross, dot);
  if (a < 0.0) a += two_pi;
  if (a >= two_pi) a = std::nextafter(two_pi, 0.0);
  return a;
}

LinearRing convex_hull(const PointSet& ps, std::span<const PointIndex> subset) {
  std::vector<PointIndex> order(subset.begin(), subset.end());
  std::sort(order.begin(), order.end(), [&](PointIndex i, PointIndex j) {
    const Point& p = ps[i];
    const Point& q = ps[j];
    return p.x < q.x || (p.x == q.x && p.y < q.y);
  });
  order.erase(std::unique(order.begin(), order.end(),
                          [&](PointIndex i, PointIndex j) { return ps[i] == ps[j]; }),
              order.end());
  if (order.size() < 3) fail(ErrorCode::DegenerateInput, "convex hull needs at least 3 points");

  // Andrew's monotone chain; strict left turns only, so collinear points drop out.
  std::vector<PointIndex> hull(2 * order.size());
  std::size_t k = 0;
  for (PointIndex i : order) {
    while (k >= 2 && orient2d(ps[hull[k - 2]], ps[hull[k - 1]], ps[i]) != Sign::Positive) --k;
    hull[k++] = i;
  }
  const std::size_t lower = k + 1;
  for (std::size_t j = order.size() - 1; j-- > 0;) {
    const PointIndex i = order[j];
    while (k >= lower && orient2d(ps[hull[k - 2]], ps[hull[k - 1]], ps[i]) != Sign::Positive) --k;
    hull[k++] = i;
  }
  hull.resize(k - 1);
  if (hull.size() < 3) fail(ErrorCode::DegenerateInput, "convex hull of collinear points");
  return LinearRing{std::move(hull)};
}

LinearRing convex_hull(const PointSet& ps) {
  std::vector<PointIndex> all(ps.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<PointIndex>(i);
  return convex_hull(ps, all);
}

}  // namespace concavehull
