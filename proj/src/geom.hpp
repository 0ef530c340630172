#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace concavehull {

using PointIndex = std::uint32_t;
using HalfEdgeId = std::uint32_t;
using TriangleId = std::uint32_t;

inline constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

inline constexpr Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }

struct BoundingBox {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  double max_y = -std::numeric_limits<double>::infinity();

  void extend(const Point& p) {
    if (p.x < min_x) min_x = p.x;
    if (p.y < min_y) min_y = p.y;
    if (p.x > max_x) max_x = p.x;
    if (p.y > max_y) max_y = p.y;
  }
  void extend(const BoundingBox& o) {
    if (o.empty()) return;
    extend(Point{o.min_x, o.min_y});
    extend(Point{o.max_x, o.max_y});
  }
  bool empty() const { return min_x > max_x; }
  double width() const { return empty() ? 0.0 : max_x - min_x; }
  double height() const { return empty() ? 0.0 : max_y - min_y; }
  double area() const { return width() * height(); }
};

// Immutable array of finite, pairwise distinct points. Indices are stable
// for the lifetime of the set.
class PointSet {
 public:
  PointSet() = default;

  // Throws Error(InvalidArgument) on a non-finite coordinate or a duplicate
  // point (exact coordinate equality, -0 == +0). The message names the
  // offending index.
  explicit PointSet(std::vector<Point> points);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Point& operator[](PointIndex i) const { return points_[i]; }
  std::span<const Point> points() const { return points_; }
  BoundingBox bounds() const;

 private:
  std::vector<Point> points_;
};

// Closed ring of point indices stored open: the first index is not repeated
// at the end.
struct LinearRing {
  std::vector<PointIndex> indices;

  std::size_t size() const { return indices.size(); }
  friend bool operator==(const LinearRing&, const LinearRing&) = default;
};

struct Polygon {
  LinearRing shell;
  std::vector<LinearRing> holes;
};

struct MultiPolygon {
  std::vector<Polygon> polygons;

  bool empty() const { return polygons.empty(); }
};

// Shoelace area of the closed ring; positive for counterclockwise winding.
double signed_area(const LinearRing& ring, const PointSet& ps);

LinearRing reversed(const LinearRing& ring);

// Squared circumradius. Degenerate (collinear) triangles return +infinity.
double circumradius_sq(const Point& a, const Point& b, const Point& c);

// Counterclockwise rotation in [0, 2pi) carrying the direction of `ref` onto
// the direction of `cand`. Throws Error(InvalidArgument) on a zero vector.
double ccw_angle(const Vec2& ref, const Vec2& cand);

// Counterclockwise hull of the extreme points (collinear boundary points are
// dropped). Throws Error(DegenerateInput) for fewer than 3 points or an
// all-collinear set.
LinearRing convex_hull(const PointSet& ps);
LinearRing convex_hull(const PointSet& ps, std::span<const PointIndex> subset);

}  // namespace concavehull
