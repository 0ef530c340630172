#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "geom.hpp"

namespace concavehull {

enum class ViolationKind {
  TooShort,
  DegenerateEdge,
  SelfIntersection,
  BadWinding,
  HoleOutsideShell,
  HoleInHole,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  std::size_t ring;  // 0 = shell, i = hole i-1
  ViolationKind kind;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidityReport {
  bool is_valid = true;
  std::vector<Violation> violations;

  bool has(ViolationKind kind) const;
};

/// OGC-style audit of a single polygon: ring length, zero-length edges, ring
/// simplicity, shell counterclockwise and holes clockwise, holes inside the
/// shell and not inside one another. Distinct rings may touch at points but
/// must not cross or share a segment.
ValidityReport validate_polygon(const Polygon& p, const PointSet& ps);

enum class Location { Outside, Boundary, Inside };

/// Exact crossing-number classification of `pt` against a closed ring.
Location locate_in_ring(const Point& pt, const LinearRing& ring, const PointSet& ps);

/// Shell minus holes; points on any ring count as inside.
bool point_in_polygon(const Point& pt, const Polygon& p, const PointSet& ps);

/// Membership index for repeated queries against a valid multipolygon. Ring
/// edges are bucketed in horizontal slabs; a query only scans the slab that
/// holds its y. Agrees with point_in_polygon on valid input.
class MultiPolygonLocator {
 public:
  MultiPolygonLocator(const MultiPolygon& mp, const PointSet& ps);

  bool contains(const Point& pt) const;
  const BoundingBox& bounds() const { return bounds_; }

 private:
  struct Edge {
    Point a;
    Point b;
  };
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> slab_start_;
  std::vector<std::uint32_t> slab_edges_;
  BoundingBox bounds_;
  double slab_height_ = 0.0;
};

/// Area of the shell over the area of the convex hull of its vertices. Holes
/// are ignored. Throws Error(DegenerateInput) for a degenerate hull.
double convexity(const Polygon& p, const PointSet& ps);

struct ErrorEstimate {
  double l2_error = 0.0;
  std::size_t samples_used = 0;
  std::uint64_t seed = 0;
};

/// Monte-Carlo estimate of area(GT xor CS) / area(CS): uniform samples over the
/// joint bounding box, both areas counted on the same sample stream.
/// Throws Error(InvalidArgument) when no sample lands in CS or n_samples == 0.
ErrorEstimate l2_error(const MultiPolygon& gt, const MultiPolygon& cs, const PointSet& ps_gt,
                       const PointSet& ps_cs, std::size_t n_samples, std::uint64_t seed);

/// Alpha heuristic 2 / p_d with p_d = n / area(bounding box). The formula is
/// applied as is: its result carries area units, so it only suits data whose
/// point spacing is of order one length unit and scales with the square of a
/// coordinate rescaling. Calibrate before relying on it.
double suggest_alpha(const PointSet& ps);

/// Uniform generator of doubles in [0, 1) from a 64-bit engine, independent of
/// the standard library's distribution implementations.
double unit_uniform(std::uint64_t bits);

BoundingBox ring_bounds(const LinearRing& ring, const PointSet& ps);
BoundingBox polygon_bounds(const MultiPolygon& mp, const PointSet& ps);

}  // namespace concavehull
