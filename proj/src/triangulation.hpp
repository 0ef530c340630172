#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "geom.hpp"

namespace concavehull {

/// Delaunay triangulation stored as flat half-edge arrays.
///
/// Triangle t owns half-edges 3t, 3t+1, 3t+2, listed counterclockwise.
/// `triangles[he]` is the point index the half-edge starts at and
/// `halfedges[he]` the opposite half-edge, or kNone on the convex hull.
class HalfEdgeMesh {
 public:
  HalfEdgeMesh(const PointSet& points, std::vector<PointIndex> triangles,
               std::vector<HalfEdgeId> halfedges);

  const PointSet& points() const { return *points_; }
  std::span<const PointIndex> triangles() const { return triangles_; }
  std::span<const HalfEdgeId> halfedges() const { return halfedges_; }

  std::size_t num_halfedges() const { return triangles_.size(); }
  std::size_t num_triangles() const { return triangles_.size() / 3; }

  PointIndex origin(HalfEdgeId he) const { return triangles_[he]; }
  PointIndex destination(HalfEdgeId he) const;
  HalfEdgeId opposite(HalfEdgeId he) const { return halfedges_[he]; }
  const Point& point(PointIndex pi) const { return (*points_)[pi]; }

 private:
  const PointSet* points_;
  std::vector<PointIndex> triangles_;
  std::vector<HalfEdgeId> halfedges_;
};

constexpr TriangleId triangle_of(HalfEdgeId he) { return he / 3; }

constexpr HalfEdgeId next_halfedge(HalfEdgeId he) { return (he % 3 == 2) ? he - 2 : he + 1; }

constexpr HalfEdgeId prev_halfedge(HalfEdgeId he) { return (he % 3 == 0) ? he + 2 : he - 1; }

/// Throws Error(TooFewPoints) for fewer than 3 points and
/// Error(DegenerateInput) when every point is collinear. The mesh keeps a
/// pointer to `ps`, which must outlive it.
HalfEdgeMesh triangulate(const PointSet& ps);

/// One `he, triangles[he], halfedges[he]` line per half-edge; kNone prints as -1.
void write_debug_dump(const HalfEdgeMesh& mesh, std::ostream& out);

}  // namespace concavehull
