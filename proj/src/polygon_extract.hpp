#pragma once

#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "geom.hpp"
#include "shape.hpp"
#include "triangulation.hpp"

namespace concavehull {

/// Boundary of one region: the half-edges whose opposite is missing or lies
/// outside the region, indexed by origin point, plus the rightmost boundary
/// point (first one found on ties).
struct BoundaryIndex {
  std::unordered_set<HalfEdgeId> he_set;
  std::unordered_map<PointIndex, std::vector<HalfEdgeId>> pt_to_edges;
  PointIndex extreme_pi = kNone;
};

enum class RingKind { Shell, Hole };

struct ExtractedRing {
  LinearRing ring;
  RingKind kind;
};

/// `labels[t] == label` decides region membership of triangle t.
BoundaryIndex initialize(const HalfEdgeMesh& mesh, std::span<const TriangleId> region,
                         std::span<const std::uint32_t> labels, std::uint32_t label);

/// Picks the boundary edge to follow out of the destination of `incoming`.
///
/// The region lies left of every boundary half-edge, so the ring being traced
/// has its gap (exterior or hole) on the right of `incoming`. The continuation
/// is the candidate reached first when sweeping counterclockwise from the
/// reversed incoming edge, i.e. the candidate with the greatest angle measured
/// counterclockwise from it back to the reversed incoming edge. At a vertex
/// shared by several rings this keeps each ring on its own gap, which is what
/// keeps shells and holes simple. Angles are compared exactly with orient2d.
///
/// Throws Error(CorruptBoundary) on an empty candidate list.
HalfEdgeId select_edge(const HalfEdgeMesh& mesh, HalfEdgeId incoming,
                       std::span<const HalfEdgeId> candidates);

/// Start of the shell at the rightmost point, where no incoming edge exists
/// yet: the ring is treated as arriving heading in direction [0, 1].
HalfEdgeId select_start_edge(const HalfEdgeMesh& mesh, PointIndex extreme,
                             std::span<const HalfEdgeId> candidates);

/// Follows boundary half-edges from `start_he` until the walk returns to
/// `start_pi`, consuming every edge it crosses from `bi`. The returned ring
/// starts at `start_pi`.
LinearRing extract_linear_ring(BoundaryIndex& bi, HalfEdgeId start_he, PointIndex start_pi,
                               const HalfEdgeMesh& mesh);

/// Traces every edge left in `bi` into rings, always restarting from the
/// smallest remaining half-edge id.
std::vector<LinearRing> extract_holes(BoundaryIndex& bi, const HalfEdgeMesh& mesh);

Polygon extract_polygon(const HalfEdgeMesh& mesh, std::span<const TriangleId> region,
                        std::span<const std::uint32_t> labels, std::uint32_t label);

struct ExtractionReport {
  double triangulation_ms = 0.0;
  double shape_extraction_ms = 0.0;
  double polygon_extraction_ms = 0.0;
  double total_ms = 0.0;
  std::size_t n_points = 0;
  std::size_t n_triangles = 0;
  std::size_t n_retained_triangles = 0;
  std::size_t n_regions = 0;
  std::size_t n_polygons = 0;
  std::size_t n_holes = 0;
};

struct ExtractionResult {
  MultiPolygon multipolygon;
  ExtractionReport report;
};

/// Triangulate, filter, grow regions, and trace one polygon per region.
ExtractionResult extract_multipolygon(const PointSet& ps, const FilterConfig& cfg);

}  // namespace concavehull
