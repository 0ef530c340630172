#include "polygon_extract.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "errors.hpp"
#include "predicates.hpp"

namespace concavehull {

namespace {

// Position of `c` in a counterclockwise sweep around `v` that starts just
// after the ray v->r: 0 for the open half-turn (0, pi), 1 for [pi, 2pi), 2 for
// the ray itself.
int sweep_half(const Point& v, const Point& r, const Point& c) {
  const Sign s = orient2d(v, r, c);
  if (s == Sign::Positive) return 0;
  if (s == Sign::Negative) return 1;
  const bool same_x = (c.x > v.x) == (r.x > v.x) && (c.x < v.x) == (r.x < v.x);
  const bool same_y = (c.y > v.y) == (r.y > v.y) && (c.y < v.y) == (r.y < v.y);
  return (same_x && same_y) ? 2 : 1;
}

// True when `a` comes strictly before `b` in the sweep.
bool sweeps_before(const Point& v, const Point& r, const Point& a, const Point& b) {
  const int ha = sweep_half(v, r, a);
  const int hb = sweep_half(v, r, b);
  if (ha != hb) return ha < hb;
  return orient2d(v, a, b) == Sign::Positive;
}

HalfEdgeId first_in_sweep(const HalfEdgeMesh& mesh, const Point& v, const Point& r,
                          std::span<const HalfEdgeId> candidates) {
  if (candidates.empty()) fail(ErrorCode::CorruptBoundary, "no outgoing boundary edge");
  HalfEdgeId best = candidates[0];
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const HalfEdgeId c = candidates[i];
    if (sweeps_before(v, r, mesh.point(mesh.destination(c)), mesh.point(mesh.destination(best)))) {
      best = c;
    }
  }
  return best;
}

void remove_edge(BoundaryIndex& bi, HalfEdgeId he, const HalfEdgeMesh& mesh) {
  if (bi.he_set.erase(he) == 0) {
    fail(ErrorCode::CorruptBoundary, "half-edge " + std::to_string(he) + " is not on the boundary");
  }
  auto it = bi.pt_to_edges.find(mesh.origin(he));
  if (it == bi.pt_to_edges.end()) {
    fail(ErrorCode::CorruptBoundary, "boundary index lost half-edge " + std::to_string(he));
  }
  auto& list = it->second;
  list.erase(std::remove(list.begin(), list.end(), he), list.end());
  if (list.empty()) bi.pt_to_edges.erase(it);
}

double elapsed_ms(std::chrono::steady_clock::time_point from, std::chrono::steady_clock::time_point to) {
  return std::chrono::duration<double, std::milli>(to - from).count();
}

}  // namespace

BoundaryIndex initialize(const HalfEdgeMesh& mesh, std::span<const TriangleId> region,
                         std::span<const std::uint32_t> labels, std::uint32_t label) {
  const auto opp = mesh.halfedges();
  BoundaryIndex bi;
  bi.he_set.reserve(region.size() + 3);
  double max_x = -std::numeric_limits<double>::infinity();
  for (TriangleId t : region) {
    for (HalfEdgeId he = 3 * t; he < 3 * t + 3; ++he) {
      const HalfEdgeId o = opp[he];
      if (o != kNone && labels[triangle_of(o)] == label) continue;
      bi.he_set.insert(he);
      const PointIndex pi = mesh.origin(he);
      const double x = mesh.point(pi).x;
      if (bi.extreme_pi == kNone || x > max_x) {
        max_x = x;
        bi.extreme_pi = pi;
      }
      bi.pt_to_edges[pi].push_back(he);
    }
  }
  return bi;
}

HalfEdgeId select_edge(const HalfEdgeMesh& mesh, HalfEdgeId incoming,
                       std::span<const HalfEdgeId> candidates) {
  if (candidates.size() == 1) return candidates[0];
  const Point& v = mesh.point(mesh.destination(incoming));
  const Point& back = mesh.point(mesh.origin(incoming));
  return first_in_sweep(mesh, v, back, candidates);
}

HalfEdgeId select_start_edge(const HalfEdgeMesh& mesh, PointIndex extreme,
                             std::span<const HalfEdgeId> candidates) {
  if (candidates.size() == 1) return candidates[0];
  const Point& v = mesh.point(extreme);
  // Reversed [0, 1]: a reference point straight below v.
  const Point below{v.x, v.y - std::max(1.0, std::abs(v.y))};
  return first_in_sweep(mesh, v, below, candidates);
}

LinearRing extract_linear_ring(BoundaryIndex& bi, HalfEdgeId start_he, PointIndex start_pi,
                               const HalfEdgeMesh& mesh) {
  LinearRing lr;
  HalfEdgeId he = start_he;
  while (true) {
    remove_edge(bi, he, mesh);
    const PointIndex pi = mesh.destination(he);
    lr.indices.push_back(pi);
    if (pi == start_pi) break;
    auto it = bi.pt_to_edges.find(pi);
    if (it == bi.pt_to_edges.end()) {
      fail(ErrorCode::CorruptBoundary,
           "boundary walk reached point " + std::to_string(pi) + " with no outgoing edge");
    }
    he = select_edge(mesh, he, it->second);
  }
  std::rotate(lr.indices.rbegin(), lr.indices.rbegin() + 1, lr.indices.rend());
  return lr;
}

std::vector<LinearRing> extract_holes(BoundaryIndex& bi, const HalfEdgeMesh& mesh) {
  std::vector<LinearRing> holes;
  // Ascending snapshot; edges consumed by earlier rings are skipped.
  std::vector<HalfEdgeId> order(bi.he_set.begin(), bi.he_set.end());
  std::sort(order.begin(), order.end());
  for (HalfEdgeId he : order) {
    if (bi.he_set.empty()) break;
    if (!bi.he_set.contains(he)) continue;
    holes.push_back(extract_linear_ring(bi, he, mesh.origin(he), mesh));
  }
  return holes;
}

Polygon extract_polygon(const HalfEdgeMesh& mesh, std::span<const TriangleId> region,
                        std::span<const std::uint32_t> labels, std::uint32_t label) {
  if (region.empty()) fail(ErrorCode::InvalidArgument, "empty region");
  BoundaryIndex bi = initialize(mesh, region, labels, label);
  auto it = bi.pt_to_edges.find(bi.extreme_pi);
  if (it == bi.pt_to_edges.end()) fail(ErrorCode::CorruptBoundary, "extreme point has no edge");
  const HalfEdgeId start = select_start_edge(mesh, bi.extreme_pi, it->second);
  Polygon poly;
  poly.shell = extract_linear_ring(bi, start, bi.extreme_pi, mesh);
  poly.holes = extract_holes(bi, mesh);
  return poly;
}

ExtractionResult extract_multipolygon(const PointSet& ps, const FilterConfig& cfg) {
  cfg.validate();
  using clock = std::chrono::steady_clock;
  ExtractionResult result;
  ExtractionReport& rep = result.report;

  const auto t0 = clock::now();
  const HalfEdgeMesh mesh = triangulate(ps);
  const auto t1 = clock::now();
  const FilteredSet fs = filter_triangles(mesh, cfg);
  const RegionSet rs = extract_regions(mesh, fs, cfg.min_region_size);
  const auto t2 = clock::now();
  auto& polys = result.multipolygon.polygons;
  polys.reserve(rs.regions.size());
  for (std::size_t r = 0; r < rs.regions.size(); ++r) {
    polys.push_back(extract_polygon(mesh, rs.regions[r], rs.labels, static_cast<std::uint32_t>(r)));
  }
  const auto t3 = clock::now();

  rep.triangulation_ms = elapsed_ms(t0, t1);
  rep.shape_extraction_ms = elapsed_ms(t1, t2);
  rep.polygon_extraction_ms = elapsed_ms(t2, t3);
  rep.total_ms = elapsed_ms(t0, t3);
  rep.n_points = ps.size();
  rep.n_triangles = mesh.num_triangles();
  rep.n_retained_triangles = fs.count();
  rep.n_regions = rs.regions.size();
  rep.n_polygons = polys.size();
  for (const Polygon& p : polys) rep.n_holes += p.holes.size();
  return result;
}

}  // namespace concavehull
