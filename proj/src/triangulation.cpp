#include "triangulation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <ostream>
#include <string>

#include "errors.hpp"
#include "predicates.hpp"

namespace concavehull {

HalfEdgeMesh::HalfEdgeMesh(const PointSet& points, std::vector<PointIndex> triangles,
                           std::vector<HalfEdgeId> halfedges)
    : points_(&points), triangles_(std::move(triangles)), halfedges_(std::move(halfedges)) {
  if (triangles_.size() != halfedges_.size() || triangles_.size() % 3 != 0) {
    fail(ErrorCode::InvalidArgument, "half-edge arrays must have equal length divisible by 3");
  }
}

PointIndex HalfEdgeMesh::destination(HalfEdgeId he) const {
  return triangles_[next_halfedge(he)];
}

namespace {

double dist_sq(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

// Monotone in the counterclockwise angle of (dx, dy), range [0, 1].
double pseudo_angle(double dx, double dy) {
  if (dx == 0.0 && dy == 0.0) return 0.0;
  const double p = dx / (std::abs(dx) + std::abs(dy));
  return (dy > 0.0 ? 3.0 - p : 1.0 + p) / 4.0;
}

Point circumcenter(const Point& a, const Point& b, const Point& c) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double ex = c.x - a.x;
  const double ey = c.y - a.y;
  const double bl = dx * dx + dy * dy;
  const double cl = ex * ex + ey * ey;
  const double d = 0.5 / (dx * ey - dy * ex);
  return {a.x + (ey * bl - dy * cl) * d, a.y + (dx * cl - ex * bl) * d};
}

bool lex_less(const Point& a, const Point& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

// Sweep-hull construction: points are inserted in order of distance from the
// seed triangle's circumcenter, each one attached to the visible part of the
// current convex hull, and Delaunay is restored by edge flips.
class SweepHull {
 public:
  explicit SweepHull(const PointSet& ps) : ps_(ps), n_(ps.size()) {}

  HalfEdgeMesh run() {
    if (n_ < 3) fail(ErrorCode::TooFewPoints, "triangulation needs at least 3 points");
    seed();
    insert_all();
    triangles_.shrink_to_fit();
    halfedges_.shrink_to_fit();
    return HalfEdgeMesh(ps_, std::move(triangles_), std::move(halfedges_));
  }

 private:
  const Point& pt(PointIndex i) const { return ps_[i]; }

  void seed() {
    const BoundingBox box = ps_.bounds();
    const Point mid{0.5 * (box.min_x + box.max_x), 0.5 * (box.min_y + box.max_y)};

    auto closer = [&](const Point& ref, PointIndex a, PointIndex b) {
      const double da = dist_sq(ref, pt(a));
      const double db = dist_sq(ref, pt(b));
      return da < db || (da == db && lex_less(pt(a), pt(b)));
    };

    PointIndex i0 = 0;
    for (PointIndex i = 1; i < n_; ++i) {
      if (closer(mid, i, i0)) i0 = i;
    }
    PointIndex i1 = kNone;
    for (PointIndex i = 0; i < n_; ++i) {
      if (i == i0) continue;
      if (i1 == kNone || closer(pt(i0), i, i1)) i1 = i;
    }
    PointIndex i2 = kNone;
    double best = std::numeric_limits<double>::infinity();
    for (PointIndex i = 0; i < n_; ++i) {
      if (i == i0 || i == i1) continue;
      const double r = circumradius_sq(pt(i0), pt(i1), pt(i));
      if (r < best || (r == best && i2 != kNone && std::isfinite(r) && lex_less(pt(i), pt(i2)))) {
        best = r;
        i2 = i;
      }
    }
    if (!std::isfinite(best)) fail(ErrorCode::DegenerateInput, "all points are collinear");
    if (orient2d(pt(i0), pt(i1), pt(i2)) == Sign::Negative) std::swap(i1, i2);

    seeds_ = {i0, i1, i2};
    center_ = circumcenter(pt(i0), pt(i1), pt(i2));

    const std::size_t max_triangles = 2 * n_ - 5;
    triangles_.reserve(3 * max_triangles);
    halfedges_.reserve(3 * max_triangles);
    hull_prev_.assign(n_, kNone);
    hull_next_.assign(n_, kNone);
    hull_tri_.assign(n_, kNone);
    hash_size_ = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n_))));
    hull_hash_.assign(hash_size_, kNone);

    hull_start_ = i0;
    hull_next_[i0] = hull_prev_[i2] = i1;
    hull_next_[i1] = hull_prev_[i0] = i2;
    hull_next_[i2] = hull_prev_[i1] = i0;
    hull_tri_[i0] = 0;
    hull_tri_[i1] = 1;
    hull_tri_[i2] = 2;
    hull_hash_[hash_key(pt(i0))] = i0;
    hull_hash_[hash_key(pt(i1))] = i1;
    hull_hash_[hash_key(pt(i2))] = i2;
    add_triangle(i0, i1, i2, kNone, kNone, kNone);
  }

  void insert_all() {
    std::vector<double> dists(n_);
    for (PointIndex i = 0; i < n_; ++i) dists[i] = dist_sq(pt(i), center_);
    std::vector<PointIndex> order(n_);
    std::iota(order.begin(), order.end(), PointIndex{0});
    std::sort(order.begin(), order.end(), [&](PointIndex a, PointIndex b) {
      return dists[a] < dists[b] || (dists[a] == dists[b] && lex_less(pt(a), pt(b)));
    });
    for (PointIndex i : order) {
      if (i == seeds_[0] || i == seeds_[1] || i == seeds_[2]) continue;
      insert(i);
    }
  }

  void insert(PointIndex i) {
    const Point& p = pt(i);

    PointIndex start = 0;
    const std::size_t key = hash_key(p);
    for (std::size_t j = 0; j < hash_size_; ++j) {
      start = hull_hash_[(key + j) % hash_size_];
      if (start != kNone && start != hull_next_[start]) break;
    }
    start = hull_prev_[start];

    // Find an edge of the hull that `p` sees from its outer side.
    PointIndex e = start;
    PointIndex q;
    while (q = hull_next_[e], orient2d(p, pt(e), pt(q)) != Sign::Negative) {
      e = q;
      if (e == start) {
        fail(ErrorCode::Internal, "point " + std::to_string(i) + " is not outside the sweep hull");
      }
    }

    HalfEdgeId t = add_triangle(e, i, hull_next_[e], kNone, kNone, hull_tri_[e]);
    hull_tri_[i] = legalize(t + 2);
    hull_tri_[e] = t;

    PointIndex n = hull_next_[e];
    while (q = hull_next_[n], orient2d(p, pt(n), pt(q)) == Sign::Negative) {
      t = add_triangle(n, i, q, hull_tri_[i], kNone, hull_tri_[n]);
      hull_tri_[i] = legalize(t + 2);
      hull_next_[n] = n;  // removed from hull
      n = q;
    }

    if (e == start) {
      while (q = hull_prev_[e], orient2d(p, pt(q), pt(e)) == Sign::Negative) {
        t = add_triangle(q, i, e, kNone, hull_tri_[e], hull_tri_[q]);
        legalize(t + 2);
        hull_tri_[q] = t;
        hull_next_[e] = e;
        e = q;
      }
    }

    hull_start_ = hull_prev_[i] = e;
    hull_next_[e] = hull_prev_[n] = i;
    hull_next_[i] = n;
    hull_hash_[hash_key(p)] = i;
    hull_hash_[hash_key(pt(e))] = e;
  }

  std::size_t hash_key(const Point& p) const {
    const double a = pseudo_angle(p.x - center_.x, p.y - center_.y);
    return static_cast<std::size_t>(std::floor(a * static_cast<double>(hash_size_))) % hash_size_;
  }

  void link(HalfEdgeId a, HalfEdgeId b) {
    halfedges_[a] = b;
    if (b != kNone) halfedges_[b] = a;
  }

  HalfEdgeId add_triangle(PointIndex i0, PointIndex i1, PointIndex i2, HalfEdgeId a, HalfEdgeId b,
                          HalfEdgeId c) {
    const auto t = static_cast<HalfEdgeId>(triangles_.size());
    triangles_.push_back(i0);
    triangles_.push_back(i1);
    triangles_.push_back(i2);
    halfedges_.resize(triangles_.size(), kNone);
    link(t, a);
    link(t + 1, b);
    link(t + 2, c);
    return t;
  }

  // Flips `a` and every edge it disturbs until the empty-circumcircle
  // property holds locally. Returns the half-edge that now occupies the
  // position preceding the last edge examined; callers use it to keep
  // hull_tri_ current.
  HalfEdgeId legalize(HalfEdgeId a) {
    std::size_t depth = 0;
    HalfEdgeId ar = 0;
    edge_stack_.clear();
    while (true) {
      const HalfEdgeId b = halfedges_[a];
      const HalfEdgeId a0 = a - a % 3;
      ar = a0 + (a + 2) % 3;

      if (b == kNone) {
        if (depth == 0) break;
        a = edge_stack_[--depth];
        continue;
      }

      const HalfEdgeId b0 = b - b % 3;
      const HalfEdgeId al = a0 + (a + 1) % 3;
      const HalfEdgeId bl = b0 + (b + 2) % 3;

      const PointIndex p0 = triangles_[ar];
      const PointIndex pr = triangles_[a];
      const PointIndex pl = triangles_[al];
      const PointIndex p1 = triangles_[bl];

      if (incircle(pt(p0), pt(pr), pt(pl), pt(p1)) == Sign::Positive) {
        triangles_[a] = p1;
        triangles_[b] = p0;

        const HalfEdgeId hbl = halfedges_[bl];
        if (hbl == kNone) {
          // The flipped edge was a hull edge seen from the far side.
          PointIndex e = hull_start_;
          do {
            if (hull_tri_[e] == bl) {
              hull_tri_[e] = a;
              break;
            }
            e = hull_prev_[e];
          } while (e != hull_start_);
        }
        link(a, hbl);
        link(b, halfedges_[ar]);
        link(ar, bl);

        const HalfEdgeId br = b0 + (b + 1) % 3;
        if (depth < edge_stack_.size()) {
          edge_stack_[depth] = br;
        } else {
          edge_stack_.push_back(br);
        }
        ++depth;
      } else {
        if (depth == 0) break;
        a = edge_stack_[--depth];
      }
    }
    return ar;
  }

  const PointSet& ps_;
  const std::size_t n_;
  std::array<PointIndex, 3> seeds_{};
  Point center_;
  std::vector<PointIndex> triangles_;
  std::vector<HalfEdgeId> halfedges_;
  std::vector<PointIndex> hull_prev_;
  std::vector<PointIndex> hull_next_;
  std::vector<HalfEdgeId> hull_tri_;
  std::vector<PointIndex> hull_hash_;
  std::size_t hash_size_ = 0;
  PointIndex hull_start_ = 0;
  std::vector<HalfEdgeId> edge_stack_;
};

}  // namespace

HalfEdgeMesh triangulate(const PointSet& ps) { return SweepHull(ps).run(); }

void write_debug_dump(const HalfEdgeMesh& mesh, std::ostream& out) {
  const auto tris = mesh.triangles();
  const auto opp = mesh.halfedges();
  for (std::size_t he = 0; he < tris.size(); ++he) {
    out << he << ", " << tris[he] << ", ";
    if (opp[he] == kNone) {
      out << -1;
    } else {
      out << opp[he];
    }
    out << '\n';
  }
}

}  // namespace concavehull
