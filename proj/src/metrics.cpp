#include "metrics.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "errors.hpp"
#include "predicates.hpp"

namespace concavehull {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::TooShort: return "too-short";
    case ViolationKind::DegenerateEdge: return "degenerate-edge";
    case ViolationKind::SelfIntersection: return "self-intersection";
    case ViolationKind::BadWinding: return "bad-winding";
    case ViolationKind::HoleOutsideShell: return "hole-outside-shell";
    case ViolationKind::HoleInHole: return "hole-in-hole";
  }
  return "unknown";
}

bool ValidityReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.kind == kind; });
}

namespace {

bool on_segment(const Point& p, const Point& a, const Point& b) {
  if (orient2d(a, b, p) != Sign::Zero) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

int sgn(Sign s) { return static_cast<int>(s); }

// Closed-segment intersection test.
bool segments_touch(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = sgn(orient2d(a, b, c));
  const int o2 = sgn(orient2d(a, b, d));
  const int o3 = sgn(orient2d(c, d, a));
  const int o4 = sgn(orient2d(c, d, b));
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return (o1 == 0 && on_segment(c, a, b)) || (o2 == 0 && on_segment(d, a, b)) ||
         (o3 == 0 && on_segment(a, c, d)) || (o4 == 0 && on_segment(b, c, d));
}

// Interiors cross at a single point, or the segments share a piece of
// positive length. Touching at a point is allowed between distinct rings.
bool segments_conflict(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = sgn(orient2d(a, b, c));
  const int o2 = sgn(orient2d(a, b, d));
  const int o3 = sgn(orient2d(c, d, a));
  const int o4 = sgn(orient2d(c, d, b));
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 != 0 || o2 != 0) return false;
  // Collinear: compare the extents along the dominant axis.
  const bool use_x = a.x != b.x;
  auto coord = [&](const Point& p) { return use_x ? p.x : p.y; };
  const double lo = std::max(std::min(coord(a), coord(b)), std::min(coord(c), coord(d)));
  const double hi = std::min(std::max(coord(a), coord(b)), std::max(coord(c), coord(d)));
  return lo < hi;
}

// Ring a->b->c folds back on itself at b.
bool folds_back(const Point& a, const Point& b, const Point& c) {
  if (orient2d(a, b, c) != Sign::Zero) return false;
  const bool use_x = a.x != b.x;
  const double da = use_x ? a.x - b.x : a.y - b.y;
  const double dc = use_x ? c.x - b.x : c.y - b.y;
  return (da > 0.0 && dc > 0.0) || (da < 0.0 && dc < 0.0);
}

struct Segment {
  std::size_t ring;
  std::size_t pos;  // index of the segment's first vertex within the ring
  Point a;
  Point b;
  double min_x, max_x, min_y, max_y;
};

}  // namespace

Location locate_in_ring(const Point& pt, const LinearRing& ring, const PointSet& ps) {
  const auto& idx = ring.indices;
  const std::size_t n = idx.size();
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = ps[idx[i]];
    const Point& b = ps[idx[(i + 1) % n]];
    if (on_segment(pt, a, b)) return Location::Boundary;
    if ((a.y > pt.y) != (b.y > pt.y)) {
      const Sign s = orient2d(a, b, pt);
      if (b.y > a.y ? s == Sign::Positive : s == Sign::Negative) inside = !inside;
    }
  }
  return inside ? Location::Inside : Location::Outside;
}

bool point_in_polygon(const Point& pt, const Polygon& p, const PointSet& ps) {
  const Location shell = locate_in_ring(pt, p.shell, ps);
  if (shell == Location::Outside) return false;
  if (shell == Location::Boundary) return true;
  for (const LinearRing& h : p.holes) {
    const Location l = locate_in_ring(pt, h, ps);
    if (l == Location::Boundary) return true;
    if (l == Location::Inside) return false;
  }
  return true;
}

ValidityReport validate_polygon(const Polygon& p, const PointSet& ps) {
  ValidityReport rep;
  std::vector<const LinearRing*> rings;
  rings.push_back(&p.shell);
  for (const LinearRing& h : p.holes) rings.push_back(&h);

  auto add = [&](std::size_t ring, ViolationKind kind) {
    const Violation v{ring, kind};
    if (std::find(rep.violations.begin(), rep.violations.end(), v) == rep.violations.end()) {
      rep.violations.push_back(v);
    }
  };

  std::vector<bool> sound(rings.size(), true);
  for (std::size_t r = 0; r < rings.size(); ++r) {
    const auto& idx = rings[r]->indices;
    if (idx.size() < 3) {
      add(r, ViolationKind::TooShort);
      sound[r] = false;
      continue;
    }
    for (PointIndex pi : idx) {
      if (pi >= ps.size()) {
        add(r, ViolationKind::DegenerateEdge);
        sound[r] = false;
      }
    }
    if (!sound[r]) continue;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (ps[idx[i]] == ps[idx[(i + 1) % idx.size()]]) {
        add(r, ViolationKind::DegenerateEdge);
        sound[r] = false;
        break;
      }
    }
  }

  std::vector<Segment> segs;
  for (std::size_t r = 0; r < rings.size(); ++r) {
    if (!sound[r]) continue;
    const auto& idx = rings[r]->indices;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      const Point& a = ps[idx[i]];
      const Point& b = ps[idx[(i + 1) % idx.size()]];
      segs.push_back({r, i, a, b, std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y),
                      std::max(a.y, b.y)});
    }
  }
  std::sort(segs.begin(), segs.end(),
            [](const Segment& s, const Segment& t) { return s.min_x < t.min_x; });

  for (std::size_t i = 0; i < segs.size(); ++i) {
    const Segment& s = segs[i];
    for (std::size_t j = i + 1; j < segs.size() && segs[j].min_x <= s.max_x; ++j) {
      const Segment& t = segs[j];
      if (t.max_y < s.min_y || t.min_y > s.max_y) continue;
      if (s.ring != t.ring) {
        if (segments_conflict(s.a, s.b, t.a, t.b)) add(std::max(s.ring, t.ring), ViolationKind::SelfIntersection);
        continue;
      }
      const std::size_t n = rings[s.ring]->size();
      if ((s.pos + 1) % n == t.pos) {
        if (folds_back(s.a, s.b, t.b)) add(s.ring, ViolationKind::SelfIntersection);
      } else if ((t.pos + 1) % n == s.pos) {
        if (folds_back(t.a, t.b, s.b)) add(s.ring, ViolationKind::SelfIntersection);
      } else if (segments_touch(s.a, s.b, t.a, t.b)) {
        add(s.ring, ViolationKind::SelfIntersection);
      }
    }
  }

  if (sound[0] && !(signed_area(p.shell, ps) > 0.0)) add(0, ViolationKind::BadWinding);
  for (std::size_t h = 0; h < p.holes.size(); ++h) {
    const std::size_t r = h + 1;
    if (!sound[r]) continue;
    if (!(signed_area(p.holes[h], ps) < 0.0)) add(r, ViolationKind::BadWinding);
    if (sound[0]) {
      for (PointIndex pi : p.holes[h].indices) {
        if (locate_in_ring(ps[pi], p.shell, ps) == Location::Outside) {
          add(r, ViolationKind::HoleOutsideShell);
          break;
        }
      }
    }
    for (std::size_t g = 0; g < p.holes.size(); ++g) {
      if (g == h || !sound[g + 1]) continue;
      for (PointIndex pi : p.holes[h].indices) {
        if (locate_in_ring(ps[pi], p.holes[g], ps) == Location::Inside) {
          add(r, ViolationKind::HoleInHole);
          break;
        }
      }
    }
  }

  rep.is_valid = rep.violations.empty();
  return rep;
}

MultiPolygonLocator::MultiPolygonLocator(const MultiPolygon& mp, const PointSet& ps) {
  auto add_ring = [&](const LinearRing& ring) {
    const auto& idx = ring.indices;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      const Point& a = ps[idx[i]];
      const Point& b = ps[idx[(i + 1) % idx.size()]];
      edges_.push_back({a, b});
      bounds_.extend(a);
    }
  };
  for (const Polygon& p : mp.polygons) {
    add_ring(p.shell);
    for (const LinearRing& h : p.holes) add_ring(h);
  }
  if (edges_.empty()) return;

  const std::size_t slabs =
      bounds_.height() > 0.0 ? std::clamp<std::size_t>(static_cast<std::size_t>(std::sqrt(edges_.size())), 1, 4096)
                             : 1;
  slab_height_ = bounds_.height() / static_cast<double>(slabs);
  auto slab_of = [&](double y) -> std::size_t {
    if (slab_height_ <= 0.0) return 0;
    const double s = std::floor((y - bounds_.min_y) / slab_height_);
    if (s < 0.0) return 0;
    return std::min(static_cast<std::size_t>(s), slabs - 1);
  };
  std::vector<std::uint32_t> counts(slabs + 1, 0);
  for (const Edge& e : edges_) {
    for (std::size_t s = slab_of(std::min(e.a.y, e.b.y)); s <= slab_of(std::max(e.a.y, e.b.y)); ++s) {
      ++counts[s + 1];
    }
  }
  for (std::size_t s = 0; s < slabs; ++s) counts[s + 1] += counts[s];
  slab_start_ = counts;
  slab_edges_.resize(counts[slabs]);
  std::vector<std::uint32_t> fill(counts.begin(), counts.end() - 1);
  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    for (std::size_t s = slab_of(std::min(e.a.y, e.b.y)); s <= slab_of(std::max(e.a.y, e.b.y)); ++s) {
      slab_edges_[fill[s]++] = i;
    }
  }
}

bool MultiPolygonLocator::contains(const Point& pt) const {
  if (edges_.empty()) return false;
  if (pt.x < bounds_.min_x || pt.x > bounds_.max_x || pt.y < bounds_.min_y || pt.y > bounds_.max_y) {
    return false;
  }
  const std::size_t slabs = slab_start_.size() - 1;
  std::size_t s = 0;
  if (slab_height_ > 0.0) {
    const double f = std::floor((pt.y - bounds_.min_y) / slab_height_);
    s = f < 0.0 ? 0 : std::min(static_cast<std::size_t>(f), slabs - 1);
  }
  bool inside = false;
  for (std::uint32_t k = slab_start_[s]; k < slab_start_[s + 1]; ++k) {
    const Edge& e = edges_[slab_edges_[k]];
    if ((e.a.y > pt.y) != (e.b.y > pt.y)) {
      const Sign o = orient2d(e.a, e.b, pt);
      if (o == Sign::Zero) return true;
      if (e.b.y > e.a.y ? o == Sign::Positive : o == Sign::Negative) inside = !inside;
    } else if (on_segment(pt, e.a, e.b)) {
      return true;
    }
  }
  return inside;
}

double convexity(const Polygon& p, const PointSet& ps) {
  const LinearRing hull = convex_hull(ps, p.shell.indices);
  const double hull_area = signed_area(hull, ps);
  if (!(hull_area > 0.0)) fail(ErrorCode::DegenerateInput, "degenerate convex hull");
  return signed_area(p.shell, ps) / hull_area;
}

double unit_uniform(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1p-53; }

BoundingBox ring_bounds(const LinearRing& ring, const PointSet& ps) {
  BoundingBox box;
  for (PointIndex pi : ring.indices) box.extend(ps[pi]);
  return box;
}

BoundingBox polygon_bounds(const MultiPolygon& mp, const PointSet& ps) {
  BoundingBox box;
  for (const Polygon& p : mp.polygons) box.extend(ring_bounds(p.shell, ps));
  return box;
}

ErrorEstimate l2_error(const MultiPolygon& gt, const MultiPolygon& cs, const PointSet& ps_gt,
                       const PointSet& ps_cs, std::size_t n_samples, std::uint64_t seed) {
  if (n_samples == 0) fail(ErrorCode::InvalidArgument, "l2_error needs at least one sample");
  const MultiPolygonLocator in_gt(gt, ps_gt);
  const MultiPolygonLocator in_cs(cs, ps_cs);
  BoundingBox box = in_gt.bounds();
  box.extend(in_cs.bounds());
  if (box.empty()) fail(ErrorCode::InvalidArgument, "l2_error: both shapes are empty");

  std::mt19937_64 rng(seed);
  std::size_t xor_hits = 0;
  std::size_t cs_hits = 0;
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double x = box.min_x + unit_uniform(rng()) * box.width();
    const double y = box.min_y + unit_uniform(rng()) * box.height();
    const bool a = in_gt.contains({x, y});
    const bool b = in_cs.contains({x, y});
    if (a != b) ++xor_hits;
    if (b) ++cs_hits;
  }
  if (cs_hits == 0) fail(ErrorCode::InvalidArgument, "l2_error: estimated area of the extracted shape is zero");
  return {static_cast<double>(xor_hits) / static_cast<double>(cs_hits), n_samples, seed};
}

double suggest_alpha(const PointSet& ps) {
  if (ps.size() < 3) fail(ErrorCode::TooFewPoints, "suggest_alpha needs at least 3 points");
  const double area = ps.bounds().area();
  if (!(area > 0.0)) fail(ErrorCode::DegenerateInput, "suggest_alpha: bounding box has zero area");
  const double density = static_cast<double>(ps.size()) / area;
  return 2.0 / density;
}

}  // namespace concavehull
