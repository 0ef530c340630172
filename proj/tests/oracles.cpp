#include "oracles.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace oracle {

using Q = boost::multiprecision::cpp_rational;

namespace {

int sign_of(const Q& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Plain double evaluation first; the exact path decides whenever the result is
// within a generous multiple of the magnitude of its terms.
int incircle_filtered(const Point& a, const Point& b, const Point& c, const Point& d) {
  const double adx = a.x - d.x, ady = a.y - d.y;
  const double bdx = b.x - d.x, bdy = b.y - d.y;
  const double cdx = c.x - d.x, cdy = c.y - d.y;
  const double al = adx * adx + ady * ady;
  const double bl = bdx * bdx + bdy * bdy;
  const double cl = cdx * cdx + cdy * cdy;
  const double det = al * (bdx * cdy - cdx * bdy) + bl * (cdx * ady - adx * cdy) + cl * (adx * bdy - bdx * ady);
  const double perm = al * (std::abs(bdx * cdy) + std::abs(cdx * bdy)) +
                      bl * (std::abs(cdx * ady) + std::abs(adx * cdy)) +
                      cl * (std::abs(adx * bdy) + std::abs(bdx * ady));
  if (std::abs(det) > 1e-12 * perm) return det > 0 ? 1 : -1;
  return incircle(a, b, c, d);
}

std::uint64_t edge_key(std::uint32_t a, std::uint32_t b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

int orient(const Point& a, const Point& b, const Point& c) {
  const Q ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
  return sign_of((bx - ax) * (cy - ay) - (by - ay) * (cx - ax));
}

int incircle(const Point& a, const Point& b, const Point& c, const Point& d) {
  const Q adx = Q(a.x) - Q(d.x), ady = Q(a.y) - Q(d.y);
  const Q bdx = Q(b.x) - Q(d.x), bdy = Q(b.y) - Q(d.y);
  const Q cdx = Q(c.x) - Q(d.x), cdy = Q(c.y) - Q(d.y);
  const Q det = (adx * adx + ady * ady) * (bdx * cdy - cdx * bdy) +
                (bdx * bdx + bdy * bdy) * (cdx * ady - adx * cdy) +
                (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady);
  return sign_of(det);
}

double circumradius_sq(const Point& a, const Point& b, const Point& c) {
  // Solve |X - a| = |X - b| = |X - c| as two linear equations.
  const long double a1 = 2.0L * (b.x - a.x), b1 = 2.0L * (b.y - a.y);
  const long double c1 = (long double)b.x * b.x - (long double)a.x * a.x + (long double)b.y * b.y -
                         (long double)a.y * a.y;
  const long double a2 = 2.0L * (c.x - a.x), b2 = 2.0L * (c.y - a.y);
  const long double c2 = (long double)c.x * c.x - (long double)a.x * a.x + (long double)c.y * c.y -
                         (long double)a.y * a.y;
  const long double den = a1 * b2 - a2 * b1;
  const long double ux = (c1 * b2 - c2 * b1) / den;
  const long double uy = (a1 * c2 - a2 * c1) / den;
  const long double dx = ux - a.x, dy = uy - a.y;
  return static_cast<double>(dx * dx + dy * dy);
}

std::string delaunay_violation(const HalfEdgeMesh& mesh) {
  const PointSet& ps = mesh.points();
  auto tris = mesh.triangles();
  for (std::size_t t = 0; t < mesh.num_triangles(); ++t) {
    const auto i = tris[3 * t], j = tris[3 * t + 1], k = tris[3 * t + 2];
    if (orient(ps[i], ps[j], ps[k]) <= 0) return "triangle " + std::to_string(t) + " is not CCW";
    for (std::uint32_t p = 0; p < ps.size(); ++p) {
      if (p == i || p == j || p == k) continue;
      if (incircle_filtered(ps[i], ps[j], ps[k], ps[p]) > 0) {
        return "point " + std::to_string(p) + " inside circumcircle of triangle " + std::to_string(t);
      }
    }
  }
  return {};
}

std::vector<concavehull::PointIndex> gift_wrap_hull(const PointSet& ps) {
  const std::uint32_t n = static_cast<std::uint32_t>(ps.size());
  std::uint32_t start = 0;
  for (std::uint32_t i = 1; i < n; ++i) {
    if (ps[i].x < ps[start].x || (ps[i].x == ps[start].x && ps[i].y < ps[start].y)) start = i;
  }
  auto dist2 = [&](std::uint32_t a, std::uint32_t b) {
    const double dx = ps[a].x - ps[b].x, dy = ps[a].y - ps[b].y;
    return dx * dx + dy * dy;
  };
  std::vector<concavehull::PointIndex> hull;
  std::uint32_t cur = start;
  do {
    hull.push_back(cur);
    std::uint32_t best = cur == 0 ? 1 : 0;
    for (std::uint32_t q = 0; q < n; ++q) {
      if (q == cur) continue;
      const int o = orient(ps[cur], ps[best], ps[q]);
      // Prefer the most clockwise candidate; among collinear ones the farthest.
      if (o < 0 || (o == 0 && dist2(cur, q) > dist2(cur, best))) best = q;
    }
    cur = best;
    if (hull.size() > n) throw std::logic_error("gift wrapping did not close");
  } while (cur != start);
  return hull;
}

std::size_t hull_boundary_points(const PointSet& ps) {
  const auto hull = gift_wrap_hull(ps);
  std::size_t count = 0;
  for (std::uint32_t p = 0; p < ps.size(); ++p) {
    for (std::size_t e = 0; e < hull.size(); ++e) {
      const Point& a = ps[hull[e]];
      const Point& b = ps[hull[(e + 1) % hull.size()]];
      const Point& q = ps[p];
      if (orient(a, b, q) == 0 && std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) &&
          std::min(a.y, b.y) <= q.y && q.y <= std::max(a.y, b.y)) {
        ++count;
        break;
      }
    }
  }
  return count;
}

std::set<HalfEdgeId> boundary_by_edge_count(const HalfEdgeMesh& mesh, const std::vector<TriangleId>& region) {
  auto tris = mesh.triangles();
  std::map<std::uint64_t, int> uses;
  for (TriangleId t : region) {
    for (int k = 0; k < 3; ++k) uses[edge_key(tris[3 * t + k], tris[3 * t + (k + 1) % 3])]++;
  }
  std::set<HalfEdgeId> out;
  for (TriangleId t : region) {
    for (int k = 0; k < 3; ++k) {
      if (uses[edge_key(tris[3 * t + k], tris[3 * t + (k + 1) % 3])] == 1) out.insert(3 * t + k);
    }
  }
  return out;
}

std::vector<std::vector<TriangleId>> edge_components(const HalfEdgeMesh& mesh, const std::vector<TriangleId>& tris_in) {
  auto tris = mesh.triangles();
  std::vector<std::size_t> parent(tris_in.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<std::uint64_t, std::size_t> owner;
  for (std::size_t i = 0; i < tris_in.size(); ++i) {
    const TriangleId t = tris_in[i];
    for (int k = 0; k < 3; ++k) {
      const auto key = edge_key(tris[3 * t + k], tris[3 * t + (k + 1) % 3]);
      auto [it, inserted] = owner.emplace(key, i);
      if (!inserted) parent[find(i)] = find(it->second);
    }
  }
  std::map<std::size_t, std::vector<TriangleId>> groups;
  for (std::size_t i = 0; i < tris_in.size(); ++i) groups[find(i)].push_back(tris_in[i]);
  std::vector<std::vector<TriangleId>> out;
  for (auto& [root, g] : groups) {
    std::sort(g.begin(), g.end());
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Generic nested list: either a number or a list of nodes.
struct Node {
  bool leaf = false;
  std::vector<double> coords;  // leaf: whitespace-separated numbers
  std::vector<Node> children;
};

Node parse_list(const std::string& s, std::size_t& i) {
  Node n;
  ++i;  // '('
  std::string token;
  bool any_child = false;
  while (i < s.size()) {
    const char c = s[i];
    if (c == '(') {
      n.children.push_back(parse_list(s, i));
      any_child = true;
      continue;
    }
    if (c == ')') {
      ++i;
      break;
    }
    token.push_back(c);
    ++i;
  }
  if (!any_child) {
    // Leaf list "x y, x y, ..." becomes children each holding two numbers.
    std::string buf = token;
    std::replace(buf.begin(), buf.end(), ',', ' ');
    std::istringstream in(buf);
    std::vector<double> nums;
    for (double v; in >> v;) nums.push_back(v);
    if (nums.size() % 2 != 0) throw std::runtime_error("odd coordinate count");
    for (std::size_t k = 0; k < nums.size(); k += 2) {
      Node leaf;
      leaf.leaf = true;
      leaf.coords = {nums[k], nums[k + 1]};
      n.children.push_back(leaf);
    }
  }
  return n;
}

Ring to_ring(const Node& n) {
  Ring r;
  for (const Node& c : n.children) r.push_back({c.coords.at(0), c.coords.at(1)});
  return r;
}

PolygonRings to_polygon(const Node& n) {
  PolygonRings p;
  for (const Node& c : n.children) p.push_back(to_ring(c));
  return p;
}

}  // namespace

std::vector<PolygonRings> read_wkt(const std::string& text) {
  std::string upper;
  for (char c : text) upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (upper.find("EMPTY") != std::string::npos) return {};
  const std::size_t open = text.find('(');
  if (open == std::string::npos) throw std::runtime_error("no coordinates");
  std::size_t i = open;
  const Node root = parse_list(text, i);
  if (upper.rfind("MULTIPOLYGON", 0) == 0) {
    std::vector<PolygonRings> out;
    for (const Node& c : root.children) out.push_back(to_polygon(c));
    return out;
  }
  if (upper.rfind("POLYGON", 0) == 0) return {to_polygon(root)};
  throw std::runtime_error("unsupported WKT");
}

std::vector<PolygonRings> read_geojson(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  const auto& g = doc.at("type") == "Feature" ? doc.at("geometry") : doc;
  auto polygon = [](const nlohmann::json& rings) {
    PolygonRings p;
    for (const auto& r : rings) {
      Ring ring;
      for (const auto& c : r) ring.push_back({c.at(0).get<double>(), c.at(1).get<double>()});
      p.push_back(ring);
    }
    return p;
  };
  std::vector<PolygonRings> out;
  if (g.at("type") == "Polygon") {
    out.push_back(polygon(g.at("coordinates")));
  } else {
    for (const auto& p : g.at("coordinates")) out.push_back(polygon(p));
  }
  return out;
}

double shoelace(const Ring& r) {
  long double s = 0.0L;
  for (std::size_t i = 0; i + 1 < r.size(); ++i) {
    s += (long double)r[i].x * r[i + 1].y - (long double)r[i + 1].x * r[i].y;
  }
  return static_cast<double>(s / 2.0L);
}

bool same_cycle(const std::vector<Point>& a, const std::vector<Point>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t shift = 0; shift < b.size(); ++shift) {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) ok = a[i] == b[(i + shift) % b.size()];
    if (ok) return true;
  }
  return false;
}

}  // namespace oracle
