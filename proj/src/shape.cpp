#include "shape.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "errors.hpp"

namespace concavehull {

void FilterConfig::validate() const {
  if (!alpha && !l_max) fail(ErrorCode::InvalidArgument, "either alpha or l_max must be set");
  if (alpha && !(std::isfinite(*alpha) && *alpha > 0.0)) {
    fail(ErrorCode::InvalidArgument, "alpha must be a positive finite number");
  }
  if (l_max && !(std::isfinite(*l_max) && *l_max > 0.0)) {
    fail(ErrorCode::InvalidArgument, "l_max must be a positive finite number");
  }
  if (min_region_size < 1) fail(ErrorCode::InvalidArgument, "min_region_size must be >= 1");
}

std::size_t FilteredSet::count() const {
  return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

FilteredSet filter_triangles(const HalfEdgeMesh& mesh, const FilterConfig& cfg) {
  cfg.validate();
  const std::size_t k = mesh.num_triangles();
  const auto tris = mesh.triangles();
  const bool use_alpha = cfg.alpha.has_value();
  const bool use_lmax = cfg.l_max.has_value();
  const double alpha_sq = use_alpha ? *cfg.alpha * *cfg.alpha : 0.0;
  const double lmax_sq = use_lmax ? *cfg.l_max * *cfg.l_max : 0.0;

  FilteredSet fs;
  fs.bits.assign(k, 0);
  for (std::size_t t = 0; t < k; ++t) {
    const Point& a = mesh.point(tris[3 * t]);
    const Point& b = mesh.point(tris[3 * t + 1]);
    const Point& c = mesh.point(tris[3 * t + 2]);
    bool keep = true;
    if (use_lmax) {
      const double ab = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
      const double bc = (c.x - b.x) * (c.x - b.x) + (c.y - b.y) * (c.y - b.y);
      const double ca = (a.x - c.x) * (a.x - c.x) + (a.y - c.y) * (a.y - c.y);
      keep = std::max({ab, bc, ca}) <= lmax_sq;
    }
    if (keep && use_alpha) keep = circumradius_sq(a, b, c) <= alpha_sq;
    fs.bits[t] = keep ? 1 : 0;
  }
  return fs;
}

RegionSet extract_regions(const HalfEdgeMesh& mesh, const FilteredSet& fs,
                          std::size_t min_region_size, std::span<const TriangleId> seed_order) {
  const std::size_t k = mesh.num_triangles();
  if (fs.bits.size() != k) fail(ErrorCode::InvalidArgument, "filtered set does not match mesh");
  const auto opp = mesh.halfedges();

  RegionSet out;
  out.labels.assign(k, kNone);
  std::vector<std::uint8_t> pending = fs.bits;
  std::vector<TriangleId> stack;

  for (TriangleId seed : seed_order) {
    if (!pending[seed]) continue;
    const auto label = static_cast<std::uint32_t>(out.regions.size());
    std::vector<TriangleId> region;
    pending[seed] = 0;
    stack.push_back(seed);
    while (!stack.empty()) {
      const TriangleId t = stack.back();
      stack.pop_back();
      region.push_back(t);
      for (HalfEdgeId he = 3 * t; he < 3 * t + 3; ++he) {
        const HalfEdgeId o = opp[he];
        if (o == kNone) continue;
        const TriangleId nb = triangle_of(o);
        if (pending[nb]) {
          pending[nb] = 0;
          stack.push_back(nb);
        }
      }
    }
    if (region.size() < min_region_size) continue;
    for (TriangleId t : region) out.labels[t] = label;
    out.regions.push_back(std::move(region));
  }
  return out;
}

RegionSet extract_regions(const HalfEdgeMesh& mesh, const FilteredSet& fs,
                          std::size_t min_region_size) {
  std::vector<TriangleId> order(mesh.num_triangles());
  std::iota(order.begin(), order.end(), TriangleId{0});
  return extract_regions(mesh, fs, min_region_size, order);
}

}  // namespace concavehull
