#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "triangulation.hpp"

namespace concavehull {

struct FilterConfig {
  std::optional<double> alpha;  // keep triangles with circumradius <= alpha
  std::optional<double> l_max;  // keep triangles whose longest edge <= l_max
  std::size_t min_region_size = 1;

  // Throws Error(InvalidArgument) unless at least one criterion is set and all
  // values are strictly positive and finite.
  void validate() const;
};

// One flag per triangle, 1 = retained.
struct FilteredSet {
  std::vector<std::uint8_t> bits;

  bool contains(TriangleId t) const { return bits[t] != 0; }
  std::size_t count() const;
};

struct RegionSet {
  std::vector<std::vector<TriangleId>> regions;
  // Region index of every triangle, kNone for triangles in no region.
  std::vector<std::uint32_t> labels;
};

FilteredSet filter_triangles(const HalfEdgeMesh& mesh, const FilterConfig& cfg);

// Flood fill over shared edges restricted to retained triangles. Seeds are
// taken in ascending triangle id. Regions with fewer than `min_region_size`
// triangles are dropped.
RegionSet extract_regions(const HalfEdgeMesh& mesh, const FilteredSet& fs,
                          std::size_t min_region_size = 1);

// Same, with an explicit seed visiting order (a permutation of a superset of
// the retained triangle ids).
RegionSet extract_regions(const HalfEdgeMesh& mesh, const FilteredSet& fs,
                          std::size_t min_region_size, std::span<const TriangleId> seed_order);

}  // namespace concavehull
