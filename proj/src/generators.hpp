#pragma once

#include <cstdint>

#include "geom.hpp"

namespace concavehull {

struct PolygonFixture {
  Polygon polygon;
  PointSet points;
};

struct GeneratorOptions {
  double radius = 50.0;
  // Vertex radii are drawn from [min_radius_fraction, 1] * radius; lower
  // values give spikier, less convex shells.
  double min_radius_fraction = 0.5;
  // Hole radii are drawn from this range, as fractions of `radius`.
  double hole_radius_min = 0.05;
  double hole_radius_max = 0.12;
  std::size_t hole_vertices = 16;
  std::size_t max_attempts = 2000;
};

/// Star-shaped random shell (jittered angles, random radii, counterclockwise),
/// scaled so its area is half that of the disk of `radius`, with `holes` clockwise regular-polygon holes placed fully inside it and
/// apart from each other. Deterministic per seed; the result passes
/// validate_polygon. Throws Error(InvalidArgument) for n_vertices < 3 and
/// Error(DegenerateInput) when the holes cannot be placed.
PolygonFixture generate_random_polygon(std::size_t n_vertices, std::size_t holes,
                                       std::uint64_t seed, const GeneratorOptions& opts = {});

/// Exactly n distinct points drawn uniformly from the polygon's interior by
/// rejection from its bounding box.
PointSet sample_points_in_polygon(const Polygon& p, const PointSet& ps, std::size_t n,
                                  std::uint64_t seed);

}  // namespace concavehull
