#pragma once

#include "geom.hpp"

namespace concavehull {

// Exact-sign predicates. A floating-point filter answers the common case;
// when the filter cannot certify the sign the determinant is re-evaluated
// exactly with floating-point expansions.

// Sign of (b - a) x (c - a). Positive when a, b, c turn counterclockwise.
Sign orient2d(const Point& a, const Point& b, const Point& c);

// Positive when d lies strictly inside the circle through a, b, c
// (a, b, c counterclockwise). Zero when the four points are cocircular.
Sign incircle(const Point& a, const Point& b, const Point& c, const Point& d);

// Unfiltered double-precision determinants, exposed for tests and for
// callers that only need a magnitude.
double orient2d_fast(const Point& a, const Point& b, const Point& c);
double incircle_fast(const Point& a, const Point& b, const Point& c, const Point& d);

}  // namespace concavehull
