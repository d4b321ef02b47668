#pragma once

// Fixed q = 7 data: two (36, 6)-arcs and the curves used to eliminate them.

#include <vector>

#include "curveforge/hpoly.hpp"
#include "curveforge/pointset.hpp"

namespace curveforge::data {

/// The (36, 6)-arc of PG(2, 7) with k0 = 3.
PointSet arc36_k0_3(const FieldPtr& f7);
/// A (36, 6)-arc of PG(2, 7) with k0 = 2.
PointSet arc36_k0_2(const FieldPtr& f7);

/// YZ(Z - 3Y)(Z - 4Y)(Z - 5Y)(Z - 6Y)
HPoly sextic_g(const FieldPtr& f7);
/// X(X + Y - Z)(2X + Y - Z)(X + 2Y - 2Z)
HPoly quartic_h(const FieldPtr& f7);
/// Points of the k0 = 3 arc off V(G) ∪ V(H) used to pin the quadric factor.
std::vector<PPoint> quadric_constraints(const FieldPtr& f7);

/// (1:5:2), a point off the k0 = 2 arc.
PPoint special_point_k0_2(const FieldPtr& f7);
/// The 5-lines and the 6-lines through that point, normalized.
std::vector<PLine> special_five_lines(const FieldPtr& f7);
std::vector<PLine> special_six_lines(const FieldPtr& f7);

}  // namespace curveforge::data
