#pragma once

// Points and lines of PG(2, q). Both are normalized coordinate triples whose
// leftmost nonzero entry is 1; the point P lies on the line l iff the dot
// product of their triples vanishes, so every routine here has a dual.
//
// Enumeration order (points and lines alike): (1:y:z) by (y, z) code, then
// (0:1:z), then (0:0:1). index_of() is the position in that order.

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "curveforge/gf.hpp"

namespace curveforge {

struct PPoint {
    Elem x = 0;
    Elem y = 0;
    Elem z = 1;
    auto operator<=>(const PPoint&) const = default;
};

struct PLine {
    Elem a = 0;
    Elem b = 0;
    Elem c = 1;
    auto operator<=>(const PLine&) const = default;
};

using Triple = std::array<Elem, 3>;

inline Triple coords(const PPoint& p) { return {p.x, p.y, p.z}; }
inline Triple coords(const PLine& l) { return {l.a, l.b, l.c}; }

/// Scales a nonzero triple so its leftmost nonzero entry is 1.
Triple normalize(const Field& f, Triple v);
PPoint make_point(const Field& f, Elem x, Elem y, Elem z);
PLine make_line(const Field& f, Elem a, Elem b, Elem c);

Elem dot(const Field& f, const Triple& u, const Triple& v);
Triple cross(const Field& f, const Triple& u, const Triple& v);

inline std::size_t num_points(const Field& f)
{
    const std::size_t q = f.q();
    return q * q + q + 1;
}

std::size_t index_of(const Field& f, const Triple& normalized);
inline std::size_t index_of(const Field& f, const PPoint& p) { return index_of(f, coords(p)); }
inline std::size_t index_of(const Field& f, const PLine& l) { return index_of(f, coords(l)); }
Triple triple_at(const Field& f, std::size_t index);
inline PPoint point_at(const Field& f, std::size_t i)
{
    auto t = triple_at(f, i);
    return {t[0], t[1], t[2]};
}
inline PLine line_at(const Field& f, std::size_t i)
{
    auto t = triple_at(f, i);
    return {t[0], t[1], t[2]};
}

std::vector<PPoint> enumerate_points(const Field& f);
std::vector<PLine> enumerate_lines(const Field& f);

inline bool incident(const Field& f, const PPoint& p, const PLine& l)
{
    return dot(f, coords(p), coords(l)) == 0;
}

/// Throws DomainError when P == Q.
PLine line_through(const Field& f, const PPoint& p, const PPoint& q);
/// Throws DomainError when l == m.
PPoint meet(const Field& f, const PLine& l, const PLine& m);
bool collinear(const Field& f, const PPoint& a, const PPoint& b, const PPoint& c);

/// The q + 1 rational points of l, in enumeration order.
std::vector<PPoint> points_on(const Field& f, const PLine& l);
/// The q + 1 rational lines through P, in enumeration order.
std::vector<PLine> pencil(const Field& f, const PPoint& p);

std::string to_string(const PPoint& p);
std::string to_string(const PLine& l);
/// Parses "(x:y:z)" and normalizes; rejects the zero triple.
PPoint parse_point(const Field& f, std::string_view text);
PLine parse_line(const Field& f, std::string_view text);

}  // namespace curveforge
