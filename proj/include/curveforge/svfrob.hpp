#pragma once

// Frobenius classicality and the Stöhr-Voloch bounds for plane curves.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "curveforge/curve.hpp"

namespace curveforge {

using Rational = boost::multiprecision::cpp_rational;

struct FrobeniusReport {
    /// Frobenius order 1.
    bool classical = true;
    /// F divides X^q F_X + Y^q F_Y + Z^q F_Z.
    bool divides_criterion = false;
    /// The criterion polynomial itself vanished (all partials zero).
    bool criterion_zero = false;
    /// Frobenius order as text: "1", or "eps2" when nonclassical (not evaluated).
    std::string order;
};

/// Absolute irreducibility of C is assumed, not checked.
FrobeniusReport frobenius_classical(const PlaneCurve& c);

struct BasicBound {
    Rational value;       // d (d + q - 1) / 2
    std::int64_t floor;
};

BasicBound sv_basic_bound(std::int64_t d, std::int64_t q);

struct TangencyRow {
    PPoint point;
    PLine tangent;
    /// nullopt when the tangent line is a component of the curve.
    std::optional<unsigned> j2;
};

struct SVReport {
    unsigned d = 0;
    unsigned q = 0;
    std::int64_t genus = 0;  // (d-1)(d-2)/2
    unsigned nu = 1;
    bool nu_supplied = false;
    BasicBound basic;
    std::int64_t sum_deficiency = 0;  // sum of A(P) = j2(P) - nu - 1 over rational points
    std::int64_t rhs_twice = 0;       // nu(2g-2) + (q+2)d - sum A(P)
    Rational rhs;                     // rhs_twice / 2
    std::uint64_t points = 0;         // N_q
    std::vector<TangencyRow> table;
    bool attained = false;            // 2 N_q == rhs_twice
    bool bound_holds = false;         // 2 N_q <= rhs_twice
    unsigned nonsingular_checked_up_to = 0;
    std::string caveat;
};

/// Refined bound for a curve checked nonsingular over GF(q^j), j <= ext_degree.
/// Without `nu` the curve must be Frobenius classical. Throws
/// PreconditionError for singular points, a nonclassical curve without `nu`, or
/// a tangent line that is a component.
SVReport sv_refined_bound(const PlaneCurve& c, std::optional<unsigned> nu = std::nullopt, unsigned ext_degree = 2,
                          std::uint32_t cap = default_field_cap());

/// j2 at every rational point; throws PreconditionError at a singular point.
std::vector<TangencyRow> tangency_table(const PlaneCurve& c);

/// Rational points with j2 >= 3 (including points whose tangent is a component).
std::vector<PPoint> inflection_points(const PlaneCurve& c);

}  // namespace curveforge
