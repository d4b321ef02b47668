#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curveforge/gf.hpp"
#include "curveforge/hpoly.hpp"
#include "curveforge/pointset.hpp"
#include "curveforge/projplane.hpp"

namespace curveforge {

/// A plane curve V(F) with its rational points and rational singular points
/// computed once at construction. Immutable afterwards.
class PlaneCurve {
public:
    /// Throws DomainError for F = 0 or deg F = 0.
    explicit PlaneCurve(HPoly equation);

    const HPoly& equation() const { return f_; }
    const Field& field() const { return f_.field(); }
    const FieldPtr& field_ptr() const { return f_.field_ptr(); }
    unsigned degree() const { return f_.degree(); }

    const PointSet& points() const { return points_; }
    /// N_q
    std::size_t count() const { return points_.size(); }
    bool contains(const PPoint& p) const { return points_.contains(p); }

    const Partials& gradient() const { return grad_; }
    bool is_singular_at(const PPoint& p) const;
    const std::vector<PPoint>& rational_singular_points() const { return singular_; }

private:
    HPoly f_;
    Partials grad_;
    PointSet points_;
    std::vector<PPoint> singular_;
};

/// Number of points of C over GF(q^m). Throws CapExceeded when q^m > cap.
std::uint64_t count_points_ext(const PlaneCurve& c, unsigned m, std::uint32_t cap = default_field_cap());

/// Rational lines dividing the equation, in enumeration order.
std::vector<PLine> linear_components(const PlaneCurve& c);

struct ExtensionSingularPoint {
    unsigned degree;  // found over GF(q^degree)
    Triple coords;    // normalized, element codes of GF(q^degree)
};

struct SingularityReport {
    std::vector<PPoint> rational;
    /// Singular points over GF(q^j), 2 <= j <= checked_up_to, not defined over GF(q).
    std::vector<ExtensionSingularPoint> extension;
    unsigned checked_up_to;

    bool nonsingular() const { return rational.empty() && extension.empty(); }
};

SingularityReport singular_points_check(const PlaneCurve& c, unsigned max_degree = 2,
                                        std::uint32_t cap = default_field_cap());

struct TangentInfo {
    PLine tangent;
    /// I(P, l . C); nullopt when l is a component of C.
    std::optional<unsigned> multiplicity;
};

/// Tangent at a nonsingular rational point P and the intersection multiplicity
/// of C with l (the tangent itself when l is omitted, giving j2(P)).
TangentInfo tangent_and_multiplicity(const PlaneCurve& c, const PPoint& p, std::optional<PLine> l = std::nullopt);

enum class Family { fermat, exceptional4, hermitian, homma_q, homma_q1, tallini, conic };

struct FamilyId {
    Family tag = Family::conic;
    /// fermat: (alpha, beta, gamma); tallini: (a, b, c); hermitian: {n}.
    std::vector<Elem> params;
    /// fermat only: require alpha + beta + gamma = 0.
    bool require_sum_zero = false;
};

std::optional<Family> parse_family(const std::string& name);
std::string family_name(Family f);

/// Tallini parameter condition: t^3 - (c t^2 + b t + a) has no root in GF(q).
bool tallini_condition(const Field& f, Elem a, Elem b, Elem c);

HPoly family_polynomial(const FamilyId& id, const FieldPtr& field);
PlaneCurve family_catalog(const FamilyId& id, const FieldPtr& field);

}  // namespace curveforge
