#pragma once

// PGL(3, q) acting on point sets and curves.

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "curveforge/curve.hpp"
#include "curveforge/pointset.hpp"
#include "curveforge/projectivity.hpp"

namespace curveforge {

PointSet apply(const Projectivity& a, const PointSet& s);
PlaneCurve apply(const Projectivity& a, const PlaneCurve& c);
inline PPoint apply(const Projectivity& a, const PPoint& p) { return a.apply(p); }
inline PLine apply(const Projectivity& a, const PLine& l) { return a.apply(l); }

/// Extra condition a candidate projectivity must meet besides A(S1) = S2.
using WitnessFilter = std::function<bool(const Projectivity&)>;

struct EquivalenceStats {
    std::size_t frames_tried = 0;
    std::size_t set_matches = 0;
};

/// A projectivity A with A(S1) = S2 (and accepted by `filter` when given), or
/// nullopt. The search maps one ordered frame of S1's plane onto every
/// compatible frame of S2's plane, so it is exhaustive: nullopt means no such
/// projectivity exists.
std::optional<Projectivity> find_equivalence(const PointSet& s1, const PointSet& s2,
                                             const WitnessFilter& filter = nullptr,
                                             EquivalenceStats* stats = nullptr);

/// Witness A with A(S1) = S2, or nullopt.
std::optional<Projectivity> are_equivalent(const PointSet& s1, const PointSet& s2);
/// Witness A with F1 o A^{-1} proportional to F2, or nullopt.
std::optional<Projectivity> are_equivalent(const PlaneCurve& c1, const PlaneCurve& c2);

/// Brute force over all of PGL(3, q); for cross-checking on tiny fields.
std::optional<Projectivity> brute_force_equivalence(const PointSet& s1, const PointSet& s2,
                                                    const WitnessFilter& filter = nullptr);

struct FamilyClasses {
    unsigned q = 0;
    /// All (alpha, beta, gamma) with alpha = 1, nonzero entries and zero sum,
    /// ordered by beta.
    std::vector<std::array<Elem, 3>> triples;
    /// class_of[i] indexes into representatives.
    std::vector<std::size_t> class_of;
    /// Lexicographically smallest triple of each class.
    std::vector<std::array<Elem, 3>> representatives;

    std::size_t count() const { return representatives.size(); }
};

/// Projective equivalence classes of the curves alpha X^(q-1) + beta Y^(q-1) + gamma Z^(q-1)
/// with alpha + beta + gamma = 0. Throws DomainError when q < 4.
FamilyClasses count_family_classes(const FieldPtr& field);

}  // namespace curveforge
