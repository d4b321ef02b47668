#pragma once

// Line-intersection statistics of point sets in PG(2, q).

#include <cstdint>
#include <string>
#include <vector>

#include "curveforge/curve.hpp"
#include "curveforge/pointset.hpp"

namespace curveforge {

struct ArcSpectrum {
    unsigned q = 0;
    /// a[i] = number of lines meeting the set in exactly i points, i = 0..q+1.
    std::vector<std::uint64_t> a;
    std::size_t k = 0;  // set size
    unsigned n = 0;     // largest line intersection
    unsigned k0 = 0;    // smallest i with a[i] != 0

    std::uint64_t at(unsigned i) const { return i < a.size() ? a[i] : 0; }
    bool operator==(const ArcSpectrum&) const = default;
};

/// |l ∩ S| for every line l, indexed like the lines.
std::vector<unsigned> line_counts(const PointSet& s);

ArcSpectrum spectrum(const PointSet& s);

struct PointType {
    /// psi[i] = number of i-lines through the point, i = 0..q+1.
    std::vector<unsigned> psi;

    unsigned at(unsigned i) const { return i < psi.size() ? psi[i] : 0; }
    /// "i^r" for every class with r > 0, i descending, space separated.
    std::string render() const;
    bool operator==(const PointType&) const = default;
};

PointType point_type(const PointSet& s, const PPoint& p);
/// Same, reusing precomputed line_counts(s).
PointType point_type(const Field& f, const std::vector<unsigned>& counts, const PPoint& p);

/// Rational points of the plane not on the curve.
PointSet complement_zset(const PlaneCurve& c);

enum class CheckStatus { pass, fail, not_applicable };
std::string to_string(CheckStatus s);

struct LemmaCheck {
    std::string name;
    CheckStatus status;
    std::string detail;
};

struct ArcLemmaReport {
    ArcSpectrum spectrum;
    std::vector<LemmaCheck> checks;

    /// No check failed (not-applicable entries are ignored).
    bool ok() const;
    const LemmaCheck* find(const std::string& name) const;
};

/// Executable forms of the counting lemmas for a point set S of size k.
///
/// Identities that are pure double counting are checked for every set. The
/// predicates that need q >= 5 and S a ((q-1)^2, n)-arc with n <= q-1 are reported
/// as not applicable otherwise.
///
///   line-sum             sum a_i = q^2 + q + 1
///   incidence-sum        sum i a_i = k (q + 1)
///   pair-sum             sum i(i-1) a_i = k (k - 1)
///   pencil-size          every point lies on q + 1 lines
///   pencil-count         1 + sum psi_i (i - 1) = k on S, sum i psi_i = k off S
///   two-line-bound       i + j >= k + 1 - (q-1)(n-1) for two lines through P in S
///   psi-top-bound        psi_{q-1}(P) >= 3 on S
///   top-line-count       a_{q-1} >= 3(q-1)
///   psi-top-type         psi_{q-1}(P) = 3 forces type (q-1)^3 (q-2)^(q-2)
///   k0-bound             k0 <= q - 4
///   k0-identity          sum_{i>=k0} (i-k0)(i-q+2) a_i = 3(q-1)^2 - 3 k0
///   k0-inequality        (q-k0-1) a_{q-1} >= 3(q-1)^2 - 3 k0
ArcLemmaReport verify_arc_lemmas(const PointSet& s);

}  // namespace curveforge
