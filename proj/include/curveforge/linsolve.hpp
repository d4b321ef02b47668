#pragma once

// Exact linear algebra over GF(q) and over the rationals, and Noether
// reconstruction of curves F = A G + B H through prescribed points.

#include <optional>
#include <string>
#include <vector>

#include "curveforge/error.hpp"
#include "curveforge/hpoly.hpp"
#include "curveforge/svfrob.hpp"

namespace curveforge {

template <class T>
using Matrix = std::vector<std::vector<T>>;

struct GFDomain {
    using value_type = Elem;
    const Field* field;

    Elem zero() const { return 0; }
    Elem add(Elem a, Elem b) const { return field->add(a, b); }
    Elem sub(Elem a, Elem b) const { return field->sub(a, b); }
    Elem mul(Elem a, Elem b) const { return field->mul(a, b); }
    Elem div(Elem a, Elem b) const { return field->div(a, b); }
    Elem neg(Elem a) const { return field->neg(a); }
    bool is_zero(Elem a) const { return a == 0; }
};

struct RationalDomain {
    using value_type = Rational;

    Rational zero() const { return 0; }
    Rational add(const Rational& a, const Rational& b) const { return a + b; }
    Rational sub(const Rational& a, const Rational& b) const { return a - b; }
    Rational mul(const Rational& a, const Rational& b) const { return a * b; }
    Rational div(const Rational& a, const Rational& b) const { return a / b; }
    Rational neg(const Rational& a) const { return -a; }
    bool is_zero(const Rational& a) const { return a == 0; }
};

enum class SolutionKind { unique, affine, inconsistent };
std::string to_string(SolutionKind k);

template <class T>
struct Solution {
    SolutionKind kind = SolutionKind::inconsistent;
    std::size_t rank = 0;
    /// One solution (empty when inconsistent).
    std::vector<T> particular;
    /// Basis of the kernel; empty for a unique solution.
    std::vector<std::vector<T>> nullspace;
};

/// Reduced row echelon form in place; pivots taken as the first nonzero entry
/// in each column. Returns the pivot columns.
template <class D>
std::vector<std::size_t> row_reduce(const D& dom, Matrix<typename D::value_type>& m, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && dom.is_zero(m[sel][col])) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        const auto piv = m[row][col];
        for (auto& v : m[row]) v = dom.div(v, piv);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || dom.is_zero(m[r][col])) continue;
            const auto factor = m[r][col];
            for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] = dom.sub(m[r][c], dom.mul(factor, m[row][c]));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class D>
Solution<typename D::value_type> solve(const D& dom, const Matrix<typename D::value_type>& a,
                                       const std::vector<typename D::value_type>& b)
{
    using T = typename D::value_type;
    if (a.size() != b.size()) throw DomainError("matrix has " + std::to_string(a.size()) + " rows but rhs has " +
                                                std::to_string(b.size()) + " entries");
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    Matrix<T> m;
    m.reserve(a.size());
    for (std::size_t r = 0; r < a.size(); ++r) {
        if (a[r].size() != cols) throw DomainError("matrix rows have different lengths");
        m.push_back(a[r]);
        m.back().push_back(b[r]);
    }
    const auto pivots = row_reduce(dom, m, cols);
    Solution<T> s;
    s.rank = pivots.size();
    for (std::size_t r = s.rank; r < m.size(); ++r)
        if (!dom.is_zero(m[r][cols])) return s;
    s.particular.assign(cols, dom.zero());
    for (std::size_t i = 0; i < pivots.size(); ++i) s.particular[pivots[i]] = m[i][cols];
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<T> v(cols, dom.zero());
        v[free] = T(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = dom.neg(m[i][free]);
        s.nullspace.push_back(std::move(v));
    }
    s.kind = s.nullspace.empty() ? SolutionKind::unique : SolutionKind::affine;
    return s;
}

template <class D>
std::size_t rank(const D& dom, Matrix<typename D::value_type> m)
{
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    return row_reduce(dom, m, cols).size();
}

template <class D>
typename D::value_type determinant(const D& dom, Matrix<typename D::value_type> m)
{
    using T = typename D::value_type;
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw DomainError("determinant of a non-square matrix");
    T det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && dom.is_zero(m[sel][col])) ++sel;
        if (sel == n) return dom.zero();
        if (sel != col) {
            std::swap(m[sel], m[col]);
            det = dom.neg(det);
        }
        det = dom.mul(det, m[col][col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (dom.is_zero(m[r][col])) continue;
            const T factor = dom.div(m[r][col], m[col][col]);
            for (std::size_t c = col; c < n; ++c) m[r][c] = dom.sub(m[r][c], dom.mul(factor, m[col][c]));
        }
    }
    return det;
}

/// Square Vandermonde matrix: row i is 1, x_i, x_i^2, ...
Matrix<Elem> vandermonde(const Field& f, const std::vector<Elem>& nodes);

/// Unknowns (a_{q-3}, a_{q-2}, a_{q-1}) of the three counting identities for a
/// ((q-1)^2, q-1)-arc whose lines all meet it in q-3, q-2 or q-1 points.
struct SpectrumSystem {
    Matrix<Rational> matrix;
    std::vector<Rational> rhs;
};
SpectrumSystem k0_system(std::int64_t q);
Solution<Rational> solve_k0_system(std::int64_t q);

struct NoetherProblem {
    HPoly g;
    HPoly h;
    unsigned target_degree = 0;
    std::vector<PPoint> vanishing;
    std::vector<PPoint> nonvanishing;
    /// When set, A is this polynomial and only B is unknown.
    std::optional<HPoly> fixed_a;
};

struct NoetherResult {
    /// Rational points of V(G) ∩ V(H), all checked transversal.
    std::vector<PPoint> intersection;
    unsigned degree_a = 0;
    unsigned degree_b = 0;
    /// Unknowns: coefficients of A (unless fixed), then of B, in canonical term order.
    std::vector<std::string> unknowns;
    Solution<Elem> solution;
    /// Solutions that also satisfy the nonvanishing constraints, when the
    /// solution space was small enough to enumerate.
    std::optional<std::uint64_t> surviving;
    /// Only the zero vector is admissible: F is forced to be the trivial
    /// combination (A G with the fixed A, or 0).
    bool forced_trivial = false;
};

/// Assembles F = A G + B H from a vector of unknowns.
HPoly noether_assemble(const NoetherProblem& p, const NoetherResult& r, const std::vector<Elem>& values);

/// Throws PreconditionError when G and H share a rational linear component, meet
/// in more than deg G * deg H rational points, cross non-transversally at a
/// rational point, or when the degrees are inconsistent.
NoetherResult noether_reconstruct(const NoetherProblem& p, std::uint64_t enumeration_limit = 1u << 20);

}  // namespace curveforge
