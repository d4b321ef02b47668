#pragma once

/**
 * @file hpoly.hpp
 * @brief Homogeneous polynomials in X, Y, Z over GF(q).
 *
 * An HPoly of degree d stores one coefficient per exponent triple (i, j, k) with
 * i + j + k = d, in the canonical triangular order
 *
 *     X^d, X^(d-1)Y, X^(d-1)Z, X^(d-2)Y^2, X^(d-2)YZ, X^(d-2)Z^2, ...
 *
 * (i descending, then j descending), which is also the order of the curve file
 * format. The degree is part of the value: the zero polynomial of degree 4 and
 * the zero polynomial of degree 2 are different objects, and is_zero() is the
 * only way to ask for zero.
 */

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "curveforge/gf.hpp"
#include "curveforge/projectivity.hpp"
#include "curveforge/projplane.hpp"

namespace curveforge {

struct Term {
    unsigned i;
    unsigned j;
    unsigned k;
    Elem coeff;
};

class HPoly {
public:
    HPoly(FieldPtr field, unsigned degree);

    static HPoly monomial(FieldPtr field, unsigned i, unsigned j, unsigned k, Elem coeff = 1);
    /// aX + bY + cZ
    static HPoly linear(FieldPtr field, Elem a, Elem b, Elem c);
    static HPoly from_terms(FieldPtr field, unsigned degree, const std::vector<Term>& terms);

    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    unsigned degree() const { return degree_; }
    bool is_zero() const;

    static std::size_t term_count(unsigned degree) { return (degree + 1u) * (degree + 2u) / 2u; }
    static std::size_t term_index(unsigned degree, unsigned i, unsigned j)
    {
        const std::size_t a = degree - i;
        return a * (a + 1) / 2 + (a - j);
    }

    Elem coeff(unsigned i, unsigned j, unsigned k) const;
    void set(unsigned i, unsigned j, unsigned k, Elem c);
    /// Adds c to the coefficient of X^i Y^j Z^k.
    void accumulate(unsigned i, unsigned j, unsigned k, Elem c);

    /// Nonzero terms in canonical order.
    std::vector<Term> terms() const;
    const std::vector<Elem>& dense() const { return coeffs_; }

    Elem evaluate(const Triple& v) const;
    Elem evaluate(const PPoint& p) const { return evaluate(coords(p)); }

    HPoly operator+(const HPoly& o) const;
    HPoly operator-(const HPoly& o) const;
    HPoly operator*(const HPoly& o) const;
    HPoly scaled(Elem c) const;
    HPoly pow(unsigned e) const;

    /// Formal partial derivative in variable 0 (X), 1 (Y) or 2 (Z).
    HPoly partial(int var) const;

    /// Same polynomial with coefficients pushed through a field embedding.
    HPoly embed(const Embedding& e) const;

    /// True if o = c * this for some nonzero c (same degree required).
    bool proportional_to(const HPoly& o) const;
    /// Scales so the first nonzero coefficient in canonical order is 1.
    HPoly monic() const;

    bool operator==(const HPoly& o) const;

    /// Human-readable form, e.g. "X^4 + 3*Z^4".
    std::string to_string() const;

private:
    void check_same(const HPoly& o) const;

    FieldPtr field_;
    unsigned degree_;
    std::vector<Elem> coeffs_;
};

struct Partials {
    HPoly dx;
    HPoly dy;
    HPoly dz;
};

Partials partials(const HPoly& f);

/// Dense univariate polynomial, trailing zeros trimmed.
class UniPoly {
public:
    UniPoly(FieldPtr field, std::vector<Elem> coeffs);

    const Field& field() const { return *field_; }
    const std::vector<Elem>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    Elem evaluate(Elem t) const;
    /// Multiplicity of t as a root; 0 if not a root. The zero polynomial is rejected.
    unsigned root_multiplicity(Elem t) const;
    /// Quotient by (x - t); t must be a root.
    UniPoly deflate(Elem t) const;
    UniPoly embed(const Embedding& e) const;

private:
    FieldPtr field_;
    std::vector<Elem> coeffs_;
};

/// F restricted to a line l, parameterized as s*A + t*B where A and B are the
/// first two rational points of l in enumeration order. `poly` is the binary
/// form at the chart s = 1; B sits at the parameter infinity.
struct LineRestriction {
    UniPoly poly;
    unsigned degree;
    Triple base;       // A, parameter t = 0
    Triple direction;  // B, parameter infinity

    bool identically_zero() const { return poly.is_zero(); }
    unsigned infinity_multiplicity() const;
    /// Parameter of a point on the line; nullopt for B.
    std::optional<Elem> parameter_of(const Triple& p) const;
    /// Intersection multiplicity of the line with V(F) at p (p on the line).
    /// nullopt when the line is a component of the curve.
    std::optional<unsigned> multiplicity_at(const Triple& p) const;
};

LineRestriction restrict_to_line(const HPoly& f, const PLine& l);
/// Restriction to a line spanned by two explicit points (used over extensions).
LineRestriction restrict_to_span(const HPoly& f, const Triple& base, const Triple& direction);

/// Q with F = Q * G, or nullopt if G does not divide F. Throws for G = 0.
std::optional<HPoly> exact_divide(const HPoly& f, const HPoly& g);

/// F o A^{-1}: the zero set of the result is the A-image of the zero set of F.
HPoly substitute(const HPoly& f, const Projectivity& a);

/// Curve file: header "q d", then "i j k c" per nonzero term.
void write_curve(std::ostream& out, const HPoly& f);
HPoly read_curve(std::istream& in, std::uint32_t cap = default_field_cap());

}  // namespace curveforge
