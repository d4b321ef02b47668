#include "curveforge/curve.hpp"

#include "curveforge/error.hpp"

namespace curveforge {

namespace {

std::vector<std::uint8_t> zero_membership(const HPoly& f)
{
    const Field& fld = f.field();
    const std::size_t n = num_points(fld);
    std::vector<std::uint8_t> m(n, 0);
    for (std::size_t i = 0; i < n; ++i) m[i] = f.evaluate(triple_at(fld, i)) == 0 ? 1 : 0;
    return m;
}

FieldPtr extension_of(const Field& base, unsigned m, std::uint32_t cap)
{
    if (m < 1) throw DomainError("extension degree must be >= 1");
    std::uint64_t order = 1;
    for (unsigned i = 0; i < m; ++i) {
        order *= base.q();
        if (order > cap)
            throw CapExceeded("GF(" + std::to_string(base.q()) + "^" + std::to_string(m) + ") exceeds cap " +
                              std::to_string(cap));
    }
    return make_field(base.p(), base.h() * m, cap);
}

bool defined_over_base(const Field& ext, const Field& base, const Triple& v)
{
    for (Elem c : v)
        if (ext.pow(c, base.q()) != c) return false;
    return true;
}

void require_q(const Field& f, std::uint64_t q, const char* what)
{
    if (f.q() != q) throw DomainError(std::string(what) + " is defined over GF(" + std::to_string(q) + ") only");
}

}  // namespace

PlaneCurve::PlaneCurve(HPoly equation)
    : f_(std::move(equation)),
      grad_(partials(f_)),
      points_(f_.field_ptr())
{
    if (f_.degree() < 1) throw DomainError("a plane curve needs degree >= 1");
    if (f_.is_zero()) throw DomainError("the zero polynomial does not define a curve");
    points_ = PointSet::from_membership(f_.field_ptr(), zero_membership(f_));
    for (const auto& p : points_.points())
        if (is_singular_at(p)) singular_.push_back(p);
}

bool PlaneCurve::is_singular_at(const PPoint& p) const
{
    return f_.evaluate(p) == 0 && grad_.dx.evaluate(p) == 0 && grad_.dy.evaluate(p) == 0 &&
           grad_.dz.evaluate(p) == 0;
}

std::uint64_t count_points_ext(const PlaneCurve& c, unsigned m, std::uint32_t cap)
{
    FieldPtr ext = extension_of(c.field(), m, cap);
    HPoly f = c.equation().embed(embed(c.field_ptr(), ext));
    const std::size_t n = num_points(*ext);
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < n; ++i) count += f.evaluate(triple_at(*ext, i)) == 0;
    return count;
}

std::vector<PLine> linear_components(const PlaneCurve& c)
{
    const Field& f = c.field();
    const unsigned d = c.degree();
    std::vector<PLine> out;
    for (const auto& l : enumerate_lines(f)) {
        // A component contains every rational point of the line.
        if (c.points().count_on(l) != f.q() + 1u) continue;
        // Degree-d binary form vanishing at q+1 > d points is zero.
        if (d <= f.q() || restrict_to_line(c.equation(), l).identically_zero()) out.push_back(l);
    }
    return out;
}

SingularityReport singular_points_check(const PlaneCurve& c, unsigned max_degree, std::uint32_t cap)
{
    if (max_degree < 1) throw DomainError("max extension degree must be >= 1");
    SingularityReport report{c.rational_singular_points(), {}, max_degree};
    for (unsigned j = 2; j <= max_degree; ++j) {
        FieldPtr ext = extension_of(c.field(), j, cap);
        Embedding e = embed(c.field_ptr(), ext);
        HPoly f = c.equation().embed(e);
        Partials g = partials(f);
        const std::size_t n = num_points(*ext);
        for (std::size_t i = 0; i < n; ++i) {
            Triple v = triple_at(*ext, i);
            if (f.evaluate(v) != 0 || g.dx.evaluate(v) != 0 || g.dy.evaluate(v) != 0 || g.dz.evaluate(v) != 0)
                continue;
            bool seen_lower = defined_over_base(*ext, c.field(), v);
            for (const auto& prev : report.extension)
                if (!seen_lower && j % prev.degree == 0) {
                    // A point over a smaller extension shows up again here.
                    FieldPtr low = extension_of(c.field(), prev.degree, cap);
                    Embedding le = embed(low, ext);
                    Triple lifted{le(prev.coords[0]), le(prev.coords[1]), le(prev.coords[2])};
                    if (lifted == v) seen_lower = true;
                }
            if (!seen_lower) report.extension.push_back({j, v});
        }
    }
    return report;
}

TangentInfo tangent_and_multiplicity(const PlaneCurve& c, const PPoint& p, std::optional<PLine> l)
{
    const Field& f = c.field();
    if (!c.contains(p)) throw PreconditionError(to_string(p) + " is not on the curve");
    const auto& g = c.gradient();
    Triple grad{g.dx.evaluate(p), g.dy.evaluate(p), g.dz.evaluate(p)};
    if (grad[0] == 0 && grad[1] == 0 && grad[2] == 0)
        throw PreconditionError(to_string(p) + " is a singular point of the curve");
    auto t = normalize(f, grad);
    PLine tangent{t[0], t[1], t[2]};
    PLine line = l.value_or(tangent);
    if (!incident(f, p, line)) throw PreconditionError("line " + to_string(line) + " does not pass through " + to_string(p));
    auto r = restrict_to_line(c.equation(), line);
    return {tangent, r.multiplicity_at(coords(p))};
}

std::optional<Family> parse_family(const std::string& name)
{
    if (name == "fermat") return Family::fermat;
    if (name == "exceptional4") return Family::exceptional4;
    if (name == "hermitian") return Family::hermitian;
    if (name == "homma_q") return Family::homma_q;
    if (name == "homma_q1") return Family::homma_q1;
    if (name == "tallini") return Family::tallini;
    if (name == "conic") return Family::conic;
    return std::nullopt;
}

std::string family_name(Family f)
{
    switch (f) {
    case Family::fermat: return "fermat";
    case Family::exceptional4: return "exceptional4";
    case Family::hermitian: return "hermitian";
    case Family::homma_q: return "homma_q";
    case Family::homma_q1: return "homma_q1";
    case Family::tallini: return "tallini";
    case Family::conic: return "conic";
    }
    return "?";
}

bool tallini_condition(const Field& f, Elem a, Elem b, Elem c)
{
    // A cubic is irreducible over GF(q) iff it has no root there.
    for (Elem t = 0; t < f.q(); ++t) {
        Elem t2 = f.mul(t, t);
        Elem v = f.sub(f.mul(t2, t), f.add(f.add(f.mul(c, t2), f.mul(b, t)), a));
        if (v == 0) return false;
    }
    return true;
}

HPoly family_polynomial(const FamilyId& id, const FieldPtr& field)
{
    const Field& f = *field;
    const unsigned q = f.q();
    const Elem one = 1;
    const Elem minus_one = f.neg(1);
    auto need_params = [&](std::size_t n) {
        if (id.params.size() != n)
            throw DomainError(family_name(id.tag) + " takes " + std::to_string(n) + " parameters, got " +
                              std::to_string(id.params.size()));
        for (Elem v : id.params)
            if (v >= f.q()) throw DomainError("family parameter out of range for GF(" + std::to_string(q) + ")");
    };

    switch (id.tag) {
    case Family::fermat: {
        need_params(3);
        const Elem al = id.params[0], be = id.params[1], ga = id.params[2];
        if (al == 0 || be == 0 || ga == 0) throw DomainError("fermat parameters must be nonzero");
        if (id.require_sum_zero && f.add(f.add(al, be), ga) != 0)
            throw DomainError("fermat parameters must satisfy alpha + beta + gamma = 0");
        if (q < 3) throw DomainError("fermat family needs q >= 3");
        return HPoly::from_terms(field, q - 1, {{q - 1, 0, 0, al}, {0, q - 1, 0, be}, {0, 0, q - 1, ga}});
    }
    case Family::exceptional4: {
        need_params(0);
        require_q(f, 4, "the exceptional quartic");
        return HPoly::from_terms(field, 4,
                                 {{4, 0, 0, one}, {0, 4, 0, one}, {0, 0, 4, one}, {2, 2, 0, one}, {0, 2, 2, one},
                                  {2, 0, 2, one}, {2, 1, 1, one}, {1, 2, 1, one}, {1, 1, 2, one}});
    }
    case Family::hermitian: {
        if (id.params.size() != 1) throw DomainError("hermitian takes one parameter n");
        const unsigned n = id.params[0];
        if (n < 2 || static_cast<std::uint64_t>(n) * n != q)
            throw DomainError("hermitian(n) is defined over GF(n^2); got n = " + std::to_string(n) + ", q = " +
                              std::to_string(q));
        return HPoly::from_terms(field, n + 1, {{n + 1, 0, 0, one}, {0, n + 1, 0, one}, {0, 0, n + 1, one}});
    }
    case Family::homma_q: {
        need_params(0);
        // X^q - X Z^(q-1) + Y^(q-1) Z - Z^q
        return HPoly::from_terms(field, q,
                                 {{q, 0, 0, one}, {1, 0, q - 1, minus_one}, {0, q - 1, 1, one}, {0, 0, q, minus_one}});
    }
    case Family::homma_q1: {
        need_params(0);
        // X^(q+1) - X^2 Z^(q-1) + Y^q Z - Y Z^q
        return HPoly::from_terms(
            field, q + 1, {{q + 1, 0, 0, one}, {2, 0, q - 1, minus_one}, {0, q, 1, one}, {0, 1, q, minus_one}});
    }
    case Family::tallini: {
        need_params(3);
        const Elem a = id.params[0], b = id.params[1], c = id.params[2];
        if (!tallini_condition(f, a, b, c))
            throw DomainError("tallini parameters violate the irreducibility condition");
        // Y(Y^q Z - Y Z^q) + Z(Z^q X - Z X^q) + (aX + bY + cZ)(X^q Y - X Y^q)
        HPoly g(field, q + 2);
        g.accumulate(0, q + 1, 1, one);
        g.accumulate(0, 2, q, minus_one);
        g.accumulate(1, 0, q + 1, one);
        g.accumulate(q, 0, 2, minus_one);
        HPoly lin = HPoly::linear(field, a, b, c);
        HPoly w = HPoly::from_terms(field, q + 1, {{q, 1, 0, one}, {1, q, 0, minus_one}});
        return g + lin * w;
    }
    case Family::conic:
        need_params(0);
        return HPoly::from_terms(field, 2, {{2, 0, 0, one}, {0, 1, 1, one}});
    }
    throw DomainError("unknown family");
}

PlaneCurve family_catalog(const FamilyId& id, const FieldPtr& field)
{
    return PlaneCurve(family_polynomial(id, field));
}

}  // namespace curveforge
