#include "curveforge/linsolve.hpp"

#include <algorithm>

namespace curveforge {

std::string to_string(SolutionKind k)
{
    switch (k) {
    case SolutionKind::unique: return "unique";
    case SolutionKind::affine: return "affine";
    case SolutionKind::inconsistent: return "inconsistent";
    }
    return "?";
}

Matrix<Elem> vandermonde(const Field& f, const std::vector<Elem>& nodes)
{
    Matrix<Elem> m(nodes.size(), std::vector<Elem>(nodes.size()));
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        Elem v = 1;
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            m[i][j] = v;
            v = f.mul(v, nodes[i]);
        }
    }
    return m;
}

SpectrumSystem k0_system(std::int64_t q)
{
    if (q < 4) throw DomainError("the system needs q >= 4");
    SpectrumSystem s;
    const std::int64_t sizes[3] = {q - 3, q - 2, q - 1};
    std::vector<Rational> ones, firsts, seconds;
    for (auto i : sizes) {
        ones.emplace_back(1);
        firsts.emplace_back(i);
        seconds.emplace_back(i * (i - 1));
    }
    s.matrix = {ones, firsts, seconds};
    s.rhs = {Rational(q * q + q + 1), Rational((q + 1) * (q - 1) * (q - 1)), Rational(q * (q - 2) * (q - 1) * (q - 1))};
    return s;
}

Solution<Rational> solve_k0_system(std::int64_t q)
{
    auto s = k0_system(q);
    return solve(RationalDomain{}, s.matrix, s.rhs);
}

namespace {

std::vector<Term> monomials(unsigned degree)
{
    std::vector<Term> out;
    for (unsigned i = degree + 1; i-- > 0;)
        for (unsigned j = degree - i + 1; j-- > 0;) out.push_back({i, j, degree - i - j, 1});
    return out;
}

Elem monomial_value(const Field& f, const Term& t, const Triple& v)
{
    return f.mul(f.mul(f.pow(v[0], t.i), f.pow(v[1], t.j)), f.pow(v[2], t.k));
}

std::optional<PLine> tangent_of(const HPoly& f, const PPoint& p)
{
    const auto g = partials(f);
    Triple grad{g.dx.evaluate(p), g.dy.evaluate(p), g.dz.evaluate(p)};
    if (grad == Triple{0, 0, 0}) return std::nullopt;
    auto t = normalize(f.field(), grad);
    return PLine{t[0], t[1], t[2]};
}

}  // namespace

HPoly noether_assemble(const NoetherProblem& p, const NoetherResult& r, const std::vector<Elem>& values)
{
    const FieldPtr& fp = p.g.field_ptr();
    const auto ma = monomials(r.degree_a);
    const auto mb = monomials(r.degree_b);
    const std::size_t offset = p.fixed_a ? 0 : ma.size();
    if (values.size() != offset + mb.size()) throw DomainError("wrong number of unknown values");
    HPoly a = p.fixed_a ? *p.fixed_a : HPoly(fp, r.degree_a);
    if (!p.fixed_a)
        for (std::size_t i = 0; i < ma.size(); ++i) a.set(ma[i].i, ma[i].j, ma[i].k, values[i]);
    HPoly b(fp, r.degree_b);
    for (std::size_t i = 0; i < mb.size(); ++i) b.set(mb[i].i, mb[i].j, mb[i].k, values[offset + i]);
    return a * p.g + b * p.h;
}

NoetherResult noether_reconstruct(const NoetherProblem& p, std::uint64_t enumeration_limit)
{
    const Field& f = p.g.field();
    if (!f.same_as(p.h.field())) throw FieldMismatch("G and H over different fields");
    if (p.g.is_zero() || p.h.is_zero()) throw PreconditionError("G and H must be nonzero");
    const unsigned dg = p.g.degree(), dh = p.h.degree(), dd = p.target_degree;
    if (dd < dg || dd < dh)
        throw PreconditionError("target degree " + std::to_string(dd) + " is below deg G or deg H");
    NoetherResult r;
    r.degree_a = dd - dg;
    r.degree_b = dd - dh;
    if (p.fixed_a && (p.fixed_a->degree() != r.degree_a || !p.fixed_a->field().same_as(f)))
        throw PreconditionError("fixed A must have degree deg F - deg G = " + std::to_string(r.degree_a));

    // No common component: no shared rational line, neither divides the other,
    // and no more rational intersections than Bezout allows.
    for (const auto& l : enumerate_lines(f))
        if (restrict_to_line(p.g, l).identically_zero() && restrict_to_line(p.h, l).identically_zero())
            throw PreconditionError("G and H share the component " + to_string(l));
    if ((dg <= dh && exact_divide(p.h, p.g)) || (dh <= dg && exact_divide(p.g, p.h)))
        throw PreconditionError("one of G, H divides the other");
    for (const auto& pt : enumerate_points(f))
        if (p.g.evaluate(pt) == 0 && p.h.evaluate(pt) == 0) r.intersection.push_back(pt);
    if (r.intersection.size() > static_cast<std::size_t>(dg) * dh)
        throw PreconditionError("G and H meet in more than deg G * deg H rational points");
    for (const auto& pt : r.intersection) {
        auto tg = tangent_of(p.g, pt), th = tangent_of(p.h, pt);
        if (!tg || !th) throw PreconditionError("intersection point " + to_string(pt) + " is singular on G or H");
        if (*tg == *th) throw PreconditionError("G and H are tangent at " + to_string(pt));
    }

    const auto ma = monomials(r.degree_a);
    const auto mb = monomials(r.degree_b);
    auto name = [](char which, const Term& t) {
        return std::string(1, which) + "[" + std::to_string(t.i) + "," + std::to_string(t.j) + "," +
               std::to_string(t.k) + "]";
    };
    if (!p.fixed_a)
        for (const auto& t : ma) r.unknowns.push_back(name('A', t));
    for (const auto& t : mb) r.unknowns.push_back(name('B', t));

    Matrix<Elem> m;
    std::vector<Elem> rhs;
    for (const auto& pt : p.vanishing) {
        const Triple v = coords(pt);
        const Elem gv = p.g.evaluate(v), hv = p.h.evaluate(v);
        std::vector<Elem> row;
        if (!p.fixed_a)
            for (const auto& t : ma) row.push_back(f.mul(monomial_value(f, t, v), gv));
        for (const auto& t : mb) row.push_back(f.mul(monomial_value(f, t, v), hv));
        m.push_back(std::move(row));
        rhs.push_back(p.fixed_a ? f.neg(f.mul(p.fixed_a->evaluate(v), gv)) : 0);
    }
    const std::size_t unknown_count = r.unknowns.size();
    if (m.empty()) {
        // No constraints: everything is free.
        r.solution.kind = SolutionKind::affine;
        r.solution.particular.assign(unknown_count, 0);
        for (std::size_t i = 0; i < unknown_count; ++i) {
            std::vector<Elem> e(unknown_count, 0);
            e[i] = 1;
            r.solution.nullspace.push_back(std::move(e));
        }
        if (unknown_count == 0) r.solution.kind = SolutionKind::unique;
    } else {
        r.solution = solve(GFDomain{&f}, m, rhs);
    }
    if (r.solution.kind == SolutionKind::inconsistent) {
        r.surviving = 0;
        return r;
    }

    // Re-verify the emitted solution against every vanishing constraint.
    const HPoly base = noether_assemble(p, r, r.solution.particular);
    for (const auto& pt : p.vanishing)
        if (base.evaluate(pt) != 0) throw Error("internal: reconstructed curve misses " + to_string(pt));

    auto is_zero_vec = [](const std::vector<Elem>& v) { return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; }); };
    const std::size_t dim = r.solution.nullspace.size();
    std::uint64_t total = 1;
    bool small = true;
    for (std::size_t i = 0; i < dim && small; ++i) {
        total *= f.q();
        small = total <= enumeration_limit;
    }
    if (!small) {
        r.forced_trivial = r.solution.kind == SolutionKind::unique && is_zero_vec(r.solution.particular);
        return r;
    }
    std::uint64_t survivors = 0;
    bool nonzero_survivor = false;
    std::vector<Elem> coeff(dim, 0);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (std::size_t i = 0; i < dim; ++i) {
            coeff[i] = static_cast<Elem>(c % f.q());
            c /= f.q();
        }
        std::vector<Elem> x = r.solution.particular;
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t u = 0; u < unknown_count; ++u)
                x[u] = f.add(x[u], f.mul(coeff[i], r.solution.nullspace[i][u]));
        const HPoly cand = noether_assemble(p, r, x);
        bool ok = true;
        for (const auto& pt : p.nonvanishing)
            if (cand.evaluate(pt) == 0) {
                ok = false;
                break;
            }
        if (!ok) continue;
        ++survivors;
        if (!is_zero_vec(x)) nonzero_survivor = true;
    }
    r.surviving = survivors;
    r.forced_trivial = !nonzero_survivor;
    return r;
}

}  // namespace curveforge
