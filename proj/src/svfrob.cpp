#include "curveforge/svfrob.hpp"

#include "curveforge/error.hpp"

namespace curveforge {

FrobeniusReport frobenius_classical(const PlaneCurve& c)
{
    const HPoly& f = c.equation();
    const FieldPtr& fp = c.field_ptr();
    const unsigned q = c.field().q();
    const auto& g = c.gradient();
    HPoly crit = HPoly::monomial(fp, q, 0, 0) * g.dx + HPoly::monomial(fp, 0, q, 0) * g.dy +
                 HPoly::monomial(fp, 0, 0, q) * g.dz;
    FrobeniusReport r;
    r.criterion_zero = crit.is_zero();
    r.divides_criterion = r.criterion_zero || exact_divide(crit, f).has_value();
    r.classical = !r.divides_criterion;
    r.order = r.classical ? "1" : "eps2";
    return r;
}

BasicBound sv_basic_bound(std::int64_t d, std::int64_t q)
{
    if (d < 1) throw DomainError("degree must be >= 1");
    const std::int64_t twice = d * (d + q - 1);
    return {Rational(twice, 2), twice / 2};
}

std::vector<TangencyRow> tangency_table(const PlaneCurve& c)
{
    std::vector<TangencyRow> rows;
    for (const auto& p : c.points().points()) {
        if (c.is_singular_at(p)) throw PreconditionError("singular rational point " + to_string(p));
        auto t = tangent_and_multiplicity(c, p);
        rows.push_back({p, t.tangent, t.multiplicity});
    }
    return rows;
}

std::vector<PPoint> inflection_points(const PlaneCurve& c)
{
    std::vector<PPoint> out;
    for (const auto& row : tangency_table(c))
        if (!row.j2 || *row.j2 >= 3) out.push_back(row.point);
    return out;
}

SVReport sv_refined_bound(const PlaneCurve& c, std::optional<unsigned> nu, unsigned ext_degree, std::uint32_t cap)
{
    const auto sing = singular_points_check(c, ext_degree, cap);
    if (!sing.rational.empty()) throw PreconditionError("curve has a singular rational point " + to_string(sing.rational[0]));
    if (!sing.extension.empty())
        throw PreconditionError("curve has a singular point over GF(q^" + std::to_string(sing.extension[0].degree) + ")");

    SVReport r;
    r.d = c.degree();
    r.q = c.field().q();
    r.nonsingular_checked_up_to = ext_degree;
    r.caveat = "nonsingularity checked over GF(q^j) for j <= " + std::to_string(ext_degree) + " only";
    if (nu) {
        r.nu = *nu;
        r.nu_supplied = true;
    } else {
        if (!frobenius_classical(c).classical)
            throw PreconditionError("curve is Frobenius nonclassical; supply its Frobenius order");
        r.nu = 1;
    }
    const std::int64_t d = r.d, q = r.q, nu_v = r.nu;
    r.genus = (d - 1) * (d - 2) / 2;
    r.basic = sv_basic_bound(d, q);
    r.table = tangency_table(c);
    for (const auto& row : r.table) {
        if (!row.j2) throw PreconditionError("tangent at " + to_string(row.point) + " is a component of the curve");
        r.sum_deficiency += static_cast<std::int64_t>(*row.j2) - nu_v - 1;
    }
    r.points = c.count();
    r.rhs_twice = nu_v * (2 * r.genus - 2) + (q + 2) * d - r.sum_deficiency;
    r.rhs = Rational(r.rhs_twice, 2);
    const auto two_n = 2 * static_cast<std::int64_t>(r.points);
    r.attained = two_n == r.rhs_twice;
    r.bound_holds = two_n <= r.rhs_twice;
    return r;
}

}  // namespace curveforge
