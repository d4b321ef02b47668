#include <doctest.h>

#include "curveforge/curve.hpp"
#include "curveforge/error.hpp"
#include "curveforge/bundled_data.hpp"
#include "oracles.hpp"

using namespace curveforge;

namespace {

PlaneCurve fermat(const FieldPtr& f, Elem a, Elem b, Elem c)
{
    return family_catalog({Family::fermat, {a, b, c}, true}, f);
}

/// The first member (1, b, -1-b) of the family.
PlaneCurve first_fermat(const FieldPtr& f)
{
    for (Elem b = 1;; ++b)
        if (const Elem g = f->neg(f->add(1, b)); g != 0) return fermat(f, 1, b, g);
}

HPoly product_of_lines(const FieldPtr& f, const std::vector<Triple>& lines)
{
    HPoly out = HPoly::monomial(f, 0, 0, 0, 1);
    for (const auto& l : lines) out = out * HPoly::linear(f, l[0], l[1], l[2]);
    return out;
}

std::size_t brute_count(const HPoly& f)
{
    std::size_t n = 0;
    for (const auto& v : oracle::plane_points(f.field())) n += oracle::evaluate(f, v) == 0;
    return n;
}

}  // namespace

TEST_CASE("rational point counts")
{
    CHECK(fermat(make_field_of_order(5), 1, 1, 3).count() == 16);
    CHECK(fermat(make_field_of_order(7), 1, 1, 5).count() == 36);
    auto f4 = make_field_of_order(4);
    CHECK(family_catalog({Family::exceptional4, {}}, f4).count() == 14);
    CHECK(family_catalog({Family::hermitian, {2}}, f4).count() == 9);
    auto f5 = make_field_of_order(5);
    const auto hq = family_catalog({Family::homma_q, {}}, f5);
    CHECK(hq.count() == 21);
    CHECK(hq.equation() == HPoly::from_terms(f5, 5, {{5, 0, 0, 1}, {1, 0, 4, 4}, {0, 4, 1, 1}, {0, 0, 5, 4}}));
    CHECK(family_catalog({Family::homma_q1, {}}, f5).count() == 26);
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u})
        CHECK(family_catalog({Family::conic, {}}, make_field_of_order(q)).count() == q + 1);
}

TEST_CASE("point sets agree with brute-force evaluation")
{
    std::mt19937_64 rng(41);
    for (unsigned q : {2u, 3u, 4u, 5u, 7u}) {
        auto f = make_field_of_order(q);
        for (int trial = 0; trial < 15; ++trial) {
            const PlaneCurve c(oracle::random_poly(rng, f, 1 + trial % 5));
            CHECK(c.count() == brute_count(c.equation()));
            for (const auto& p : c.points().points()) CHECK(oracle::evaluate(c.equation(), coords(p)) == 0);
        }
    }
}

TEST_CASE("extension counts")
{
    const auto conic = family_catalog({Family::conic, {}}, make_field_of_order(5));
    CHECK(count_points_ext(conic, 2) == 26);
    CHECK(count_points_ext(conic, 1) == 6);

    // Against brute force over the extension with embedded coefficients.
    std::mt19937_64 rng(43);
    for (auto [q, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {4, 2}}) {
        auto f = make_field_of_order(q);
        std::uint64_t big_q = 1;
        for (unsigned i = 0; i < m; ++i) big_q *= q;
        auto big = make_field_of_order(big_q);
        const auto e = embed(f, big);
        for (int trial = 0; trial < 6; ++trial) {
            const PlaneCurve c(oracle::random_poly(rng, f, 1 + trial % 4));
            CHECK(count_points_ext(c, m) == brute_count(c.equation().embed(e)));
        }
    }
    CHECK_THROWS_AS(count_points_ext(conic, 8), CapExceeded);
}

TEST_CASE("extension counts are monotone along divisibility")
{
    auto f2 = make_field_of_order(2);
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 10; ++trial) {
        const PlaneCurve c(oracle::random_poly(rng, f2, 2 + trial % 3));
        const auto n1 = count_points_ext(c, 1), n2 = count_points_ext(c, 2), n3 = count_points_ext(c, 3),
                   n4 = count_points_ext(c, 4), n6 = count_points_ext(c, 6);
        CHECK(n1 <= n2);
        CHECK(n1 <= n3);
        CHECK(n2 <= n4);
        CHECK(n2 <= n6);
        CHECK(n3 <= n6);
    }
}

TEST_CASE("rational linear components")
{
    auto f7 = make_field_of_order(7);
    const auto comps = linear_components(PlaneCurve(data::sextic_g(f7)));
    CHECK(comps.size() == 6);
    CHECK(std::find(comps.begin(), comps.end(), make_line(*f7, 0, 1, 0)) != comps.end());
    CHECK(std::find(comps.begin(), comps.end(), make_line(*f7, 0, 0, 1)) != comps.end());

    for (unsigned q : {5u, 7u, 8u, 9u}) CHECK(linear_components(first_fermat(make_field_of_order(q))).empty());

    auto f5 = make_field_of_order(5);
    const auto xy = linear_components(PlaneCurve(product_of_lines(f5, {{1, 0, 0}, {0, 1, 0}})));
    CHECK(xy == std::vector<PLine>{make_line(*f5, 1, 0, 0), make_line(*f5, 0, 1, 0)});

    // Degree > q: a curve can contain every point of a line without containing the line.
    const auto tallini = family_catalog({Family::tallini, {1, 0, 2}}, make_field_of_order(3));
    CHECK(tallini.count() == 13);
    CHECK(linear_components(tallini).empty());
}

TEST_CASE("singular points")
{
    for (unsigned q : {5u, 7u, 8u, 9u}) {
        const auto c = first_fermat(make_field_of_order(q));
        CHECK(c.rational_singular_points().empty());
        CHECK(singular_points_check(c, 2).nonsingular());
    }
    auto f5 = make_field_of_order(5);
    const PlaneCurve xy(product_of_lines(f5, {{1, 0, 0}, {0, 1, 0}}));
    CHECK(xy.rational_singular_points() == std::vector<PPoint>{make_point(*f5, 0, 0, 1)});
    const PlaneCurve cusp(HPoly::from_terms(f5, 3, {{0, 2, 1, 1}, {3, 0, 0, 4}}));
    CHECK(cusp.rational_singular_points() == std::vector<PPoint>{make_point(*f5, 0, 0, 1)});
    CHECK(cusp.is_singular_at(make_point(*f5, 0, 0, 1)));

    // X^2 + Y^2 over GF(3): two conjugate lines meeting at the rational point (0:0:1).
    auto f3 = make_field_of_order(3);
    const PlaneCurve pair(HPoly::from_terms(f3, 2, {{2, 0, 0, 1}, {0, 2, 0, 1}}));
    CHECK(pair.rational_singular_points() == std::vector<PPoint>{make_point(*f3, 0, 0, 1)});
    // Two smooth conics over GF(3) meeting only at the conjugate pair (+-i : 1 : 0).
    const PlaneCurve quartic(HPoly::from_terms(f3, 2, {{2, 0, 0, 1}, {0, 2, 0, 1}, {0, 0, 2, 1}}) *
                           HPoly::from_terms(f3, 2, {{2, 0, 0, 1}, {0, 2, 0, 1}, {0, 0, 2, 2}}));
    CHECK(quartic.rational_singular_points().empty());
    CHECK(singular_points_check(quartic, 1).nonsingular());
    const auto rep = singular_points_check(quartic, 2);
    CHECK_FALSE(rep.nonsingular());
    CHECK(rep.checked_up_to == 2);
    CHECK(rep.extension.size() == 2);
    for (const auto& s : rep.extension) CHECK(s.degree == 2);
}

TEST_CASE("tangents and intersection multiplicities")
{
    for (unsigned q : {3u, 5u, 7u}) {
        auto f = make_field_of_order(q);
        const auto conic = family_catalog({Family::conic, {}}, f);
        for (const auto& p : conic.points().points()) CHECK(tangent_and_multiplicity(conic, p).multiplicity == 2u);
    }
    auto f5 = make_field_of_order(5);
    const auto c = fermat(f5, 1, 1, 3);
    CHECK(tangent_and_multiplicity(c, make_point(*f5, 1, 1, 1)).multiplicity == 2u);

    auto f4 = make_field_of_order(4);
    const auto herm = family_catalog({Family::hermitian, {2}}, f4);
    for (const auto& p : herm.points().points()) CHECK(tangent_and_multiplicity(herm, p).multiplicity == 3u);

    // A secant through P meets with multiplicity 1, a line not through P is rejected.
    const auto p = make_point(*f5, 1, 1, 1);
    const auto tan = tangent_and_multiplicity(c, p).tangent;
    for (const auto& l : pencil(*f5, p))
        if (l != tan) CHECK(tangent_and_multiplicity(c, p, l).multiplicity == 1u);
    CHECK_THROWS_AS(tangent_and_multiplicity(c, p, make_line(*f5, 1, 0, 0)), PreconditionError);
    CHECK_THROWS_AS(tangent_and_multiplicity(c, make_point(*f5, 1, 0, 0)), PreconditionError);
    const PlaneCurve xy(product_of_lines(f5, {{1, 0, 0}, {0, 1, 0}}));
    CHECK_THROWS_AS(tangent_and_multiplicity(xy, make_point(*f5, 0, 0, 1)), PreconditionError);
    // The tangent of a line is the line itself, which is a component.
    CHECK_FALSE(tangent_and_multiplicity(xy, make_point(*f5, 0, 1, 0)).multiplicity.has_value());
}

TEST_CASE("the Fermat family is exactly the plane minus the triangle")
{
    for (unsigned q : {5u, 7u, 8u, 9u}) {
        auto f = make_field_of_order(q);
        for (Elem a = 1; a < q; ++a)
            for (Elem b = 1; b < q; ++b)
                for (Elem g = 1; g < q; ++g) {
                    const auto c = family_catalog({Family::fermat, {a, b, g}, false}, f);
                    bool off_triangle = true;
                    for (std::size_t i = 0; i < num_points(*f); ++i) {
                        const Triple t = triple_at(*f, i);
                        const bool expect = t[0] && t[1] && t[2];
                        if (c.points().contains_index(i) != expect) off_triangle = false;
                    }
                    REQUIRE(off_triangle == (f->add(f->add(a, b), g) == 0));
                }
    }
}

TEST_CASE("Sziklai bound over the catalog")
{
    for (unsigned q : {4u, 5u, 7u, 8u, 9u}) {
        auto f = make_field_of_order(q);
        std::vector<PlaneCurve> curves;
        curves.push_back(family_catalog({Family::conic, {}}, f));
        curves.push_back(family_catalog({Family::homma_q, {}}, f));
        curves.push_back(family_catalog({Family::homma_q1, {}}, f));
        for (Elem b = 1; b < q; ++b) {
            const Elem g = f->neg(f->add(1, b));
            if (g) curves.push_back(fermat(f, 1, b, g));
        }
        for (const auto& c : curves) {
            if (!linear_components(c).empty()) continue;
            CHECK(c.count() <= (c.degree() - 1) * q + 1);
            if (c.count() == (c.degree() - 1) * q + 1) CHECK(c.rational_singular_points().empty());
        }
    }
    const auto ex = family_catalog({Family::exceptional4, {}}, make_field_of_order(4));
    CHECK(ex.count() == 14);
    CHECK(ex.count() > (ex.degree() - 1) * 4 + 1);
}

TEST_CASE("Tallini condition and curves")
{
    for (unsigned q : {3u, 4u, 5u}) {
        auto f = make_field_of_order(q);
        for (Elem a = 0; a < q; ++a)
            for (Elem b = 0; b < q; ++b)
                for (Elem c = 0; c < q; ++c) {
                    bool root = false;
                    for (Elem t = 0; t < q; ++t) {
                        const Elem cubic = f->sub(f->pow(t, 3), f->add(f->mul(c, f->mul(t, t)), f->add(f->mul(b, t), a)));
                        root = root || cubic == 0;
                    }
                    REQUIRE(tallini_condition(*f, a, b, c) == !root);
                }
    }
    auto f3 = make_field_of_order(3);
    const auto t = family_catalog({Family::tallini, {1, 0, 2}}, f3);
    CHECK(t.degree() == 5);
    CHECK(t.count() == 13);
    CHECK(singular_points_check(t, 3).nonsingular());
    CHECK_THROWS_AS(family_catalog({Family::tallini, {0, 0, 0}}, f3), DomainError);
}

TEST_CASE("family validation")
{
    auto f7 = make_field_of_order(7);
    CHECK_THROWS_AS(family_catalog({Family::fermat, {1, 1}}, f7), DomainError);
    CHECK_THROWS_AS(family_catalog({Family::fermat, {1, 0, 6}}, f7), DomainError);
    CHECK_THROWS_AS(family_catalog({Family::fermat, {1, 1, 1}, true}, f7), DomainError);
    CHECK_NOTHROW(family_catalog({Family::fermat, {1, 1, 1}, false}, f7));
    CHECK_THROWS_AS(family_catalog({Family::exceptional4, {}}, f7), DomainError);
    CHECK_THROWS_AS(family_catalog({Family::hermitian, {2}}, f7), DomainError);
    CHECK_THROWS_AS(family_catalog({Family::conic, {1}}, f7), DomainError);
    CHECK_THROWS_AS(PlaneCurve(HPoly(f7, 3)), DomainError);
    CHECK_THROWS_AS(PlaneCurve(HPoly::monomial(f7, 0, 0, 0, 1)), DomainError);
    CHECK(parse_family("homma_q1") == Family::homma_q1);
    CHECK_FALSE(parse_family("nope"));
    for (auto fam : {Family::fermat, Family::exceptional4, Family::hermitian, Family::homma_q, Family::homma_q1,
                     Family::tallini, Family::conic})
        CHECK(parse_family(family_name(fam)) == fam);
    const auto herm9 = family_catalog({Family::hermitian, {3}}, make_field_of_order(9));
    CHECK(herm9.count() == 28);
}
