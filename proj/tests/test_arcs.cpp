#include <doctest.h>

#include <numeric>
#include <sstream>

#include "curveforge/arcs.hpp"
#include "curveforge/equiv.hpp"
#include "curveforge/error.hpp"
#include "curveforge/bundled_data.hpp"
#include "oracles.hpp"

using namespace curveforge;

namespace {

PointSet random_set(std::mt19937_64& rng, const FieldPtr& f, double density)
{
    std::bernoulli_distribution in(density);
    std::vector<std::uint8_t> m(num_points(*f));
    for (auto& b : m) b = in(rng);
    return PointSet::from_membership(f, std::move(m));
}

Projectivity random_projectivity(std::mt19937_64& rng, const Field& f)
{
    for (;;) {
        Projectivity::Matrix m;
        for (auto& e : m) e = std::uniform_int_distribution<Elem>(0, f.q() - 1)(rng);
        if (det3(f, m) != 0) return Projectivity(f, m);
    }
}

PointSet off_triangle(const FieldPtr& f)
{
    std::vector<std::uint8_t> m(num_points(*f));
    for (std::size_t i = 0; i < m.size(); ++i) {
        const Triple t = triple_at(*f, i);
        m[i] = t[0] && t[1] && t[2];
    }
    return PointSet::from_membership(f, std::move(m));
}

/// a_i by scanning every line triple and every point triple.
std::vector<std::uint64_t> brute_spectrum(const PointSet& s)
{
    const Field& f = s.field();
    const auto pts = oracle::plane_points(f);
    std::vector<std::uint64_t> a(f.q() + 2, 0);
    for (const auto& l : pts) {
        unsigned n = 0;
        for (const auto& p : pts) {
            Elem d = 0;
            for (int i = 0; i < 3; ++i) d = f.add(d, f.mul(l[i], p[i]));
            n += d == 0 && s.contains(make_point(f, p[0], p[1], p[2]));
        }
        ++a[n];
    }
    return a;
}

}  // namespace

TEST_CASE("spectrum agrees with a brute-force scan")
{
    std::mt19937_64 rng(101);
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u}) {
        auto f = make_field_of_order(q);
        for (int trial = 0; trial < 8; ++trial) {
            const auto s = random_set(rng, f, 0.1 + 0.1 * trial);
            const auto sp = spectrum(s);
            CHECK(sp.a == brute_spectrum(s));
            CHECK(sp.k == s.size());
            unsigned top = 0;
            for (unsigned i = 0; i < sp.a.size(); ++i)
                if (sp.a[i]) top = i;
            CHECK(sp.n == top);
            CHECK(sp.at(sp.k0) != 0);
            for (unsigned i = 0; i < sp.k0; ++i) CHECK(sp.at(i) == 0);
        }
    }
}

TEST_CASE("line_counts matches count_on")
{
    std::mt19937_64 rng(103);
    auto f = make_field_of_order(9);
    const auto s = random_set(rng, f, 0.4);
    const auto counts = line_counts(s);
    REQUIRE(counts.size() == num_points(*f));
    for (std::size_t i = 0; i < counts.size(); ++i) CHECK(counts[i] == s.count_on(line_at(*f, i)));
}

TEST_CASE("worked example over GF(5)")
{
    auto f5 = make_field_of_order(5);
    const auto c = family_catalog({Family::fermat, {1, 1, 3}, true}, f5);
    const auto sp = spectrum(c.points());
    CHECK(sp.k == 16);
    CHECK(sp.at(0) == 3);
    CHECK(sp.at(3) == 16);
    CHECK(sp.at(4) == 12);
    CHECK(sp.k0 == 0);
    CHECK(sp.n == 4);
    CHECK(sp.at(1) + sp.at(2) + sp.at(5) + sp.at(6) == 0);
}

TEST_CASE("empty and full sets")
{
    for (unsigned q : {2u, 5u, 9u}) {
        auto f = make_field_of_order(q);
        const PointSet empty(f);
        const auto sp = spectrum(empty);
        CHECK(sp.at(0) == q * q + q + 1);
        CHECK(sp.n == 0);
        CHECK(sp.k0 == 0);
        const auto full = spectrum(empty.complement());
        CHECK(full.at(q + 1) == q * q + q + 1);
        CHECK(full.k0 == q + 1);
    }
}

TEST_CASE("point types")
{
    for (unsigned q : {5u, 7u, 8u}) {
        auto f = make_field_of_order(q);
        const auto s = off_triangle(f);
        const auto vertex = point_type(s, make_point(*f, 1, 0, 0));
        CHECK(vertex.at(q - 1) == q - 1);
        CHECK(vertex.at(0) == 2);
        CHECK(vertex.render() == std::to_string(q - 1) + "^" + std::to_string(q - 1) + " 0^2");

        // Every point of the set sees three (q-1)-lines and q-2 lines with q-2 points.
        const auto inner = point_type(s, make_point(*f, 1, 1, 1));
        CHECK(inner.at(q - 1) == 3);
        CHECK(inner.at(q - 2) == q - 2);
        const auto counts = line_counts(s);
        for (const auto& p : enumerate_points(*f)) {
            const auto t = point_type(s, p);
            CHECK(t == point_type(*f, counts, p));
            CHECK(std::accumulate(t.psi.begin(), t.psi.end(), 0u) == q + 1);
        }
    }
}

TEST_CASE("complement zero sets")
{
    for (unsigned q : {4u, 5u, 7u, 9u}) {
        auto f = make_field_of_order(q);
        Elem b = 1;
        while (f->add(1, b) == 0) ++b;
        const auto c = family_catalog({Family::fermat, {1, b, f->neg(f->add(1, b))}, true}, f);
        CHECK(complement_zset(c).size() == 3 * q);
        CHECK(complement_zset(c) == c.points().complement());
    }
    const auto conic = family_catalog({Family::conic, {}}, make_field_of_order(5));
    CHECK(complement_zset(conic).size() == 25);
}

TEST_CASE("lemma checks on the family arcs and the bundled arcs")
{
    for (unsigned q : {5u, 7u, 8u, 9u, 11u}) {
        auto f = make_field_of_order(q);
        const auto rep = verify_arc_lemmas(off_triangle(f));
        CHECK(rep.ok());
        for (const char* name : {"line-sum", "incidence-sum", "pair-sum", "pencil-size", "pencil-count",
                                 "two-line-bound", "psi-top-bound", "top-line-count", "psi-top-type", "k0-bound",
                                 "k0-identity", "k0-inequality"}) {
            const auto* c = rep.find(name);
            REQUIRE(c != nullptr);
            CHECK_MESSAGE(c->status == CheckStatus::pass, name, " q=", q, " ", c->detail);
        }
    }
    auto f7 = make_field_of_order(7);
    for (const auto& arc : {data::arc36_k0_3(f7), data::arc36_k0_2(f7)}) {
        const auto rep = verify_arc_lemmas(arc);
        CHECK(rep.ok());
        CHECK(rep.spectrum.k == 36);
        CHECK(rep.spectrum.n == 6);
        CHECK(rep.find("k0-identity")->status == CheckStatus::pass);
    }
    CHECK(spectrum(data::arc36_k0_3(f7)).k0 == 3);
    CHECK(spectrum(data::arc36_k0_2(f7)).k0 == 2);
    CHECK(verify_arc_lemmas(PointSet(f7)).find("no-such-check") == nullptr);
}

TEST_CASE("counting identities hold for random sets")
{
    std::mt19937_64 rng(107);
    for (unsigned q : {3u, 4u, 5u, 7u, 9u}) {
        auto f = make_field_of_order(q);
        for (int trial = 0; trial < 20; ++trial) {
            const auto s = random_set(rng, f, 0.05 * (trial + 1));
            const auto rep = verify_arc_lemmas(s);
            for (const char* name : {"line-sum", "incidence-sum", "pair-sum", "pencil-size", "pencil-count"})
                CHECK(rep.find(name)->status == CheckStatus::pass);
            for (const auto& c : rep.checks) CHECK_MESSAGE(c.status != CheckStatus::fail, c.name, " q=", q, " k=", s.size(), " ", c.detail);
        }
    }
}

TEST_CASE("non-arcs are not applicable for the arc predicates")
{
    auto f5 = make_field_of_order(5);
    const auto rep = verify_arc_lemmas(PointSet(f5).complement());
    CHECK(rep.find("psi-top-bound")->status == CheckStatus::not_applicable);
    CHECK(rep.find("k0-identity")->status == CheckStatus::not_applicable);
    CHECK(rep.ok());
}

TEST_CASE("spectrum and point types are projectively invariant")
{
    std::mt19937_64 rng(109);
    for (unsigned q : {3u, 4u, 5u, 7u}) {
        auto f = make_field_of_order(q);
        for (int trial = 0; trial < 10; ++trial) {
            const auto s = random_set(rng, f, 0.3);
            const auto a = random_projectivity(rng, *f);
            const auto image = apply(a, s);
            CHECK(image.size() == s.size());
            CHECK(spectrum(image) == spectrum(s));
            for (const auto& p : s.points()) CHECK(point_type(image, a.apply(p)) == point_type(s, p));
        }
    }
}

TEST_CASE("arc file roundtrip and errors")
{
    auto f7 = make_field_of_order(7);
    const auto arc = data::arc36_k0_3(f7);
    std::stringstream ss;
    write_arc(ss, arc);
    CHECK(read_arc(ss) == arc);

    std::istringstream dup("5 2\n(1:2:3)\n(2:4:1)\n");
    CHECK_THROWS_AS(read_arc(dup), ParseError);
    CHECK_THROWS_AS(PointSet(f7, {make_point(*f7, 1, 2, 3), make_point(*f7, 2, 4, 6)}), DomainError);
    std::istringstream bad_q("6 1\n(1:0:0)\n");
    CHECK_THROWS_AS(read_arc(bad_q), ParseError);
    std::istringstream short_file("5 3\n(1:0:0)\n(0:1:0)\n");
    CHECK_THROWS_AS(read_arc(short_file), ParseError);
    std::istringstream junk("5 1\n(1:0)\n");
    CHECK_THROWS_AS(read_arc(junk), ParseError);
    std::istringstream big("1024 1\n(1:0:0)\n");
    CHECK_THROWS_AS(read_arc(big, 512), CapExceeded);
}

TEST_CASE("arc predicates need q >= 5")
{
    // A 4-arc of PG(2, 3) is a (4, 2)-arc with k0 = 0 > q - 4.
    auto f3 = make_field_of_order(3);
    const PointSet frame(f3, {make_point(*f3, 1, 0, 0), make_point(*f3, 0, 1, 0), make_point(*f3, 0, 0, 1),
                              make_point(*f3, 1, 1, 1)});
    const auto rep = verify_arc_lemmas(frame);
    CHECK(rep.find("k0-bound")->status == CheckStatus::not_applicable);
    CHECK(rep.find("k0-identity")->status == CheckStatus::pass);
    CHECK(rep.ok());
}
