#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <set>

#include "curveforge/error.hpp"
#include "curveforge/gf.hpp"
#include "oracles.hpp"

using namespace curveforge;

namespace {

const std::vector<std::uint64_t> small_orders = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64};

bool irreducible_by_search(const std::vector<unsigned>& modulus, unsigned p)
{
    // Trial division by every monic polynomial of degree 1..h/2.
    const unsigned h = static_cast<unsigned>(modulus.size()) - 1;
    for (unsigned deg = 1; 2 * deg <= h; ++deg) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < deg; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::vector<unsigned> div(deg + 1, 0);
            std::uint64_t c = code;
            for (unsigned i = 0; i < deg; ++i) {
                div[i] = c % p;
                c /= p;
            }
            div[deg] = 1;
            std::vector<unsigned> rem = modulus;
            for (unsigned top = h; top >= deg; --top) {
                const unsigned lead = rem[top] % p;
                if (lead)
                    for (unsigned i = 0; i <= deg; ++i)
                        rem[top - deg + i] = (rem[top - deg + i] + (p - lead) * div[i]) % p;
                if (top == 0) break;
            }
            if (std::all_of(rem.begin(), rem.begin() + deg, [](unsigned x) { return x == 0; })) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("construction of small fields")
{
    auto f5 = make_field(5, 1);
    CHECK(f5->q() == 5);
    CHECK(f5->modulus().size() == 2);

    auto f4 = make_field(2, 2);
    const Elem mu = 2;
    CHECK(f4->add(f4->add(f4->mul(mu, mu), mu), 1) == 0);
    CHECK(f4->mul(mu, mu) == f4->add(mu, 1));

    auto f9 = make_field(3, 2);
    std::set<Elem> cycle;
    Elem x = 1;
    for (int i = 0; i < 8; ++i) {
        cycle.insert(x);
        x = f9->mul(x, f9->generator());
    }
    CHECK(cycle.size() == 8);
    CHECK(x == 1);
}

TEST_CASE("construction is deterministic and the modulus is the first irreducible")
{
    for (auto q : small_orders) {
        auto a = make_field_of_order(q);
        auto b = make_field_of_order(q);
        CHECK(a->modulus() == b->modulus());
        CHECK(a->generator() == b->generator());
        CHECK(irreducible_by_search(a->modulus(), a->p()));
        if (a->h() == 1) continue;
        // No monic irreducible of degree h with a smaller coefficient code.
        std::uint64_t own = 0;
        for (unsigned i = a->h(); i-- > 0;) own = own * a->p() + a->modulus()[i];
        for (std::uint64_t code = 0; code < own; ++code) {
            std::vector<unsigned> m(a->h() + 1, 0);
            std::uint64_t c = code;
            for (unsigned i = 0; i < a->h(); ++i) {
                m[i] = c % a->p();
                c /= a->p();
            }
            m[a->h()] = 1;
            CHECK_FALSE(irreducible_by_search(m, a->p()));
        }
    }
}

TEST_CASE("table arithmetic agrees with naive polynomial arithmetic")
{
    for (auto q : small_orders) {
        auto f = make_field_of_order(q);
        oracle::NaiveField naive(*f);
        for (Elem a = 0; a < q; ++a)
            for (Elem b = 0; b < q; ++b) {
                REQUIRE(f->add(a, b) == naive.add(a, b));
                REQUIRE(f->mul(a, b) == naive.mul(a, b));
                REQUIRE(f->add(f->sub(a, b), b) == a);
                if (b) REQUIRE(f->mul(f->div(a, b), b) == a);
            }
    }
}

TEST_CASE("field axioms hold exhaustively for q <= 64")
{
    for (auto q : {4u, 8u, 9u, 16u}) {
        auto f = make_field_of_order(q);
        for (Elem a = 0; a < q; ++a)
            for (Elem b = 0; b < q; ++b)
                for (Elem c = 0; c < q; ++c) {
                    REQUIRE(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
                    REQUIRE(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
                    REQUIRE(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
                }
    }
    for (auto q : small_orders) {
        auto f = make_field_of_order(q);
        for (Elem a = 0; a < q; ++a) {
            CHECK(f->pow(a, q) == a);
            CHECK(f->add(a, f->neg(a)) == 0);
            if (a) {
                CHECK(f->mul(a, f->inv(a)) == 1);
                CHECK(f->exp(f->log(a)) == a);
                CHECK(f->pow(a, -1) == f->inv(a));
            }
        }
        for (std::uint32_t e = 0; e + 1 < q; ++e) CHECK(f->log(f->exp(e)) == e);
    }
}

TEST_CASE("generator has full multiplicative order")
{
    for (auto q : small_orders) {
        auto f = make_field_of_order(q);
        const Elem g = f->generator();
        for (Elem smaller = 2; smaller < g; ++smaller) {
            bool full = true;
            for (std::uint32_t d = 1; d + 1 < q; ++d)
                if ((q - 1) % d == 0 && f->pow(smaller, d) == 1) full = false;
            CHECK_FALSE(full);
        }
        for (std::uint32_t d = 1; d + 1 < q; ++d)
            if ((q - 1) % d == 0) CHECK(f->pow(g, d) != 1);
    }
}

TEST_CASE("prime-field examples")
{
    auto f5 = make_field_of_order(5);
    CHECK(f5->add(2, 4) == 1);
    auto f7 = make_field_of_order(7);
    CHECK(f7->inv(3) == 5);
    CHECK(f7->from_int(-1) == 6);
    CHECK(f7->from_int(15) == 1);
}

TEST_CASE("elements() enumerates zero once then the powers of the generator")
{
    auto f5 = make_field_of_order(5);
    auto e = f5->elements();
    CHECK(e.size() == 5);
    CHECK(std::count(e.begin(), e.end(), 0u) == 1);
    auto f9 = make_field_of_order(9);
    auto e9 = f9->elements();
    CHECK(e9.size() == 9);
    for (std::size_t i = 2; i < e9.size(); ++i) CHECK(e9[i] == f9->mul(e9[i - 1], f9->generator()));
    CHECK(std::set<Elem>(e9.begin(), e9.end()).size() == 9);
}

TEST_CASE("embeddings are homomorphisms")
{
    const std::vector<std::pair<unsigned, unsigned>> pairs = {{5, 25}, {2, 4}, {2, 16}, {4, 16}, {3, 27}, {9, 81},
                                                              {4, 64}, {7, 49}, {8, 64}, {3, 729}};
    for (auto [s, t] : pairs) {
        auto src = make_field_of_order(s);
        auto dst = make_field_of_order(t);
        const auto e = embed(src, dst);
        std::set<Elem> image;
        for (Elem a = 0; a < s; ++a) {
            image.insert(e(a));
            CHECK(dst->pow(e(a), s) == e(a));
            for (Elem b = 0; b < s; ++b) {
                REQUIRE(e(src->add(a, b)) == dst->add(e(a), e(b)));
                REQUIRE(e(src->mul(a, b)) == dst->mul(e(a), e(b)));
            }
        }
        CHECK(image.size() == s);
        CHECK(e(0) == 0);
        CHECK(e(1) == 1);
    }
}

TEST_CASE("embedding chains and the identity embedding")
{
    auto f2 = make_field_of_order(2), f4 = make_field_of_order(4), f16 = make_field_of_order(16);
    const auto a = embed(f2, f4), b = embed(f4, f16), direct = embed(f2, f16);
    for (Elem x = 0; x < 2; ++x) CHECK(b(a(x)) == direct(x));

    auto f9 = make_field_of_order(9);
    const auto id = embed(f9, f9);
    for (Elem x = 0; x < 9; ++x) CHECK(id(x) == x);
}

TEST_CASE("embedding into a field of a different characteristic or non-multiple degree fails")
{
    CHECK_THROWS_AS(embed(make_field_of_order(4), make_field_of_order(8)), DomainError);
    CHECK_THROWS_AS(embed(make_field_of_order(3), make_field_of_order(4)), DomainError);
}

TEST_CASE("errors")
{
    CHECK_THROWS_AS(make_field(4, 1), DomainError);
    CHECK_THROWS_AS(make_field_of_order(12), DomainError);
    CHECK_THROWS_AS(make_field_of_order(1), DomainError);
    CHECK_THROWS_AS(make_field_of_order(1u << 15), CapExceeded);
    CHECK_THROWS_AS(make_field_of_order(49, 25), CapExceeded);
    auto f = make_field_of_order(7);
    CHECK_THROWS_AS(f->inv(0), ZeroDivision);
    CHECK_THROWS_AS(f->div(3, 0), ZeroDivision);
    CHECK_THROWS_AS(f->log(0), ZeroDivision);
    CHECK(f->pow(0, 0) == 1);
    CHECK_THROWS_AS(f->pow(0, -1), ZeroDivision);
    CHECK_THROWS_AS(f->parse("7"), ParseError);
    CHECK_THROWS_AS(f->parse("x"), ParseError);
    CHECK_THROWS_AS(f->parse(""), ParseError);
    CHECK(f->parse("6") == 6);
}

TEST_CASE("Felt wraps the table arithmetic and rejects mixed fields")
{
    auto f = make_field_of_order(7);
    auto g = make_field_of_order(5);
    Felt a(*f, 3), b(*f, 5);
    CHECK((a * b).value() == 1);
    CHECK((a + b).value() == 1);
    CHECK((a - b).value() == 5);
    CHECK((a / b).value() == f->div(3, 5));
    CHECK((-a).value() == 4);
    CHECK(a.inv() == b);
    CHECK(a.pow(6).value() == 1);
    CHECK_THROWS_AS(a + Felt(*g, 1), FieldMismatch);
    CHECK_THROWS_AS(Felt(*f, 7), DomainError);
}

TEST_CASE("CURVEFORGE_CAP overrides the default cap")
{
    CHECK(default_field_cap() == (1u << 14));
    setenv("CURVEFORGE_CAP", "16", 1);
    CHECK(default_field_cap() == 16);
    CHECK_THROWS_AS(make_field_of_order(25), CapExceeded);
    CHECK(make_field_of_order(16)->q() == 16);
    unsetenv("CURVEFORGE_CAP");
    CHECK(make_field_of_order(25)->q() == 25);
}
