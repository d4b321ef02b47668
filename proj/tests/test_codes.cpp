#include <doctest.h>

#include <sstream>

#include "curveforge/codes.hpp"
#include "curveforge/error.hpp"
#include "curveforge/bundled_data.hpp"
#include "oracles.hpp"

using namespace curveforge;

namespace {

PointSet random_set(std::mt19937_64& rng, const FieldPtr& f, double density)
{
    std::bernoulli_distribution in(density);
    for (;;) {
        std::vector<std::uint8_t> m(num_points(*f));
        for (auto& b : m) b = in(rng);
        auto s = PointSet::from_membership(f, std::move(m));
        if (s.size() >= 3 && spectrum(s).n < s.size()) return s;
    }
}

/// Weight of every message m G counted by direct multiplication.
std::vector<std::uint64_t> brute_weights(const LinearCode3& code)
{
    const Field& f = code.field();
    const unsigned q = f.q();
    std::vector<std::uint64_t> c(code.length() + 1, 0);
    for (Elem a = 0; a < q; ++a)
        for (Elem b = 0; b < q; ++b)
            for (Elem e = 0; e < q; ++e) {
                std::size_t w = 0;
                for (std::size_t i = 0; i < code.length(); ++i) {
                    const Triple col = code.column(i);
                    const Elem v = f.add(f.mul(a, col[0]), f.add(f.mul(b, col[1]), f.mul(e, col[2])));
                    w += v != 0;
                }
                ++c[w];
            }
    return c;
}

}  // namespace

TEST_CASE("worked example: the family arc over GF(5)")
{
    auto f5 = make_field_of_order(5);
    const auto arc = family_catalog({Family::fermat, {1, 1, 3}, true}, f5).points();
    const auto code = code_from_arc(arc);
    CHECK(code.length() == 16);
    const auto w = weight_enumerator(code);
    CHECK(w.min_distance() == 12);
    CHECK(w.c[0] == 1);
    CHECK(w.c[12] == 4 * 12);
    CHECK(w.c[13] == 4 * 16);
    CHECK(w.c[16] == 4 * 3);
    CHECK(w.total() == 125);
    CHECK(w == enumerator_from_spectrum(spectrum(arc)));
    CHECK(spectrum_weight_check(code, spectrum(arc)));
}

TEST_CASE("enumeration agrees with brute force and with the spectrum")
{
    std::mt19937_64 rng(201);
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        auto f = make_field_of_order(q);
        for (int trial = 0; trial < 6; ++trial) {
            const auto s = random_set(rng, f, 0.15 + 0.1 * trial);
            const auto code = code_from_arc(s);
            const auto w = weight_enumerator(code);
            CHECK(w.c == brute_weights(code));
            CHECK(w == enumerator_from_spectrum(spectrum(s)));
            CHECK(spectrum_weight_check(code, spectrum(s)));
            // n - d is the largest line intersection.
            CHECK(code.length() - w.min_distance() == spectrum(s).n);
            CHECK(w.total() == std::uint64_t(q) * q * q);
        }
    }
}

TEST_CASE("columns follow the enumeration order of the set")
{
    auto f7 = make_field_of_order(7);
    const auto arc = data::arc36_k0_3(f7);
    const auto code = code_from_arc(arc);
    CHECK(code.column_points() == arc.points());
    const auto w = weight_enumerator(code);
    CHECK(w.min_distance() == 30);
    CHECK(code.length() == 36);
}

TEST_CASE("bundled arcs give [36,3,30]_7 codes with the expected top weights")
{
    auto f7 = make_field_of_order(7);
    const auto w3 = weight_enumerator(code_from_arc(data::arc36_k0_3(f7)));
    const auto w2 = weight_enumerator(code_from_arc(data::arc36_k0_2(f7)));
    CHECK(w3.min_distance() == 30);
    CHECK(w2.min_distance() == 30);
    // The largest weight is n - k0.
    auto top = [](const WeightEnumerator& w) {
        std::size_t t = 0;
        for (std::size_t i = 0; i < w.c.size(); ++i)
            if (w.c[i]) t = i;
        return t;
    };
    CHECK(top(w3) == 33);
    CHECK(top(w2) == 34);
}

TEST_CASE("invalid generator matrices")
{
    auto f5 = make_field_of_order(5);
    using Rows = LinearCode3::Rows;
    CHECK_THROWS_AS(LinearCode3(f5, Rows{{{1, 0, 0}, {0, 1, 0}, {0, 0}}}), DomainError);
    CHECK_THROWS_AS(LinearCode3(f5, Rows{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}}), DomainError);
    CHECK_THROWS_AS(LinearCode3(f5, Rows{{{1, 0, 0, 2}, {0, 1, 0, 0}, {0, 0, 1, 0}}}), DomainError);
    CHECK_THROWS_AS(LinearCode3(f5, Rows{{{1, 0, 1}, {0, 1, 1}, {0, 0, 0}}}), DomainError);
    CHECK_THROWS_AS(LinearCode3(f5, Rows{{{1, 0, 5}, {0, 1, 0}, {0, 0, 1}}}), DomainError);
    CHECK_THROWS_AS(LinearCode3(f5, Rows{{{1, 0}, {0, 1}, {0, 0}}}), DomainError);

    // Collinear sets do not span the plane.
    const PointSet line(f5, points_on(*f5, make_line(*f5, 0, 0, 1)));
    CHECK_THROWS_AS(code_from_arc(line), DomainError);
    CHECK_THROWS_AS(code_from_arc(PointSet(f5, {make_point(*f5, 1, 0, 0), make_point(*f5, 0, 1, 0)})),
                    DomainError);

    const auto big = make_field_of_order(128);
    const PointSet frame(big, {make_point(*big, 1, 0, 0), make_point(*big, 0, 1, 0), make_point(*big, 0, 0, 1)});
    CHECK_THROWS_AS(weight_enumerator(code_from_arc(frame)), CapExceeded);

    const auto c5 = code_from_arc(family_catalog({Family::conic, {}}, f5).points());
    CHECK_THROWS_AS(spectrum_weight_check(c5, spectrum(PointSet(f5).complement())), DomainError);
    CHECK_THROWS_AS(spectrum_weight_check(c5, spectrum(PointSet(make_field_of_order(7)))), DomainError);
}

TEST_CASE("generator file roundtrip")
{
    auto f9 = make_field_of_order(9);
    const auto code = code_from_arc(family_catalog({Family::conic, {}}, f9).points());
    for (bool with_weights : {false, true}) {
        const auto g = make_generator_file(code, with_weights);
        CHECK(g.declared_distance == weight_enumerator(code).min_distance());
        std::stringstream ss;
        write_generator(ss, g);
        const auto back = read_generator(ss);
        CHECK(back.code.rows() == code.rows());
        CHECK(back.declared_distance == g.declared_distance);
        CHECK(back.weights == g.weights);
        if (with_weights) {
            const auto& w = *back.weights;
            CHECK(w.size() == code.length() - g.declared_distance + 1);
            CHECK(w.front() == weight_enumerator(code).c[g.declared_distance]);
        }
    }
}

TEST_CASE("compact census rows")
{
    std::istringstream in("# census style\n"
                          "4 3 2 3\n"
                          "1001\n"
                          "0101\n"
                          "0011\n"
                          "W: 12 8 6\n");
    const auto g = read_generator(in);
    CHECK(g.code.length() == 4);
    CHECK(g.code.column(3) == Triple{1, 1, 1});
    CHECK(g.declared_distance == 2);
    const auto w = weight_enumerator(g.code);
    CHECK(w.c[2] == 12);
    CHECK(w.c[3] == 8);
    CHECK(w.c[4] == 6);
    CHECK(std::vector<std::uint64_t>(w.c.begin() + 2, w.c.end()) == *g.weights);

    std::istringstream spaced("4 3 2 3\n1 0 0 1\n0 1 0 1\n0 0 1 1\n");
    CHECK(read_generator(spaced).code.rows() == g.code.rows());
}

TEST_CASE("generator file errors")
{
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_generator(in);
    };
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("4 2 2 3\n1001\n0101\n"), ParseError);
    CHECK_THROWS_AS(parse("4 3 2 6\n1001\n0101\n0011\n"), ParseError);
    CHECK_THROWS_AS(parse("4 3 2 3\n1001\n0101\n"), ParseError);
    CHECK_THROWS_AS(parse("4 3 2 3\n1001\n0101\n001\n"), ParseError);
    CHECK_THROWS_AS(parse("4 3 2 3\n1001\n0101\n0031\n"), ParseError);
    CHECK_THROWS_AS(parse("4 3 2 3\n1001\n0101\n0011\nW: 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse("4 3 2 3\n1001\n0101\n0011\nW: 12 8 x\n"), ParseError);
    CHECK_THROWS_AS(parse("4 3 2 3\n1001\n0101\n0011\nextra\n"), ParseError);
    CHECK_THROWS_AS(parse("4 3 2 3\n1000\n0100\n0010\n"), ParseError);
    std::istringstream big("3 3 1 1024\n1 0 0\n0 1 0\n0 0 1\n");
    CHECK_THROWS_AS(read_generator(big, 512), CapExceeded);
}
