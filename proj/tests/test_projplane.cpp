#include <doctest.h>

#include <set>

#include "curveforge/error.hpp"
#include "curveforge/projectivity.hpp"
#include "curveforge/projplane.hpp"
#include "oracles.hpp"

using namespace curveforge;

TEST_CASE("point counts and the affine chart")
{
    CHECK(enumerate_points(*make_field_of_order(5)).size() == 31);
    CHECK(enumerate_points(*make_field_of_order(7)).size() == 57);
    auto f4 = make_field_of_order(4);
    const auto pts = enumerate_points(*f4);
    CHECK(pts.size() == 21);
    std::size_t affine = 0;
    for (const auto& p : pts) affine += p.x != 0;
    CHECK(affine == 16);
}

TEST_CASE("enumeration matches a brute-force scan and index_of inverts it")
{
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        auto f = make_field_of_order(q);
        const auto pts = enumerate_points(*f);
        const auto naive = oracle::plane_points(*f);
        std::set<Triple> a, b(naive.begin(), naive.end());
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const Triple t = coords(pts[i]);
            a.insert(t);
            CHECK(normalize(*f, t) == t);
            CHECK(index_of(*f, t) == i);
            CHECK(triple_at(*f, i) == t);
        }
        CHECK(a.size() == pts.size());
        CHECK(a == b);
        CHECK(enumerate_lines(*f).size() == pts.size());
    }
}

TEST_CASE("enumeration order")
{
    auto f = make_field_of_order(3);
    CHECK(to_string(point_at(*f, 0)) == "(1:0:0)");
    CHECK(to_string(point_at(*f, 1)) == "(1:0:1)");
    CHECK(to_string(point_at(*f, 3)) == "(1:1:0)");
    CHECK(to_string(point_at(*f, 9)) == "(0:1:0)");
    CHECK(to_string(point_at(*f, 12)) == "(0:0:1)");
}

TEST_CASE("line through two points")
{
    auto f5 = make_field_of_order(5);
    CHECK(line_through(*f5, make_point(*f5, 1, 0, 0), make_point(*f5, 0, 1, 0)) == make_line(*f5, 0, 0, 1));
    auto f7 = make_field_of_order(7);
    const auto l = line_through(*f7, make_point(*f7, 1, 1, 3), make_point(*f7, 1, 1, 5));
    CHECK(to_string(l) == "[1:6:0]");
    CHECK_THROWS_AS(line_through(*f7, make_point(*f7, 1, 2, 3), make_point(*f7, 2, 4, 6)), DomainError);
}

TEST_CASE("incidence structure is exhaustive and dual for q <= 9")
{
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        auto f = make_field_of_order(q);
        const auto pts = enumerate_points(*f);
        const auto lines = enumerate_lines(*f);
        for (const auto& l : lines) {
            std::vector<PPoint> on;
            for (const auto& p : pts)
                if (incident(*f, p, l)) on.push_back(p);
            REQUIRE(on == points_on(*f, l));
            REQUIRE(on.size() == q + 1);
        }
        for (const auto& p : pts) {
            std::vector<PLine> through;
            for (const auto& l : lines)
                if (incident(*f, p, l)) through.push_back(l);
            REQUIRE(through == pencil(*f, p));
        }
        // Duality: swapping the roles of the two triples does not change incidence.
        for (const auto& p : pts)
            for (const auto& l : lines) {
                const PPoint pd{l.a, l.b, l.c};
                const PLine ld{p.x, p.y, p.z};
                REQUIRE(incident(*f, p, l) == incident(*f, pd, ld));
            }
        // Two distinct lines meet in exactly one point.
        for (std::size_t i = 0; i < lines.size(); ++i)
            for (std::size_t j = i + 1; j < lines.size(); ++j) {
                std::size_t common = 0;
                for (const auto& p : pts) common += incident(*f, p, lines[i]) && incident(*f, p, lines[j]);
                REQUIRE(common == 1);
                const auto m = meet(*f, lines[i], lines[j]);
                REQUIRE(incident(*f, m, lines[i]));
                REQUIRE(incident(*f, m, lines[j]));
            }
    }
}

TEST_CASE("collinearity and meet errors")
{
    auto f = make_field_of_order(5);
    CHECK(collinear(*f, make_point(*f, 1, 0, 0), make_point(*f, 0, 1, 0), make_point(*f, 1, 1, 0)));
    CHECK_FALSE(collinear(*f, make_point(*f, 1, 0, 0), make_point(*f, 0, 1, 0), make_point(*f, 0, 0, 1)));
    CHECK_THROWS_AS(meet(*f, make_line(*f, 1, 2, 3), make_line(*f, 2, 4, 1)), DomainError);
}

TEST_CASE("parsing points and lines")
{
    auto f = make_field_of_order(7);
    CHECK(parse_point(*f, "(2:4:6)") == make_point(*f, 1, 2, 3));
    CHECK(parse_point(*f, " ( 0 : 3 : 1 ) ") == make_point(*f, 0, 1, 5));
    CHECK(parse_line(*f, "[0:0:5]") == make_line(*f, 0, 0, 1));
    CHECK_THROWS_AS(parse_point(*f, "(0:0:0)"), ParseError);
    CHECK_THROWS_AS(parse_point(*f, "(1:2)"), ParseError);
    CHECK_THROWS_AS(parse_point(*f, "(1:2:9)"), ParseError);
    CHECK_THROWS_AS(make_point(*f, 0, 0, 0), DomainError);
}

TEST_CASE("projectivities preserve incidence and compose")
{
    std::mt19937_64 rng(7);
    for (unsigned q : {3u, 4u, 5u}) {
        auto f = make_field_of_order(q);
        std::uniform_int_distribution<Elem> coef(0, q - 1);
        auto random_proj = [&] {
            for (;;) {
                Projectivity::Matrix m;
                for (auto& e : m) e = coef(rng);
                if (det3(*f, m) != 0) return Projectivity(*f, m);
            }
        };
        for (int trial = 0; trial < 20; ++trial) {
            const auto a = random_proj(), b = random_proj();
            for (const auto& p : enumerate_points(*f)) {
                CHECK((b * a).apply(p) == b.apply(a.apply(p)));
                CHECK(a.inverse().apply(a.apply(p)) == p);
                for (const auto& l : pencil(*f, p)) CHECK(incident(*f, a.apply(p), a.apply(l)));
            }
        }
        // frame_map sends the standard frame where it is told to.
        const std::array<PPoint, 4> std_frame = {make_point(*f, 1, 0, 0), make_point(*f, 0, 1, 0),
                                                 make_point(*f, 0, 0, 1), make_point(*f, 1, 1, 1)};
        const auto a = random_proj();
        std::array<PPoint, 4> image;
        for (int i = 0; i < 4; ++i) image[i] = a.apply(std_frame[i]);
        CHECK(Projectivity::frame_map(*f, std_frame, image) == a);
    }
    auto f = make_field_of_order(5);
    CHECK_THROWS_AS(Projectivity(*f, {1, 2, 3, 2, 4, 1, 3, 1, 4}), DomainError);
}
