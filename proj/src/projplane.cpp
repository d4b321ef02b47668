#include "curveforge/projplane.hpp"

#include <algorithm>

#include "curveforge/error.hpp"

namespace curveforge {

namespace {

// Nonzero solutions of v . w = 0 for a normalized w, one per projective class.
std::vector<Triple> orthogonal_triples(const Field& f, const Triple& w)
{
    const Elem q = f.q();
    std::vector<Triple> out;
    out.reserve(q + 1);
    if (w[0] != 0) {
        // X = -(bY + cZ) over (Y:Z) in P^1
        for (Elem t = 0; t < q; ++t) {
            Elem x = f.neg(f.add(w[1], f.mul(w[2], t)));
            out.push_back(normalize(f, {x, 1, t}));
        }
        out.push_back(normalize(f, {f.neg(w[2]), 0, 1}));
    } else if (w[1] != 0) {
        Elem y = f.neg(w[2]);
        for (Elem t = 0; t < q; ++t) out.push_back(normalize(f, {t, y, 1}));
        out.push_back({1, 0, 0});
    } else {
        for (Elem t = 0; t < q; ++t) out.push_back({1, t, 0});
        out.push_back({0, 1, 0});
    }
    std::sort(out.begin(), out.end(),
              [&f](const Triple& a, const Triple& b) { return index_of(f, a) < index_of(f, b); });
    return out;
}

Triple parse_triple(const Field& f, std::string_view text, char open, char close)
{
    auto strip = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
        return s;
    };
    text = strip(text);
    if (text.size() < 2 || text.front() != open || text.back() != close)
        throw ParseError("expected " + std::string(1, open) + "a:b:c" + std::string(1, close) + ", got '" +
                         std::string(text) + "'");
    text = text.substr(1, text.size() - 2);
    Triple v{};
    for (int i = 0; i < 3; ++i) {
        auto pos = text.find(':');
        if ((i < 2) != (pos != std::string_view::npos)) throw ParseError("expected three ':'-separated coordinates");
        v[i] = f.parse(strip(text.substr(0, pos)));
        text = i < 2 ? text.substr(pos + 1) : std::string_view{};
    }
    if (v[0] == 0 && v[1] == 0 && v[2] == 0) throw ParseError("zero triple is not a projective point");
    return normalize(f, v);
}

}  // namespace

Triple normalize(const Field& f, Triple v)
{
    for (int i = 0; i < 3; ++i) {
        if (v[i] != 0) {
            Elem s = f.inv(v[i]);
            for (int j = i; j < 3; ++j) v[j] = f.mul(v[j], s);
            return v;
        }
    }
    throw DomainError("zero triple has no projective class");
}

PPoint make_point(const Field& f, Elem x, Elem y, Elem z)
{
    auto t = normalize(f, {x, y, z});
    return {t[0], t[1], t[2]};
}

PLine make_line(const Field& f, Elem a, Elem b, Elem c)
{
    auto t = normalize(f, {a, b, c});
    return {t[0], t[1], t[2]};
}

Elem dot(const Field& f, const Triple& u, const Triple& v)
{
    return f.add(f.add(f.mul(u[0], v[0]), f.mul(u[1], v[1])), f.mul(u[2], v[2]));
}

Triple cross(const Field& f, const Triple& u, const Triple& v)
{
    return {f.sub(f.mul(u[1], v[2]), f.mul(u[2], v[1])), f.sub(f.mul(u[2], v[0]), f.mul(u[0], v[2])),
            f.sub(f.mul(u[0], v[1]), f.mul(u[1], v[0]))};
}

std::size_t index_of(const Field& f, const Triple& v)
{
    const std::size_t q = f.q();
    if (v[0] != 0) return static_cast<std::size_t>(v[1]) * q + v[2];
    if (v[1] != 0) return q * q + v[2];
    return q * q + q;
}

Triple triple_at(const Field& f, std::size_t i)
{
    const std::size_t q = f.q();
    if (i < q * q) return {1, static_cast<Elem>(i / q), static_cast<Elem>(i % q)};
    if (i < q * q + q) return {0, 1, static_cast<Elem>(i - q * q)};
    if (i == q * q + q) return {0, 0, 1};
    throw DomainError("plane index out of range");
}

std::vector<PPoint> enumerate_points(const Field& f)
{
    std::vector<PPoint> out;
    const std::size_t n = num_points(f);
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(point_at(f, i));
    return out;
}

std::vector<PLine> enumerate_lines(const Field& f)
{
    std::vector<PLine> out;
    const std::size_t n = num_points(f);
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(line_at(f, i));
    return out;
}

PLine line_through(const Field& f, const PPoint& p, const PPoint& q)
{
    if (p == q) throw DomainError("line_through needs two distinct points, got " + to_string(p) + " twice");
    auto t = normalize(f, cross(f, coords(p), coords(q)));
    return {t[0], t[1], t[2]};
}

PPoint meet(const Field& f, const PLine& l, const PLine& m)
{
    if (l == m) throw DomainError("meet needs two distinct lines");
    auto t = normalize(f, cross(f, coords(l), coords(m)));
    return {t[0], t[1], t[2]};
}

bool collinear(const Field& f, const PPoint& a, const PPoint& b, const PPoint& c)
{
    return dot(f, cross(f, coords(a), coords(b)), coords(c)) == 0;
}

std::vector<PPoint> points_on(const Field& f, const PLine& l)
{
    std::vector<PPoint> out;
    for (const auto& t : orthogonal_triples(f, coords(l))) out.push_back({t[0], t[1], t[2]});
    return out;
}

std::vector<PLine> pencil(const Field& f, const PPoint& p)
{
    std::vector<PLine> out;
    for (const auto& t : orthogonal_triples(f, coords(p))) out.push_back({t[0], t[1], t[2]});
    return out;
}

std::string to_string(const PPoint& p)
{
    return "(" + std::to_string(p.x) + ":" + std::to_string(p.y) + ":" + std::to_string(p.z) + ")";
}

std::string to_string(const PLine& l)
{
    return "[" + std::to_string(l.a) + ":" + std::to_string(l.b) + ":" + std::to_string(l.c) + "]";
}

PPoint parse_point(const Field& f, std::string_view text)
{
    auto t = parse_triple(f, text, '(', ')');
    return {t[0], t[1], t[2]};
}

PLine parse_line(const Field& f, std::string_view text)
{
    auto t = parse_triple(f, text, '[', ']');
    return {t[0], t[1], t[2]};
}

}  // namespace curveforge
