#include "curveforge/equiv.hpp"

#include <algorithm>
#include <map>

#include "curveforge/arcs.hpp"
#include "curveforge/error.hpp"

namespace curveforge {

PointSet apply(const Projectivity& a, const PointSet& s)
{
    if (!a.field().same_as(s.field())) throw FieldMismatch("projectivity and point set over different fields");
    std::vector<PPoint> image;
    image.reserve(s.size());
    for (const auto& p : s.points()) image.push_back(a.apply(p));
    return PointSet(s.field_ptr(), image, true);
}

PlaneCurve apply(const Projectivity& a, const PlaneCurve& c)
{
    return PlaneCurve(substitute(c.equation(), a));
}

namespace {

// Per-point invariants of a set: membership plus the psi profile.
struct Profile {
    std::vector<unsigned> counts;             // |l ∩ S| per line index
    std::vector<std::vector<unsigned>> keys;  // per point index
};

Profile profile_of(const PointSet& s)
{
    const Field& f = s.field();
    Profile pr;
    pr.counts = line_counts(s);
    const std::size_t n = num_points(f);
    pr.keys.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto t = point_type(f, pr.counts, point_at(f, i));
        t.psi.push_back(s.contains_index(i) ? 1u : 0u);
        pr.keys[i] = std::move(t.psi);
    }
    return pr;
}

unsigned pair_label(const Field& f, const Profile& pr, std::size_t a, std::size_t b)
{
    return pr.counts[index_of(f, line_through(f, point_at(f, a), point_at(f, b)))];
}

bool in_general_position(const Field& f, const std::vector<std::size_t>& chosen, std::size_t next)
{
    const PPoint p = point_at(f, next);
    for (auto c : chosen)
        if (c == next) return false;
    for (std::size_t i = 0; i < chosen.size(); ++i)
        for (std::size_t j = i + 1; j < chosen.size(); ++j)
            if (collinear(f, point_at(f, chosen[i]), point_at(f, chosen[j]), p)) return false;
    return true;
}

// Depth-first search for four points of `pool` with no three collinear.
bool find_frame(const Field& f, const std::vector<std::size_t>& pool, std::vector<std::size_t>& chosen)
{
    if (chosen.size() == 4) return true;
    for (auto idx : pool) {
        if (!in_general_position(f, chosen, idx)) continue;
        chosen.push_back(idx);
        if (find_frame(f, pool, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

bool maps_onto(const Projectivity& a, const PointSet& s1, const PointSet& s2)
{
    const Field& f = s1.field();
    for (auto idx : s1.indices()) {
        auto img = normalize(f, a.apply(triple_at(f, idx)));
        if (!s2.contains_index(index_of(f, img))) return false;
    }
    return true;
}

}  // namespace

std::optional<Projectivity> find_equivalence(const PointSet& s1, const PointSet& s2, const WitnessFilter& filter,
                                             EquivalenceStats* stats)
{
    const Field& f = s1.field();
    if (!f.same_as(s2.field())) throw FieldMismatch("point sets over different fields");
    if (s1.size() != s2.size()) return std::nullopt;
    if (spectrum(s1) != spectrum(s2)) return std::nullopt;

    const Profile p1 = profile_of(s1);
    const Profile p2 = profile_of(s2);
    const std::size_t n = num_points(f);

    // Invariant classes, which must have matching sizes on both sides.
    std::map<std::vector<unsigned>, std::vector<std::size_t>> cls1, cls2;
    for (std::size_t i = 0; i < n; ++i) {
        cls1[p1.keys[i]].push_back(i);
        cls2[p2.keys[i]].push_back(i);
    }
    if (cls1.size() != cls2.size()) return std::nullopt;
    for (const auto& [key, members] : cls1) {
        auto it = cls2.find(key);
        if (it == cls2.end() || it->second.size() != members.size()) return std::nullopt;
    }

    // Anchor on the smallest classes: grow the pool until it holds a frame.
    std::vector<const std::vector<std::size_t>*> order;
    for (const auto& [key, members] : cls1) order.push_back(&members);
    std::stable_sort(order.begin(), order.end(), [](auto a, auto b) { return a->size() < b->size(); });
    std::vector<std::size_t> pool, frame;
    for (auto members : order) {
        pool.insert(pool.end(), members->begin(), members->end());
        frame.clear();
        if (pool.size() >= 4 && find_frame(f, pool, frame)) break;
    }
    if (frame.size() != 4) throw DomainError("no projective frame in the plane (field too small)");

    std::array<PPoint, 4> from;
    for (int i = 0; i < 4; ++i) from[i] = point_at(f, frame[i]);
    std::array<std::vector<std::size_t>, 4> candidates;
    for (int i = 0; i < 4; ++i) candidates[i] = cls2.at(p1.keys[frame[i]]);
    unsigned labels[4][4] = {};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < i; ++j) labels[i][j] = pair_label(f, p1, frame[i], frame[j]);

    std::vector<std::size_t> image;
    std::optional<Projectivity> found;
    auto search = [&](auto&& self) -> bool {
        const std::size_t t = image.size();
        if (t == 4) {
            std::array<PPoint, 4> to;
            for (int i = 0; i < 4; ++i) to[i] = point_at(f, image[i]);
            auto a = Projectivity::frame_map(f, from, to);
            if (stats) ++stats->frames_tried;
            if (!maps_onto(a, s1, s2)) return false;
            if (stats) ++stats->set_matches;
            if (filter && !filter(a)) return false;
            found = a;
            return true;
        }
        for (auto x : candidates[t]) {
            if (!in_general_position(f, image, x)) continue;
            bool ok = true;
            for (std::size_t s = 0; s < t && ok; ++s) ok = pair_label(f, p2, x, image[s]) == labels[t][s];
            if (!ok) continue;
            image.push_back(x);
            if (self(self)) return true;
            image.pop_back();
        }
        return false;
    };
    search(search);
    return found;
}

std::optional<Projectivity> are_equivalent(const PointSet& s1, const PointSet& s2)
{
    return find_equivalence(s1, s2);
}

std::optional<Projectivity> are_equivalent(const PlaneCurve& c1, const PlaneCurve& c2)
{
    const Field& f = c1.field();
    if (!f.same_as(c2.field())) throw FieldMismatch("curves over different fields");
    if (c1.degree() != c2.degree()) return std::nullopt;
    const HPoly& f1 = c1.equation();
    const HPoly& f2 = c2.equation();
    const std::size_t n = num_points(f);
    // F1 o A^{-1} = c F2 forces F2(Av) = c^{-1} F1(v) for every raw triple v.
    // That is checked on rational points first; for d <= q it is already
    // decisive, and the exact substitution settles the rest.
    auto filter = [&](const Projectivity& a) {
        std::optional<Elem> ratio;
        for (std::size_t i = 0; i < n; ++i) {
            const Triple v = triple_at(f, i);
            const Elem lhs = f2.evaluate(a.apply(v));
            const Elem rhs = f1.evaluate(v);
            if ((lhs == 0) != (rhs == 0)) return false;
            if (rhs == 0) continue;
            const Elem r = f.div(lhs, rhs);
            if (ratio && *ratio != r) return false;
            ratio = r;
        }
        return substitute(f1, a).proportional_to(f2);
    };
    return find_equivalence(c1.points(), c2.points(), filter);
}

std::optional<Projectivity> brute_force_equivalence(const PointSet& s1, const PointSet& s2,
                                                    const WitnessFilter& filter)
{
    const Field& f = s1.field();
    if (s1.size() != s2.size()) return std::nullopt;
    const std::uint64_t q = f.q();
    std::uint64_t total = 1;
    for (int i = 0; i < 9; ++i) total *= q;
    Projectivity::Matrix m{};
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (int i = 0; i < 9; ++i) {
            m[i] = static_cast<Elem>(c % q);
            c /= q;
        }
        // One representative per scalar class.
        auto first = std::find_if(m.begin(), m.end(), [](Elem e) { return e != 0; });
        if (first == m.end() || *first != 1 || det3(f, m) == 0) continue;
        Projectivity a(f, m);
        if (maps_onto(a, s1, s2) && (!filter || filter(a))) return a;
    }
    return std::nullopt;
}

FamilyClasses count_family_classes(const FieldPtr& field)
{
    const Field& f = *field;
    if (f.q() < 4) throw DomainError("the family needs q >= 4");
    FamilyClasses out;
    out.q = f.q();
    for (Elem beta = 1; beta < f.q(); ++beta) {
        const Elem gamma = f.neg(f.add(1, beta));
        if (gamma != 0) out.triples.push_back({1, beta, gamma});
    }
    if (out.triples.empty()) throw DomainError("no admissible parameter triples");
    std::vector<PlaneCurve> curves;
    for (const auto& t : out.triples) curves.push_back(family_catalog({Family::fermat, {t[0], t[1], t[2]}, true}, field));
    std::vector<std::size_t> rep_index;
    for (std::size_t i = 0; i < curves.size(); ++i) {
        std::size_t cls = rep_index.size();
        for (std::size_t r = 0; r < rep_index.size(); ++r)
            if (are_equivalent(curves[rep_index[r]], curves[i])) {
                cls = r;
                break;
            }
        if (cls == rep_index.size()) {
            rep_index.push_back(i);
            out.representatives.push_back(out.triples[i]);
        }
        out.class_of.push_back(cls);
    }
    return out;
}

}  // namespace curveforge
