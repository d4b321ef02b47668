#include "curveforge/arcs.hpp"

#include <algorithm>
#include <sstream>

namespace curveforge {

std::vector<unsigned> line_counts(const PointSet& s)
{
    const Field& f = s.field();
    std::vector<unsigned> counts(num_points(f), 0);
    for (auto idx : s.indices())
        for (const auto& l : pencil(f, point_at(f, idx))) ++counts[index_of(f, l)];
    return counts;
}

ArcSpectrum spectrum(const PointSet& s)
{
    const unsigned q = s.field().q();
    ArcSpectrum sp;
    sp.q = q;
    sp.k = s.size();
    sp.a.assign(q + 2, 0);
    for (unsigned c : line_counts(s)) ++sp.a[c];
    sp.n = 0;
    for (unsigned i = 0; i <= q + 1; ++i)
        if (sp.a[i]) sp.n = i;
    sp.k0 = 0;
    while (sp.a[sp.k0] == 0) ++sp.k0;
    return sp;
}

std::string PointType::render() const
{
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = psi.size(); i-- > 0;) {
        if (psi[i] == 0) continue;
        if (!first) out << ' ';
        out << i << '^' << psi[i];
        first = false;
    }
    return out.str();
}

PointType point_type(const Field& f, const std::vector<unsigned>& counts, const PPoint& p)
{
    PointType t;
    t.psi.assign(f.q() + 2, 0);
    for (const auto& l : pencil(f, p)) ++t.psi[counts[index_of(f, l)]];
    return t;
}

PointType point_type(const PointSet& s, const PPoint& p)
{
    return point_type(s.field(), line_counts(s), p);
}

PointSet complement_zset(const PlaneCurve& c)
{
    return c.points().complement();
}

std::string to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::not_applicable: return "n/a";
    }
    return "?";
}

bool ArcLemmaReport::ok() const
{
    return std::none_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.status == CheckStatus::fail; });
}

const LemmaCheck* ArcLemmaReport::find(const std::string& name) const
{
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

namespace {

LemmaCheck equality(std::string name, std::int64_t lhs, std::int64_t rhs)
{
    std::ostringstream d;
    d << lhs << (lhs == rhs ? " = " : " != ") << rhs;
    return {std::move(name), lhs == rhs ? CheckStatus::pass : CheckStatus::fail, d.str()};
}

LemmaCheck at_least(std::string name, std::int64_t lhs, std::int64_t rhs)
{
    std::ostringstream d;
    d << lhs << (lhs >= rhs ? " >= " : " < ") << rhs;
    return {std::move(name), lhs >= rhs ? CheckStatus::pass : CheckStatus::fail, d.str()};
}

LemmaCheck skipped(std::string name, const char* why)
{
    return {std::move(name), CheckStatus::not_applicable, why};
}

}  // namespace

ArcLemmaReport verify_arc_lemmas(const PointSet& s)
{
    const Field& f = s.field();
    const std::int64_t q = f.q();
    const auto counts = line_counts(s);
    ArcLemmaReport report;
    report.spectrum = spectrum(s);
    const ArcSpectrum& sp = report.spectrum;
    const std::int64_t k = static_cast<std::int64_t>(sp.k);
    const std::int64_t k0 = sp.k0;
    auto& out = report.checks;

    std::int64_t s0 = 0, s1 = 0, s2 = 0;
    for (std::int64_t i = 0; i <= q + 1; ++i) {
        const auto ai = static_cast<std::int64_t>(sp.a[i]);
        s0 += ai;
        s1 += i * ai;
        s2 += i * (i - 1) * ai;
    }
    out.push_back(equality("line-sum", s0, q * q + q + 1));
    out.push_back(equality("incidence-sum", s1, k * (q + 1)));
    out.push_back(equality("pair-sum", s2, k * (k - 1)));

    // Per-point pencil identities, and the pair bound for points of S.
    bool sizes_ok = true, counts_ok = true, pair_ok = true;
    std::string first_bad;
    const std::int64_t pair_bound = k + 1 - (q - 1) * (static_cast<std::int64_t>(sp.n) - 1);
    std::int64_t worst_pair = q * 4;
    std::vector<PointType> types_on_s;
    const std::size_t total = num_points(f);
    for (std::size_t idx = 0; idx < total; ++idx) {
        const PPoint p = point_at(f, idx);
        PointType t = point_type(f, counts, p);
        std::int64_t lines = 0, weighted = 0;
        for (std::int64_t i = 0; i <= q + 1; ++i) {
            lines += t.psi[i];
            weighted += (s.contains_index(idx) ? (i - 1) : i) * static_cast<std::int64_t>(t.psi[i]);
        }
        if (lines != q + 1) sizes_ok = false;
        if (s.contains_index(idx)) {
            if (t.psi[0] != 0 || 1 + weighted != k) counts_ok = false;
            // The two smallest line sizes through P realize the minimum i + j.
            std::vector<std::int64_t> sizes;
            for (std::int64_t i = 0; i <= q + 1 && sizes.size() < 2; ++i)
                for (unsigned r = 0; r < t.psi[i] && sizes.size() < 2; ++r) sizes.push_back(i);
            const std::int64_t pair = sizes[0] + sizes[1];
            worst_pair = std::min(worst_pair, pair);
            if (pair < pair_bound) {
                if (pair_ok) first_bad = to_string(p);
                pair_ok = false;
            }
            types_on_s.push_back(std::move(t));
        } else if (weighted != k) {
            counts_ok = false;
        }
    }
    out.push_back({"pencil-size", sizes_ok ? CheckStatus::pass : CheckStatus::fail, "q + 1 lines through every point"});
    out.push_back({"pencil-count", counts_ok ? CheckStatus::pass : CheckStatus::fail, "all points"});
    if (s.empty()) {
        out.push_back(skipped("two-line-bound", "empty set"));
    } else {
        std::ostringstream d;
        d << "min i + j = " << worst_pair << ", bound " << pair_bound;
        if (!pair_ok) d << ", violated at " << first_bad;
        out.push_back({"two-line-bound", pair_ok ? CheckStatus::pass : CheckStatus::fail, d.str()});
    }

    const bool optimal_arc = q >= 5 && k == (q - 1) * (q - 1) && static_cast<std::int64_t>(sp.n) <= q - 1;
    const char* why = "needs q >= 5 and a ((q-1)^2, n)-arc with n <= q-1";
    if (optimal_arc) {
        std::int64_t min_top = q + 2;
        bool type_ok = true;
        for (const auto& t : types_on_s) {
            const std::int64_t top = t.psi[q - 1];
            min_top = std::min(min_top, top);
            if (top == 3 && (t.psi[q - 2] != static_cast<unsigned>(q - 2))) type_ok = false;
        }
        out.push_back(at_least("psi-top-bound", min_top, 3));
        out.push_back(at_least("top-line-count", static_cast<std::int64_t>(sp.a[q - 1]), 3 * (q - 1)));
        out.push_back({"psi-top-type", type_ok ? CheckStatus::pass : CheckStatus::fail,
                       "points with psi_{q-1} = 3 have type (q-1)^3 (q-2)^(q-2)"});
        out.push_back({"k0-bound", k0 <= q - 4 ? CheckStatus::pass : CheckStatus::fail,
                       "k0 = " + std::to_string(k0) + ", bound " + std::to_string(q - 4)});
    } else {
        for (const char* name : {"psi-top-bound", "top-line-count", "psi-top-type", "k0-bound"})
            out.push_back(skipped(name, why));
    }

    if (q >= 3 && k == (q - 1) * (q - 1)) {
        std::int64_t lhs = 0;
        for (std::int64_t i = k0; i <= q + 1; ++i) lhs += (i - k0) * (i - q + 2) * static_cast<std::int64_t>(sp.a[i]);
        out.push_back(equality("k0-identity", lhs, 3 * (q - 1) * (q - 1) - 3 * k0));
    } else {
        out.push_back(skipped("k0-identity", "needs |S| = (q-1)^2"));
    }
    if (optimal_arc)
        out.push_back(at_least("k0-inequality", (q - k0 - 1) * static_cast<std::int64_t>(sp.a[q - 1]),
                               3 * (q - 1) * (q - 1) - 3 * k0));
    else
        out.push_back(skipped("k0-inequality", why));
    return report;
}

}  // namespace curveforge
