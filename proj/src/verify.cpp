#include "curveforge/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>

#include "curveforge/arcs.hpp"
#include "curveforge/codes.hpp"
#include "curveforge/curve.hpp"
#include "curveforge/equiv.hpp"
#include "curveforge/linsolve.hpp"
#include "curveforge/bundled_data.hpp"
#include "curveforge/svfrob.hpp"

namespace curveforge::verify {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::skipped: return "SKIPPED";
    case Verdict::disclosure: return "DISCLOSED";
    }
    return "?";
}

Verdict CriterionResult::verdict() const
{
    if (disclosure) return Verdict::disclosure;
    if (checks.empty()) return Verdict::skipped;
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; }) ? Verdict::pass
                                                                                                 : Verdict::fail;
}

namespace {

template <class T>
std::string str(const T& v)
{
    std::ostringstream s;
    s << v;
    return s.str();
}

template <class A, class B>
CheckResult expect_eq(std::string name, const A& expected, const B& got)
{
    return {std::move(name), str(expected), str(got), str(expected) == str(got)};
}

/// good/total with a free-form note; passes when every case held.
CheckResult expect_all(std::string name, std::uint64_t good, std::uint64_t total, const std::string& note = "")
{
    std::string got = str(good) + "/" + str(total);
    if (!note.empty()) got += " (" + note + ")";
    return {std::move(name), str(total) + "/" + str(total), std::move(got), good == total};
}

CriterionResult criterion(int id, std::string title)
{
    CriterionResult r;
    r.id = id;
    r.title = std::move(title);
    return r;
}

CheckResult expect_true(std::string name, bool got, std::string detail = "true")
{
    return {std::move(name), "true", got ? detail : "false", got};
}

std::vector<unsigned> select_q(const Options& o, std::initializer_list<unsigned> qs)
{
    std::vector<unsigned> out;
    for (unsigned q : qs)
        if (!o.q || *o.q == q) out.push_back(q);
    return out;
}

/// (alpha, beta, gamma) in (F_q^*)^3 with zero sum; all of them or only alpha = 1.
std::vector<std::array<Elem, 3>> zero_sum_triples(const Field& f, bool normalized)
{
    std::vector<std::array<Elem, 3>> out;
    for (Elem a = 1; a < f.q(); ++a) {
        if (normalized && a != 1) continue;
        for (Elem b = 1; b < f.q(); ++b) {
            const Elem c = f.neg(f.add(a, b));
            if (c != 0) out.push_back({a, b, c});
        }
    }
    return out;
}

PlaneCurve fermat(const FieldPtr& f, const std::array<Elem, 3>& t)
{
    return family_catalog({Family::fermat, {t[0], t[1], t[2]}, true}, f);
}

PointSet off_triangle(const FieldPtr& f)
{
    std::vector<std::uint8_t> m(num_points(*f), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        const Triple t = triple_at(*f, i);
        m[i] = t[0] != 0 && t[1] != 0 && t[2] != 0;
    }
    return PointSet::from_membership(f, std::move(m));
}

std::string triple_text(const std::array<Elem, 3>& t)
{
    return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

CriterionResult fermat_counts(const Options& o)
{
    CriterionResult r = criterion(1, "Fermat-family point counts and point sets");
    for (unsigned q : select_q(o, {5, 7, 8, 9, 11, 13})) {
        auto f = make_field_of_order(q);
        const auto expected_set = off_triangle(f);
        const auto triples = zero_sum_triples(*f, false);
        std::size_t good_count = 0, good_set = 0;
        std::string first_bad;
        for (const auto& t : triples) {
            const auto c = fermat(f, t);
            const bool count_ok = c.count() == static_cast<std::size_t>((q - 1) * (q - 1));
            const bool set_ok = c.points() == expected_set;
            good_count += count_ok;
            good_set += set_ok;
            if ((!count_ok || !set_ok) && first_bad.empty()) first_bad = triple_text(t);
        }
        const std::string tag = "q=" + str(q) + " ";
        r.checks.push_back(expect_all(tag + "N_q = (q-1)^2 for every zero-sum triple", good_count, triples.size(),
                                      first_bad.empty() ? "" : "first bad " + first_bad));
        r.checks.push_back(expect_all(tag + "point set = plane minus coordinate triangle", good_set, triples.size()));
    }
    return r;
}

CriterionResult named_counts(const Options& o)
{
    CriterionResult r = criterion(2, "Named-curve point counts");
    for (unsigned q : select_q(o, {4})) {
        auto f = make_field_of_order(q);
        r.checks.push_back(expect_eq("exceptional quartic over F_4", 14, family_catalog({Family::exceptional4, {}}, f).count()));
        r.checks.push_back(expect_eq("Hermitian cubic over F_4", 9, family_catalog({Family::hermitian, {2}}, f).count()));
    }
    for (unsigned q : select_q(o, {4, 5, 7, 8, 9}))
        r.checks.push_back(expect_eq("conic over F_" + std::to_string(q), q + 1,
                                     family_catalog({Family::conic, {}}, make_field_of_order(q)).count()));
    for (unsigned q : select_q(o, {5, 7, 8, 9})) {
        auto f = make_field_of_order(q);
        r.checks.push_back(expect_eq("homma_q over F_" + std::to_string(q), (q - 1) * q + 1,
                                     family_catalog({Family::homma_q, {}}, f).count()));
        r.checks.push_back(expect_eq("homma_q1 over F_" + std::to_string(q), q * q + 1,
                                     family_catalog({Family::homma_q1, {}}, f).count()));
    }
    return r;
}

std::string identity_text(const ArcLemmaReport& rep)
{
    std::string out;
    for (const char* n : {"line-sum", "incidence-sum", "pair-sum"}) {
        const auto* c = rep.find(n);
        out += std::string(out.empty() ? "" : "; ") + n + " " + c->detail;
    }
    return out;
}

bool identities_hold(const ArcLemmaReport& rep)
{
    for (const char* n : {"line-sum", "incidence-sum", "pair-sum"})
        if (rep.find(n)->status != CheckStatus::pass) return false;
    return true;
}

CriterionResult spectrum_suite(const Options& o)
{
    CriterionResult r = criterion(3, "Spectra of family arcs and counting identities");
    std::mt19937_64 rng(o.seed);
    for (unsigned q : select_q(o, {5, 7, 8, 9})) {
        auto f = make_field_of_order(q);
        const std::string tag = "q=" + std::to_string(q) + " ";
        for (const auto& t : zero_sum_triples(*f, true)) {
            const auto rep = verify_arc_lemmas(fermat(f, t).points());
            const auto& sp = rep.spectrum;
            std::ostringstream want, got;
            want << "(3," << (q - 1) * (q - 1) << "," << 3 * (q - 1) << ") k0=0";
            got << "(" << sp.at(0) << "," << sp.at(q - 2) << "," << sp.at(q - 1) << ") k0=" << sp.k0;
            r.checks.push_back(expect_eq(tag + triple_text(t) + " (a_0, a_{q-2}, a_{q-1}), k0", want.str(), got.str()));
            r.checks.push_back(expect_true(tag + triple_text(t) + " counting identities", identities_hold(rep),
                                           identity_text(rep)));
        }
        // The identities are pure double counting: any (q-1)^2 points satisfy them.
        std::vector<std::size_t> idx(num_points(*f));
        std::iota(idx.begin(), idx.end(), 0);
        const std::size_t k = (q - 1) * (q - 1);
        unsigned good = 0;
        for (unsigned trial = 0; trial < o.random_sets; ++trial) {
            std::shuffle(idx.begin(), idx.end(), rng);
            std::vector<std::uint8_t> m(idx.size(), 0);
            for (std::size_t i = 0; i < k; ++i) m[idx[i]] = 1;
            good += identities_hold(verify_arc_lemmas(PointSet::from_membership(f, std::move(m))));
        }
        r.checks.push_back(expect_all(tag + "identities on random (q-1)^2-sets", good, o.random_sets));
    }
    return r;
}

CriterionResult lemma_predicates(const Options& o)
{
    CriterionResult r = criterion(4, "Lemma predicates on family curves");
    for (unsigned q : select_q(o, {5, 7, 8, 9})) {
        auto f = make_field_of_order(q);
        const std::string tag = "q=" + std::to_string(q) + " ";
        unsigned curves = 0, psi_ok = 0, pair_ok = 0, ident_ok = 0;
        std::uint64_t pairs = 0;
        unsigned min_psi = q + 2;
        for (const auto& t : zero_sum_triples(*f, true)) {
            ++curves;
            const auto s = fermat(f, t).points();
            const auto counts = line_counts(s);
            bool psi_good = true, pair_good = true;
            for (const auto& p : s.points()) {
                const auto ty = point_type(*f, counts, p);
                min_psi = std::min(min_psi, ty.at(q - 1));
                psi_good = psi_good && ty.at(q - 1) >= 3;
                // Every pair of distinct lines through P.
                const auto lines = pencil(*f, p);
                for (std::size_t a = 0; a < lines.size(); ++a)
                    for (std::size_t b = a + 1; b < lines.size(); ++b) {
                        ++pairs;
                        if (counts[index_of(*f, lines[a])] + counts[index_of(*f, lines[b])] < q) pair_good = false;
                    }
            }
            psi_ok += psi_good;
            pair_ok += pair_good;
            const auto rep = verify_arc_lemmas(s);
            ident_ok += rep.find("k0-identity")->status == CheckStatus::pass &&
                        rep.find("k0-inequality")->status == CheckStatus::pass && rep.ok();
        }
        r.checks.push_back(expect_all(tag + "psi_{q-1}(P) >= 3 on every rational point", psi_ok, curves,
                                      "min " + str(min_psi)));
        r.checks.push_back(expect_all(tag + "i + j >= q for every line pair through a curve point", pair_ok, curves,
                                      str(pairs) + " pairs"));
        r.checks.push_back(expect_all(tag + "k0 identity sum (i-k0)(i-q+2)a_i = 3(q-1)^2 - 3k0", ident_ok, curves));
    }
    return r;
}

CriterionResult class_counts(const Options& o)
{
    CriterionResult r = criterion(5, "Projective equivalence classes of the Fermat-type family");
    const std::pair<unsigned, unsigned> expected[] = {{5, 1}, {7, 2}, {8, 1}, {9, 2}, {11, 2}, {13, 3}};
    for (auto [q, nu] : expected) {
        if (o.q && *o.q != q) continue;
        const auto fc = count_family_classes(make_field_of_order(q));
        r.checks.push_back(expect_eq("nu_" + std::to_string(q), nu, fc.count()));
    }
    return r;
}

CriterionResult q7_reproduction(const Options& o)
{
    CriterionResult r = criterion(6, "The q = 7 arcs and the quadric elimination");
    if (o.q && *o.q != 7) return r;
    auto f = make_field_of_order(7);
    const auto arc3 = data::arc36_k0_3(f);
    const auto sp3 = spectrum(arc3);
    const auto code = code_from_arc(arc3);
    const auto w = weight_enumerator(code);
    r.checks.push_back(expect_eq("k0 = 3 arc size and max line meet", "36,6", str(sp3.k) + "," + str(sp3.n)));
    r.checks.push_back(expect_eq("code parameters", "[36,3,30]_7",
                                 "[" + str(code.length()) + ",3," + str(w.min_distance()) + "]_7"));
    r.checks.push_back(expect_true("6 (a_0..a_6) = (c_36..c_30)", spectrum_weight_check(code, sp3)));
    r.checks.push_back(expect_eq("k0 of the arc", 3, sp3.k0));

    NoetherProblem np{data::sextic_g(f), data::quartic_h(f), 6, data::quadric_constraints(f), {},
                      HPoly::monomial(f, 0, 0, 0, 1)};
    const auto nr = noether_reconstruct(np);
    r.checks.push_back(expect_eq("|V(G) ∩ V(H)|", 24, nr.intersection.size()));
    r.checks.push_back(expect_true("V(G) ∩ V(H) inside the arc", std::all_of(nr.intersection.begin(), nr.intersection.end(),
                                                                            [&](const PPoint& p) { return arc3.contains(p); })));
    std::string sol = to_string(nr.solution.kind) + ":";
    for (auto v : nr.solution.particular) sol += " " + str(v);
    r.checks.push_back(expect_eq("quadric coefficients alpha_1..alpha_6", "unique: 0 0 0 0 0 0", sol));
    r.checks.push_back(expect_true("F forced to equal G", nr.forced_trivial));
    r.checks.push_back(expect_true("G has rational linear components",
                                   !linear_components(PlaneCurve(data::sextic_g(f))).empty()));

    const auto arc2 = data::arc36_k0_2(f);
    const auto sp2 = spectrum(arc2);
    r.checks.push_back(expect_eq("k0 = 2 arc: size, max line meet, k0", "36,6,2",
                                 str(sp2.k) + "," + str(sp2.n) + "," + str(sp2.k0)));
    const auto q0 = data::special_point_k0_2(f);
    r.checks.push_back(expect_true("(1:5:2) lies off the k0 = 2 arc", !arc2.contains(q0)));
    const auto counts = line_counts(arc2);
    const auto ty = point_type(*f, counts, q0);
    r.checks.push_back(expect_eq("psi_6, psi_5 at (1:5:2)", "3,2", str(ty.at(6)) + "," + str(ty.at(5))));
    auto lines_with = [&](unsigned size) {
        std::vector<PLine> out;
        for (const auto& l : pencil(*f, q0))
            if (counts[index_of(*f, l)] == size) out.push_back(l);
        return out;
    };
    auto text = [](std::vector<PLine> ls) {
        std::sort(ls.begin(), ls.end());
        std::string s;
        for (const auto& l : ls) s += (s.empty() ? "" : " ") + curveforge::to_string(l);
        return s;
    };
    r.checks.push_back(expect_eq("6-lines through (1:5:2)", text(data::special_six_lines(f)), text(lines_with(6))));
    r.checks.push_back(expect_eq("5-lines through (1:5:2)", text(data::special_five_lines(f)), text(lines_with(5))));
    return r;
}

CriterionResult sv_equality(const Options& o)
{
    CriterionResult r = criterion(7, "Stöhr-Voloch equality for family curves");
    for (unsigned q : select_q(o, {5, 7, 8, 9})) {
        auto f = make_field_of_order(q);
        const std::string tag = "q=" + std::to_string(q) + " ";
        const std::int64_t d = q - 1, g = (d - 1) * (d - 2) / 2, qq = q;
        r.checks.push_back(expect_eq(tag + "2(q-1)^2 = (2g-2) + (q+2)(q-1)", 2 * d * d, (2 * g - 2) + (qq + 2) * d));
        const auto basic = sv_basic_bound(d, q);
        r.checks.push_back(expect_eq(tag + "d(d+q-1)/2 at d = q-1 vs Sziklai (d-1)q+1",
                                     str((d - 1) * qq + 1) + " " + str(d * d), str(basic.value) + " " + str(basic.value)));
        unsigned curves = 0, classical = 0, no_infl = 0, attained = 0;
        for (const auto& t : zero_sum_triples(*f, true)) {
            ++curves;
            const auto c = fermat(f, t);
            classical += frobenius_classical(c).classical;
            no_infl += inflection_points(c).empty();
            const auto sv = sv_refined_bound(c);
            attained += sv.attained && sv.rhs_twice == 2 * d * d && sv.sum_deficiency == 0;
        }
        r.checks.push_back(expect_all(tag + "Frobenius classical", classical, curves));
        r.checks.push_back(expect_all(tag + "j2 = 2 everywhere (no inflections)", no_infl, curves));
        r.checks.push_back(expect_all(tag + "refined bound attained with sum A(P) = 0", attained, curves));
    }
    return r;
}

CriterionResult k0_system_forms(const Options& o)
{
    CriterionResult r = criterion(8, "Closed forms of the k0 >= q-3 spectrum system");
    for (unsigned q = 5; q <= 13; ++q) {
        if (o.q && *o.q != q) continue;
        const std::int64_t Q = q;
        const auto s = solve_k0_system(Q);
        const std::string tag = "q=" + std::to_string(q) + " ";
        if (s.kind != SolutionKind::unique) {
            r.checks.push_back(expect_eq(tag + "system solvable", "unique", to_string(s.kind)));
            continue;
        }
        const Rational& a3 = s.particular[0];
        const Rational& a2 = s.particular[1];
        const Rational& a1 = s.particular[2];
        r.checks.push_back(expect_eq(tag + "2 a_{q-3}", 3 * (Q * Q - 3 * Q + 2), Rational(2 * a3)));
        r.checks.push_back(expect_eq(tag + "a_{q-2}", -2 * (Q * Q - 5 * Q + 4), a2));
        r.checks.push_back(expect_eq(tag + "2 a_{q-1}", 3 * (Q * Q - 3 * Q + 4), Rational(2 * a1)));
        r.checks.push_back(expect_true(tag + "a_{q-2} < 0", a2 < 0, str(a2)));
    }
    return r;
}

HPoly random_poly(std::mt19937_64& rng, const FieldPtr& f, unsigned degree)
{
    std::uniform_int_distribution<Elem> coef(0, f->q() - 1);
    for (;;) {
        HPoly p(f, degree);
        for (unsigned i = 0; i <= degree; ++i)
            for (unsigned j = 0; i + j <= degree; ++j) p.set(i, j, degree - i - j, coef(rng));
        if (!p.is_zero()) return p;
    }
}

Projectivity random_projectivity(std::mt19937_64& rng, const Field& f)
{
    std::uniform_int_distribution<Elem> coef(0, f.q() - 1);
    for (;;) {
        Projectivity::Matrix m;
        for (auto& e : m) e = coef(rng);
        if (det3(f, m) != 0) return Projectivity(f, m);
    }
}

CriterionResult oracle_equivalences(const Options& o)
{
    CriterionResult r = criterion(9, "Independent computations agree");
    std::mt19937_64 rng(o.seed ^ 0x9e3779b97f4a7c15ULL);

    // Weight enumerators: codeword enumeration vs the spectrum relation.
    std::vector<std::pair<std::string, PointSet>> arcs;
    if (!o.q || *o.q == 7) {
        auto f7 = make_field_of_order(7);
        arcs.emplace_back("k0=3 arc", data::arc36_k0_3(f7));
        arcs.emplace_back("k0=2 arc", data::arc36_k0_2(f7));
    }
    for (unsigned q : select_q(o, {5, 7, 8, 9})) {
        auto f = make_field_of_order(q);
        const auto t = zero_sum_triples(*f, true).front();
        arcs.emplace_back("q=" + str(q) + " family arc " + triple_text(t), fermat(f, t).points());
    }
    for (const auto& [name, s] : arcs) {
        const auto code = code_from_arc(s);
        r.checks.push_back(expect_true(name + ": enumerated weights = spectrum weights",
                                       weight_enumerator(code) == enumerator_from_spectrum(spectrum(s))));
    }

    // Line restriction vs exact division by the linear form.
    for (unsigned q : select_q(o, {2, 3, 4, 5, 7})) {
        auto f = make_field_of_order(q);
        std::uniform_int_distribution<std::size_t> pick_line(0, num_points(*f) - 1);
        std::uniform_int_distribution<unsigned> pick_degree(1, q + 2);
        unsigned agree = 0, divisible = 0;
        for (unsigned trial = 0; trial < o.random_pairs; ++trial) {
            const PLine l = line_at(*f, pick_line(rng));
            const HPoly lin = HPoly::linear(f, l.a, l.b, l.c);
            const unsigned d = pick_degree(rng);
            const HPoly poly = trial % 2 == 0 ? lin * random_poly(rng, f, d - 1) : random_poly(rng, f, d);
            const bool vanishes = restrict_to_line(poly, l).identically_zero();
            const auto quotient = exact_divide(poly, lin);
            const bool exact = !quotient || (*quotient * lin) == poly;
            agree += vanishes == quotient.has_value() && exact;
            divisible += quotient.has_value();
        }
        r.checks.push_back(expect_all("q=" + str(q) + " restriction vanishes <=> linear form divides", agree,
                                      o.random_pairs, str(divisible) + " divisible"));
    }

    // Equivalence witnesses on sets moved by random projectivities.
    for (unsigned q : select_q(o, {2, 3, 4, 5, 7, 8})) {
        auto f = make_field_of_order(q);
        const std::size_t n = num_points(*f);
        std::uniform_int_distribution<std::size_t> pick_size(1, n - 1);
        std::vector<std::size_t> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        unsigned good = 0;
        for (unsigned trial = 0; trial < o.random_equivalences; ++trial) {
            std::shuffle(idx.begin(), idx.end(), rng);
            const std::size_t k = pick_size(rng);
            std::vector<std::uint8_t> m(n, 0);
            for (std::size_t i = 0; i < k; ++i) m[idx[i]] = 1;
            const PointSet s = PointSet::from_membership(f, std::move(m));
            const PointSet moved = apply(random_projectivity(rng, *f), s);
            const auto w = are_equivalent(s, moved);
            good += w && apply(*w, s) == moved;
        }
        r.checks.push_back(expect_all("q=" + str(q) + " witnesses verify under apply", good, o.random_equivalences));
    }
    return r;
}

CriterionResult disclosure(const Options&)
{
    CriterionResult r = criterion(10, "Classification over all degree-(q-1) curves");
    r.disclosure = true;
    r.note =
        "The classification quantifies over every degree-(q-1) curve over F_q; the coefficient space is far too "
        "large to enumerate. It is covered indirectly by criteria 1-9 (family side, lemma predicates, q = 7 "
        "arc eliminations), not by exhaustive search.";
    return r;
}

}  // namespace

std::vector<int> criterion_ids()
{
    return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
}

CriterionResult run_criterion(int id, const Options& opts)
{
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    switch (id) {
    case 1: r = fermat_counts(opts); break;
    case 2: r = named_counts(opts); break;
    case 3: r = spectrum_suite(opts); break;
    case 4: r = lemma_predicates(opts); break;
    case 5: r = class_counts(opts); break;
    case 6: r = q7_reproduction(opts); break;
    case 7: r = sv_equality(opts); break;
    case 8: r = k0_system_forms(opts); break;
    case 9: r = oracle_equivalences(opts); break;
    case 10: r = disclosure(opts); break;
    default: throw DomainError("unknown criterion " + std::to_string(id));
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<CriterionResult> run_all(const Options& opts)
{
    std::vector<CriterionResult> out;
    for (int id : criterion_ids()) out.push_back(run_criterion(id, opts));
    return out;
}

}  // namespace curveforge::verify
