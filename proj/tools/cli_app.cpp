#include "cli_app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "curveforge/arcs.hpp"
#include "curveforge/codes.hpp"
#include "curveforge/curve.hpp"
#include "curveforge/equiv.hpp"
#include "curveforge/error.hpp"
#include "curveforge/linsolve.hpp"
#include "curveforge/bundled_data.hpp"
#include "curveforge/svfrob.hpp"
#include "curveforge/verify.hpp"

namespace curveforge::cli {

using json = nlohmann::json;

const std::vector<SubcommandInfo>& subcommand_table()
{
    static const std::vector<SubcommandInfo> table = {
        {"field", "field parameters, element arithmetic and embeddings",
         {"make_field", "field_arith", "embed", "enumerate_elements"}},
        {"points", "rational points of a curve", {"family_catalog", "rational_points", "evaluate", "partials",
                                                   "enumerate_points"}},
        {"points-ext", "point counts over extensions and singularity check",
         {"count_points_ext", "singular_points_check", "embed"}},
        {"spectrum", "line-intersection spectrum and counting lemmas", {"spectrum", "verify_arc_lemmas"}},
        {"point-type", "psi profile of points", {"point_type", "pencil", "line_through"}},
        {"zset", "points of the plane off a curve", {"complement_zset", "spectrum"}},
        {"sziklai-check", "Sziklai bound and rational linear components",
         {"linear_component_check", "restrict_to_line", "exact_divide", "are_equivalent"}},
        {"arc-import", "arc from a generator-matrix file", {"weight_enumerator"}},
        {"arc-export", "generator-matrix file from an arc", {"code_from_arc", "weight_enumerator"}},
        {"code", "code parameters of an arc", {"code_from_arc", "weight_enumerator"}},
        {"weights", "weight enumerator", {"code_from_arc", "weight_enumerator"}},
        {"weight-check", "weights against the spectrum", {"spectrum_weight_check", "spectrum", "weight_enumerator"}},
        {"equiv", "projective equivalence of two curves or point sets", {"are_equivalent", "apply", "substitute"}},
        {"nu-q", "equivalence classes of the Fermat-type family", {"count_family_classes"}},
        {"frobenius", "Frobenius classicality", {"frobenius_classical", "partials", "exact_divide"}},
        {"sv-bound", "Stohr-Voloch bounds", {"sv_basic_bound", "sv_refined_bound", "singular_points_check"}},
        {"inflections", "tangents, j2 and inflection points",
         {"inflection_points", "tangent_and_multiplicity", "restrict_to_line"}},
        {"noether", "curves A G + B H through prescribed points", {"noether_reconstruct", "solve"}},
        {"solve", "exact linear systems", {"solve"}},
        {"verify-paper", "the acceptance suite", {"run"}},
    };
    return table;
}

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Opts {
    std::optional<unsigned> q, p, h;
    std::string params, family, curve, curve2, arc, arc2;
    std::string out, format = "json";
    std::string point, point2, line, generator, write, matrix, vanish, nonvanish, fixed_a, preset;
    std::optional<unsigned> ext, nu, degree, embed_into;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint32_t> cap;
    std::string op, a, b;
    std::vector<int> criteria;
    bool sum_zero = false, list = false, weights = false, k0_system = false, elements = false;
};

json parameters_of(const Opts& o)
{
    json j = json::object();
    auto put = [&](const char* key, const auto& v) {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, std::string>) {
            if (!v.empty()) j[key] = v;
        } else if constexpr (std::is_same_v<std::decay_t<decltype(v)>, bool>) {
            if (v) j[key] = true;
        } else {
            if (v) j[key] = *v;
        }
    };
    put("q", o.q);
    put("p", o.p);
    put("h", o.h);
    put("params", o.params);
    put("family", o.family);
    put("sum-zero", o.sum_zero);
    put("curve", o.curve);
    put("curve2", o.curve2);
    put("arc", o.arc);
    put("arc2", o.arc2);
    put("point", o.point);
    put("point2", o.point2);
    put("line", o.line);
    put("generator", o.generator);
    put("matrix", o.matrix);
    put("vanish", o.vanish);
    put("nonvanish", o.nonvanish);
    put("fixed-a", o.fixed_a);
    put("preset", o.preset);
    put("ext", o.ext);
    put("nu", o.nu);
    put("degree", o.degree);
    put("embed-into", o.embed_into);
    put("seed", o.seed);
    put("cap", o.cap);
    put("op", o.op);
    put("a", o.a);
    put("b", o.b);
    put("list", o.list);
    put("weights", o.weights);
    put("elements", o.elements);
    put("k0-system", o.k0_system);
    if (!o.criteria.empty()) j["criterion"] = o.criteria;
    return j;
}

struct Report {
    json result = json::object();
    json checks = json::array();

    void check(const std::string& name, const std::string& expected, const std::string& got, bool pass)
    {
        checks.push_back({{"name", name}, {"expected", expected}, {"got", got}, {"pass", pass}});
    }
    bool all_pass() const
    {
        for (const auto& c : checks)
            if (!c["pass"].get<bool>()) return false;
        return true;
    }
};

std::uint32_t cap_of(const Opts& o) { return o.cap.value_or(default_field_cap()); }

std::ifstream open_input(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return in;
}

void write_output_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << text;
}

FieldPtr field_from(const Opts& o)
{
    if (o.q) return make_field_of_order(*o.q, cap_of(o));
    if (o.p) return make_field(*o.p, o.h.value_or(1), cap_of(o));
    throw UsageError("a field is required: give --q, or --p with optional --h");
}

std::vector<Elem> parse_params(const Field& f, const std::string& text)
{
    std::vector<Elem> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(f.parse(tok));
    return out;
}

std::optional<PlaneCurve> load_curve(const Opts& o, const std::string& path, const std::string& family)
{
    if (!path.empty()) {
        auto in = open_input(path);
        return PlaneCurve(read_curve(in, cap_of(o)));
    }
    if (family.empty()) return std::nullopt;
    const auto tag = parse_family(family);
    if (!tag) throw UsageError("unknown family '" + family + "'");
    auto f = field_from(o);
    return family_catalog({*tag, parse_params(*f, o.params), o.sum_zero}, f);
}

PlaneCurve primary_curve(const Opts& o)
{
    auto c = load_curve(o, o.curve, o.family);
    if (!c) throw UsageError("a curve is required: give --curve <file> or --family <name>");
    return std::move(*c);
}

PointSet read_arc_file(const Opts& o, const std::string& path)
{
    auto in = open_input(path);
    return read_arc(in, cap_of(o));
}

/// --arc, or the rational points of the curve given by --curve / --family.
PointSet primary_arc(const Opts& o)
{
    if (!o.arc.empty()) return read_arc_file(o, o.arc);
    if (!o.curve.empty() || !o.family.empty()) return primary_curve(o).points();
    throw UsageError("a point set is required: give --arc <file>, --curve <file> or --family <name>");
}

json points_json(const std::vector<PPoint>& pts)
{
    json j = json::array();
    for (const auto& p : pts) j.push_back(to_string(p));
    return j;
}

json spectrum_json(const ArcSpectrum& sp)
{
    return {{"q", sp.q}, {"k", sp.k}, {"n", sp.n}, {"k0", sp.k0}, {"a", sp.a}};
}

std::string rational_text(const Rational& r) { return r.str(); }

std::string triple_text(const Triple& t)
{
    return "(" + std::to_string(t[0]) + ":" + std::to_string(t[1]) + ":" + std::to_string(t[2]) + ")";
}

std::string enumerator_text(const WeightEnumerator& w)
{
    std::string s;
    for (std::size_t i = 0; i < w.c.size(); ++i)
        if (w.c[i]) s += (s.empty() ? "" : " ") + std::to_string(i) + ":" + std::to_string(w.c[i]);
    return s;
}

json enumerator_json(const WeightEnumerator& w)
{
    json nonzero = json::object();
    for (std::size_t i = 0; i < w.c.size(); ++i)
        if (w.c[i]) nonzero[std::to_string(i)] = w.c[i];
    return {{"length", w.length()}, {"min_distance", w.min_distance()}, {"total", w.total()}, {"nonzero", nonzero}};
}

json curve_header(const PlaneCurve& c)
{
    return {{"q", c.field().q()}, {"degree", c.degree()}, {"equation", c.equation().to_string()}};
}

// ---- subcommands -------------------------------------------------------------

void cmd_field(const Opts& o, Report& r)
{
    auto f = field_from(o);
    r.result["p"] = f->p();
    r.result["h"] = f->h();
    r.result["q"] = f->q();
    r.result["modulus"] = f->modulus();
    r.result["generator"] = f->to_string(f->generator());
    if (o.elements) {
        json els = json::array();
        for (auto e : f->elements()) els.push_back(f->to_string(e));
        r.result["elements"] = els;
    }
    if (!o.op.empty()) {
        if (o.a.empty()) throw UsageError("--op needs --a");
        const Elem a = f->parse(o.a);
        auto need_b = [&] {
            if (o.b.empty()) throw UsageError("--op " + o.op + " needs --b");
            return f->parse(o.b);
        };
        Elem value = 0;
        if (o.op == "add") value = f->add(a, need_b());
        else if (o.op == "sub") value = f->sub(a, need_b());
        else if (o.op == "mul") value = f->mul(a, need_b());
        else if (o.op == "div") value = f->div(a, need_b());
        else if (o.op == "neg") value = f->neg(a);
        else if (o.op == "inv") value = f->inv(a);
        else if (o.op == "frobenius") value = f->frobenius(a);
        else if (o.op == "pow") {
            if (o.b.empty()) throw UsageError("--op pow needs --b <integer exponent>");
            value = f->pow(a, std::stoll(o.b));
        } else if (o.op == "log") {
            r.result["value"] = std::to_string(f->log(a));
            return;
        } else
            throw UsageError("unknown --op '" + o.op + "'");
        r.result["value"] = f->to_string(value);
    }
    if (o.embed_into) {
        auto dst = make_field(f->p(), f->h() * *o.embed_into, cap_of(o));
        const auto e = embed(f, dst);
        json emb = {{"target_q", dst->q()}, {"root", dst->to_string(e.root())},
                    {"generator_image", dst->to_string(e.generator_image())}};
        if (o.list) {
            json img = json::array();
            for (Elem a = 0; a < f->q(); ++a) img.push_back(dst->to_string(e(a)));
            emb["images"] = img;
        }
        r.result["embedding"] = emb;
    }
}

void cmd_points(const Opts& o, Report& r)
{
    const auto c = primary_curve(o);
    r.result = curve_header(c);
    r.result["N"] = c.count();
    r.result["singular_points"] = points_json(c.rational_singular_points());
    if (o.list) r.result["points"] = points_json(c.points().points());
    if (!o.point.empty()) {
        const auto p = parse_point(c.field(), o.point);
        const auto& g = c.gradient();
        r.result["at_point"] = {{"point", to_string(p)},
                                {"value", c.field().to_string(c.equation().evaluate(p))},
                                {"gradient", {c.field().to_string(g.dx.evaluate(p)), c.field().to_string(g.dy.evaluate(p)),
                                              c.field().to_string(g.dz.evaluate(p))}}};
    }
}

void cmd_points_ext(const Opts& o, Report& r)
{
    const auto c = primary_curve(o);
    const unsigned m = o.ext.value_or(2);
    if (m < 1) throw UsageError("--ext must be at least 1");
    r.result = curve_header(c);
    json counts = json::object();
    for (unsigned j = 1; j <= m; ++j) counts[std::to_string(j)] = count_points_ext(c, j, cap_of(o));
    r.result["counts"] = counts;
    const auto sing = singular_points_check(c, m, cap_of(o));
    json ext = json::array();
    for (const auto& s : sing.extension) ext.push_back({{"degree", s.degree}, {"point", triple_text(s.coords)}});
    r.result["singularities"] = {{"rational", points_json(sing.rational)},
                                 {"extension", ext},
                                 {"checked_up_to", sing.checked_up_to},
                                 {"nonsingular", sing.nonsingular()}};
}

json lemma_json(const ArcLemmaReport& rep)
{
    json j = json::array();
    for (const auto& c : rep.checks) j.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
    return j;
}

void cmd_spectrum(const Opts& o, Report& r)
{
    const auto s = primary_arc(o);
    const auto rep = verify_arc_lemmas(s);
    r.result["spectrum"] = spectrum_json(rep.spectrum);
    r.result["lemmas"] = lemma_json(rep);
    r.result["lemmas_ok"] = rep.ok();
}

void cmd_point_type(const Opts& o, Report& r)
{
    const auto s = primary_arc(o);
    const Field& f = s.field();
    const auto counts = line_counts(s);
    auto describe = [&](const PPoint& p) {
        const auto t = point_type(f, counts, p);
        json by_size = json::object();
        for (const auto& l : pencil(f, p)) by_size[std::to_string(counts[index_of(f, l)])].push_back(to_string(l));
        return json{{"point", to_string(p)}, {"member", s.contains(p)}, {"type", t.render()}, {"psi", t.psi},
                    {"lines", by_size}};
    };
    if (!o.point.empty()) {
        const auto p = parse_point(f, o.point);
        r.result["point"] = describe(p);
        if (!o.point2.empty()) {
            const auto q2 = parse_point(f, o.point2);
            const auto l = line_through(f, p, q2);
            r.result["joining_line"] = {{"line", to_string(l)}, {"meets_set", counts[index_of(f, l)]}};
        }
        return;
    }
    json all = json::array();
    for (const auto& p : s.points()) {
        const auto t = point_type(f, counts, p);
        all.push_back({{"point", to_string(p)}, {"type", t.render()}});
    }
    r.result["points"] = all;
}

void cmd_zset(const Opts& o, Report& r)
{
    const auto c = primary_curve(o);
    const auto z = complement_zset(c);
    r.result = curve_header(c);
    r.result["size"] = z.size();
    r.result["spectrum"] = spectrum_json(spectrum(z));
    if (o.list) r.result["points"] = points_json(z.points());
    if (!o.write.empty()) {
        std::ostringstream text;
        write_arc(text, z);
        write_output_file(o.write, text.str());
        r.result["written"] = o.write;
    }
}

void cmd_sziklai(const Opts& o, Report& r)
{
    const auto c = primary_curve(o);
    const Field& f = c.field();
    const auto comps = linear_components(c);
    const std::uint64_t bound = static_cast<std::uint64_t>(c.degree() - 1) * f.q() + 1;
    r.result = curve_header(c);
    r.result["N"] = c.count();
    r.result["bound"] = bound;
    json cj = json::array();
    for (const auto& l : comps) {
        const auto cof = exact_divide(c.equation(), HPoly::linear(c.field_ptr(), l.a, l.b, l.c));
        cj.push_back({{"line", to_string(l)}, {"cofactor", cof ? cof->to_string() : std::string("-")}});
    }
    r.result["linear_components"] = cj;
    if (!comps.empty()) {
        r.result["applicable"] = false;
        return;
    }
    r.result["applicable"] = true;
    bool holds = c.count() <= bound;
    std::string got = std::to_string(c.count());
    if (!holds && f.q() == 4 && c.degree() == 4) {
        const auto ex = family_catalog({Family::exceptional4, {}}, c.field_ptr());
        if (are_equivalent(c, ex)) {
            holds = true;
            got += " (the F_4 exceptional quartic)";
        }
    }
    r.result["exception"] = holds && c.count() > bound;
    r.check("N_q <= (d-1)q + 1", "<= " + std::to_string(bound), got, holds);
}

void cmd_arc_import(const Opts& o, Report& r)
{
    if (o.generator.empty()) throw UsageError("arc-import needs --generator <file>");
    auto in = open_input(o.generator);
    const auto g = read_generator(in, cap_of(o));
    const auto pts = g.code.column_points();
    const PointSet s(g.code.field_ptr(), pts, true);
    const auto w = weight_enumerator(g.code);
    r.result["q"] = g.code.field().q();
    r.result["n"] = g.code.length();
    r.result["declared_distance"] = g.declared_distance;
    r.result["distance"] = w.min_distance();
    r.result["spectrum"] = spectrum_json(spectrum(s));
    if (o.list) r.result["points"] = points_json(s.points());
    r.check("declared minimum distance", std::to_string(g.declared_distance), std::to_string(w.min_distance()),
            g.declared_distance == w.min_distance());
    if (g.weights) {
        std::vector<std::uint64_t> tail(w.c.begin() + std::min<std::size_t>(g.declared_distance, w.c.size()), w.c.end());
        auto text = [](const std::vector<std::uint64_t>& v) {
            std::string s;
            for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
            return s;
        };
        r.check("declared weights c_d..c_n", text(*g.weights), text(tail), *g.weights == tail);
    }
    if (!o.write.empty()) {
        std::ostringstream text;
        write_arc(text, s);
        write_output_file(o.write, text.str());
        r.result["written"] = o.write;
    }
}

void cmd_arc_export(const Opts& o, Report& r)
{
    const auto s = primary_arc(o);
    const auto g = make_generator_file(code_from_arc(s), o.weights);
    std::ostringstream text;
    write_generator(text, g);
    r.result["n"] = g.code.length();
    r.result["distance"] = g.declared_distance;
    if (!o.write.empty()) {
        write_output_file(o.write, text.str());
        r.result["written"] = o.write;
    } else {
        json lines = json::array();
        std::istringstream in(text.str());
        for (std::string line; std::getline(in, line);) lines.push_back(line);
        r.result["generator"] = lines;
    }
}

void cmd_code(const Opts& o, Report& r)
{
    const auto code = code_from_arc(primary_arc(o));
    const auto w = weight_enumerator(code);
    const auto q = code.field().q();
    r.result["n"] = code.length();
    r.result["k"] = 3;
    r.result["d"] = w.min_distance();
    r.result["q"] = q;
    r.result["parameters"] = "[" + std::to_string(code.length()) + ",3," + std::to_string(w.min_distance()) + "]_" +
                             std::to_string(q);
    json rows = json::array();
    for (const auto& row : code.rows()) {
        std::string s;
        for (auto e : row) s += (s.empty() ? "" : " ") + code.field().to_string(e);
        rows.push_back(s);
    }
    r.result["rows"] = rows;
}

void cmd_weights(const Opts& o, Report& r)
{
    if (!o.generator.empty()) {
        auto in = open_input(o.generator);
        r.result["enumerator"] = enumerator_json(weight_enumerator(read_generator(in, cap_of(o)).code));
        return;
    }
    r.result["enumerator"] = enumerator_json(weight_enumerator(code_from_arc(primary_arc(o))));
}

void cmd_weight_check(const Opts& o, Report& r)
{
    const auto s = primary_arc(o);
    const auto code = code_from_arc(s);
    const auto sp = spectrum(s);
    const auto w = weight_enumerator(code);
    const auto from_sp = enumerator_from_spectrum(sp);
    r.result["spectrum"] = spectrum_json(sp);
    r.result["enumerator"] = enumerator_json(w);
    r.check("(q-1) a_i = c_{n-i}", enumerator_text(from_sp), enumerator_text(w), spectrum_weight_check(code, sp));
}

void cmd_equiv(const Opts& o, Report& r)
{
    const bool curves = !o.curve2.empty();
    if (curves) {
        const auto c1 = primary_curve(o);
        auto in = open_input(o.curve2);
        const PlaneCurve c2(read_curve(in, cap_of(o)));
        const auto w = are_equivalent(c1, c2);
        r.result["kind"] = "curves";
        r.result["equivalent"] = w.has_value();
        if (w) {
            r.result["witness"] = w->to_string();
            r.check("witness maps the first curve onto the second", "proportional",
                    apply(*w, c1).equation().proportional_to(c2.equation()) ? "proportional" : "not proportional",
                    apply(*w, c1).equation().proportional_to(c2.equation()));
        }
        return;
    }
    if (o.arc2.empty()) throw UsageError("equiv needs --curve2 <file> or --arc2 <file>");
    const auto s1 = primary_arc(o);
    const auto s2 = read_arc_file(o, o.arc2);
    EquivalenceStats stats;
    const auto w = find_equivalence(s1, s2, nullptr, &stats);
    r.result["kind"] = "point sets";
    r.result["equivalent"] = w.has_value();
    r.result["frames_tried"] = stats.frames_tried;
    if (w) {
        r.result["witness"] = w->to_string();
        r.check("witness maps the first set onto the second", "equal",
                apply(*w, s1) == s2 ? "equal" : "different", apply(*w, s1) == s2);
    }
}

void cmd_nu_q(const Opts& o, Report& r)
{
    const auto fc = count_family_classes(field_from(o));
    auto text = [](const std::array<Elem, 3>& t) {
        return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
    };
    r.result["q"] = fc.q;
    r.result["nu"] = fc.count();
    json reps = json::array();
    for (const auto& t : fc.representatives) reps.push_back(text(t));
    r.result["representatives"] = reps;
    json classes = json::object();
    for (std::size_t i = 0; i < fc.triples.size(); ++i) classes[text(fc.triples[i])] = fc.class_of[i];
    r.result["class_of"] = classes;
}

void cmd_frobenius(const Opts& o, Report& r)
{
    const auto c = primary_curve(o);
    const auto rep = frobenius_classical(c);
    r.result = curve_header(c);
    r.result["classical"] = rep.classical;
    r.result["divides_criterion"] = rep.divides_criterion;
    r.result["criterion_zero"] = rep.criterion_zero;
    r.result["order"] = rep.order;
}

json basic_json(const BasicBound& b)
{
    return {{"value", rational_text(b.value)}, {"floor", b.floor}};
}

void cmd_sv_bound(const Opts& o, Report& r)
{
    if (o.curve.empty() && o.family.empty()) {
        if (!o.degree || !o.q) throw UsageError("sv-bound needs a curve, or --degree with --q");
        r.result["basic"] = basic_json(sv_basic_bound(*o.degree, *o.q));
        return;
    }
    const auto c = primary_curve(o);
    const auto rep = sv_refined_bound(c, o.nu, o.ext.value_or(2), cap_of(o));
    r.result = curve_header(c);
    r.result["genus"] = rep.genus;
    r.result["nu"] = rep.nu;
    r.result["nu_supplied"] = rep.nu_supplied;
    r.result["basic"] = basic_json(rep.basic);
    r.result["sum_deficiency"] = rep.sum_deficiency;
    r.result["rhs"] = rational_text(rep.rhs);
    r.result["N"] = rep.points;
    r.result["attained"] = rep.attained;
    r.result["nonsingular_checked_up_to"] = rep.nonsingular_checked_up_to;
    if (!rep.caveat.empty()) r.result["caveat"] = rep.caveat;
    if (o.list) {
        json rows = json::array();
        for (const auto& t : rep.table)
            rows.push_back({{"point", to_string(t.point)}, {"tangent", to_string(t.tangent)},
                            {"j2", t.j2 ? json(*t.j2) : json("component")}});
        r.result["table"] = rows;
    }
    r.check("2 N_q <= nu(2g-2) + (q+2)d - sum A(P)", "<= " + std::to_string(rep.rhs_twice),
            std::to_string(2 * rep.points), rep.bound_holds);
}

void cmd_inflections(const Opts& o, Report& r)
{
    const auto c = primary_curve(o);
    r.result = curve_header(c);
    if (!o.point.empty()) {
        const auto p = parse_point(c.field(), o.point);
        std::optional<PLine> l;
        if (!o.line.empty()) l = parse_line(c.field(), o.line);
        const auto t = tangent_and_multiplicity(c, p, l);
        r.result["point"] = to_string(p);
        r.result["tangent"] = to_string(t.tangent);
        if (l) r.result["line"] = to_string(*l);
        r.result["multiplicity"] = t.multiplicity ? json(*t.multiplicity) : json("component");
        return;
    }
    r.result["inflections"] = points_json(inflection_points(c));
    if (o.list) {
        json rows = json::array();
        for (const auto& t : tangency_table(c))
            rows.push_back({{"point", to_string(t.point)}, {"tangent", to_string(t.tangent)},
                            {"j2", t.j2 ? json(*t.j2) : json("component")}});
        r.result["table"] = rows;
    }
}

std::vector<PPoint> points_from_file(const Opts& o, const std::string& path)
{
    if (path.empty()) return {};
    return read_arc_file(o, path).points();
}

void cmd_noether(const Opts& o, Report& r)
{
    std::optional<NoetherProblem> prob;
    if (!o.preset.empty()) {
        if (o.preset != "q7-quadric") throw UsageError("unknown --preset '" + o.preset + "'");
        auto f = make_field_of_order(7);
        prob = NoetherProblem{data::sextic_g(f), data::quartic_h(f), 6, data::quadric_constraints(f), {},
                              HPoly::monomial(f, 0, 0, 0, 1)};
    } else {
        if (o.curve.empty() || o.curve2.empty() || !o.degree)
            throw UsageError("noether needs --curve G --curve2 H --degree D, or --preset q7-quadric");
        auto g_in = open_input(o.curve);
        auto h_in = open_input(o.curve2);
        HPoly g = read_curve(g_in, cap_of(o));
        HPoly h = read_curve(h_in, cap_of(o));
        prob = NoetherProblem{g, h, *o.degree, points_from_file(o, o.vanish), points_from_file(o, o.nonvanish), {}};
        if (!o.fixed_a.empty()) {
            auto a_in = open_input(o.fixed_a);
            prob->fixed_a = read_curve(a_in, cap_of(o));
        }
    }
    const auto res = noether_reconstruct(*prob);
    const Field& f = prob->g.field();
    r.result["g"] = prob->g.to_string();
    r.result["h"] = prob->h.to_string();
    r.result["target_degree"] = prob->target_degree;
    r.result["intersection"] = points_json(res.intersection);
    r.result["degree_a"] = res.degree_a;
    r.result["degree_b"] = res.degree_b;
    r.result["unknowns"] = res.unknowns;
    r.result["kind"] = to_string(res.solution.kind);
    r.result["rank"] = res.solution.rank;
    json part = json::array();
    for (auto v : res.solution.particular) part.push_back(f.to_string(v));
    r.result["particular"] = part;
    r.result["nullity"] = res.solution.nullspace.size();
    if (res.surviving) r.result["surviving"] = *res.surviving;
    r.result["forced_trivial"] = res.forced_trivial;
}

void cmd_solve(const Opts& o, Report& r)
{
    if (o.k0_system) {
        if (!o.q) throw UsageError("--k0-system needs --q");
        const auto sys = k0_system(*o.q);
        const auto s = solve(RationalDomain{}, sys.matrix, sys.rhs);
        r.result["unknowns"] = {"a_{q-3}", "a_{q-2}", "a_{q-1}"};
        r.result["kind"] = to_string(s.kind);
        json part = json::array();
        for (const auto& v : s.particular) part.push_back(rational_text(v));
        r.result["solution"] = part;
        return;
    }
    if (o.matrix.empty()) throw UsageError("solve needs --k0-system or --matrix <file>");
    // "q rows cols", then rows of cols + 1 entries: the augmented matrix [A | b].
    auto in = open_input(o.matrix);
    std::uint64_t q = 0;
    std::size_t rows = 0, cols = 0;
    if (!(in >> q >> rows >> cols)) throw ParseError("matrix file: expected header 'q rows cols'");
    auto f = make_field_of_order(q, cap_of(o));
    Matrix<Elem> a(rows, std::vector<Elem>(cols));
    std::vector<Elem> b(rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j <= cols; ++j) {
            std::string tok;
            if (!(in >> tok)) throw ParseError("matrix file: row " + std::to_string(i + 1) + " is short");
            Elem e;
            try {
                e = f->parse(tok);
            } catch (const DomainError& err) {
                throw ParseError("matrix file: " + std::string(err.what()));
            }
            (j < cols ? a[i][j] : b[i]) = e;
        }
    const auto s = solve(GFDomain{f.get()}, a, b);
    r.result["q"] = q;
    r.result["kind"] = to_string(s.kind);
    r.result["rank"] = s.rank;
    auto vec = [&](const std::vector<Elem>& v) {
        json j = json::array();
        for (auto e : v) j.push_back(f->to_string(e));
        return j;
    };
    r.result["particular"] = vec(s.particular);
    json ns = json::array();
    for (const auto& v : s.nullspace) ns.push_back(vec(v));
    r.result["nullspace"] = ns;
}

void cmd_verify(const Opts& o, Report& r, json& timing)
{
    verify::Options vo;
    vo.q = o.q;
    if (o.seed) vo.seed = *o.seed;
    std::vector<int> ids = o.criteria.empty() ? verify::criterion_ids() : o.criteria;
    json crit = json::array();
    for (int id : ids) {
        const auto c = verify::run_criterion(id, vo);
        timing["criteria"][std::to_string(id)] = c.seconds;
        json entry = {{"id", c.id}, {"title", c.title}, {"verdict", verify::to_string(c.verdict())},
                      {"checks", c.checks.size()}};
        if (!c.note.empty()) entry["note"] = c.note;
        crit.push_back(entry);
        for (const auto& ch : c.checks) r.check("C" + std::to_string(id) + ": " + ch.name, ch.expected, ch.got, ch.pass);
    }
    r.result["criteria"] = crit;
    r.result["seed"] = vo.seed;
}

// ---- output ------------------------------------------------------------------

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string render(const json& report, const std::string& format)
{
    if (format == "json") return report.dump(2) + "\n";
    std::string out = "key,value\n";
    const json flat = report.flatten();
    for (const auto& [key, value] : flat.items())
        out += csv_field(key) + "," + csv_field(value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"curveforge: plane curves, arcs and codes over finite fields"};
    app.name("curveforge");
    app.require_subcommand(1);
    app.fallthrough();
    app.set_help_flag("--help", "print this help and exit");
    Opts o;

    app.add_option("--q", o.q, "field order");
    app.add_option("--p", o.p, "field characteristic");
    app.add_option("--h", o.h, "extension degree over the prime field");
    app.add_option("--family", o.family, "catalog curve: fermat, exceptional4, hermitian, homma_q, homma_q1, tallini, conic");
    app.add_option("--params", o.params, "comma-separated family parameters");
    app.add_flag("--sum-zero", o.sum_zero, "fermat: require alpha + beta + gamma = 0");
    app.add_option("--curve", o.curve, "curve file");
    app.add_option("--curve2", o.curve2, "second curve file");
    app.add_option("--arc", o.arc, "arc file");
    app.add_option("--arc2", o.arc2, "second arc file");
    app.add_option("--ext", o.ext, "extension degree m");
    app.add_option("--seed", o.seed, "seed for randomized suites");
    app.add_option("--out", o.out, "write the report here instead of stdout");
    app.add_option("--format", o.format, "report format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--cap", o.cap, "field-size cap");
    app.add_flag("--list", o.list, "include full point lists and tables");

    auto sub = [&](const std::string& name) {
        for (const auto& info : subcommand_table())
            if (info.name == name) return app.add_subcommand(name, info.summary);
        throw std::logic_error("subcommand missing from table: " + name);
    };

    auto* field = sub("field");
    field->add_flag("--elements", o.elements, "list the elements");
    field->add_option("--op", o.op, "add, sub, mul, div, pow, inv, neg, log, frobenius");
    field->add_option("--a", o.a, "first operand");
    field->add_option("--b", o.b, "second operand (integer exponent for pow)");
    field->add_option("--embed-into", o.embed_into, "embed into the degree-m extension");
    sub("points")->add_option("--point", o.point, "evaluate F and its gradient at (x:y:z)");
    sub("points-ext");
    sub("spectrum");
    auto* ptype = sub("point-type");
    ptype->add_option("--point", o.point, "point (x:y:z)");
    ptype->add_option("--point2", o.point2, "second point: report the joining line");
    sub("zset")->add_option("--write", o.write, "write the set as an arc file");
    sub("sziklai-check");
    auto* imp = sub("arc-import");
    imp->add_option("--generator", o.generator, "generator-matrix file");
    imp->add_option("--write", o.write, "write the arc file here");
    auto* exp = sub("arc-export");
    exp->add_flag("--weights", o.weights, "append the weight line");
    exp->add_option("--write", o.write, "write the generator file here");
    sub("code");
    sub("weights")->add_option("--generator", o.generator, "generator-matrix file");
    sub("weight-check");
    sub("equiv");
    sub("nu-q");
    sub("frobenius");
    auto* sv = sub("sv-bound");
    sv->add_option("--nu", o.nu, "Frobenius order when known");
    sv->add_option("--degree", o.degree, "degree for the basic bound without a curve");
    auto* infl = sub("inflections");
    infl->add_option("--point", o.point, "tangent and multiplicity at (x:y:z)");
    infl->add_option("--line", o.line, "intersection multiplicity with [a:b:c] instead of the tangent");
    auto* noe = sub("noether");
    noe->add_option("--degree", o.degree, "target degree");
    noe->add_option("--vanish", o.vanish, "arc file of points F must vanish at");
    noe->add_option("--nonvanish", o.nonvanish, "arc file of points F must not vanish at");
    noe->add_option("--fixed-a", o.fixed_a, "curve file fixing the cofactor A");
    noe->add_option("--preset", o.preset, "q7-quadric: the q = 7 quadric elimination");
    auto* sol = sub("solve");
    sol->add_flag("--k0-system", o.k0_system, "the three-identity spectrum system for --q");
    sol->add_option("--matrix", o.matrix, "augmented GF(q) matrix file");
    sub("verify-paper")->add_option("--criterion", o.criteria, "run only these criteria");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    const auto start = std::chrono::steady_clock::now();
    Report report;
    json timing = json::object();
    try {
        if (command == "field") cmd_field(o, report);
        else if (command == "points") cmd_points(o, report);
        else if (command == "points-ext") cmd_points_ext(o, report);
        else if (command == "spectrum") cmd_spectrum(o, report);
        else if (command == "point-type") cmd_point_type(o, report);
        else if (command == "zset") cmd_zset(o, report);
        else if (command == "sziklai-check") cmd_sziklai(o, report);
        else if (command == "arc-import") cmd_arc_import(o, report);
        else if (command == "arc-export") cmd_arc_export(o, report);
        else if (command == "code") cmd_code(o, report);
        else if (command == "weights") cmd_weights(o, report);
        else if (command == "weight-check") cmd_weight_check(o, report);
        else if (command == "equiv") cmd_equiv(o, report);
        else if (command == "nu-q") cmd_nu_q(o, report);
        else if (command == "frobenius") cmd_frobenius(o, report);
        else if (command == "sv-bound") cmd_sv_bound(o, report);
        else if (command == "inflections") cmd_inflections(o, report);
        else if (command == "noether") cmd_noether(o, report);
        else if (command == "solve") cmd_solve(o, report);
        else if (command == "verify-paper") cmd_verify(o, report, timing);
    } catch (const UsageError& e) {
        err << "curveforge " << command << ": " << e.what() << "\n";
        return exit_usage;
    } catch (const IoError& e) {
        err << "curveforge " << command << ": " << e.what() << "\n";
        return exit_io;
    } catch (const ParseError& e) {
        err << "curveforge " << command << ": parse error: " << e.what() << "\n";
        return exit_parse;
    } catch (const CapExceeded& e) {
        err << "curveforge " << command << ": cap exceeded: " << e.what() << "\n";
        return exit_cap;
    } catch (const Error& e) {
        err << "curveforge " << command << ": " << e.what() << "\n";
        return exit_domain;
    }
    timing["total"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    const bool pass = report.all_pass();
    json doc = {{"command", command}, {"parameters", parameters_of(o)}, {"result", report.result},
                {"checks", report.checks}, {"pass", pass}, {"wall_time", timing}};
    const std::string text = render(doc, o.format);
    if (o.out.empty()) {
        out << text;
    } else {
        std::ofstream file(o.out);
        if (!file) {
            err << "curveforge: cannot write " << o.out << "\n";
            return exit_io;
        }
        file << text;
    }
    return pass ? exit_ok : exit_check_failed;
}

}  // namespace curveforge::cli
