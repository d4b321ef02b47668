#include "curveforge/codes.hpp"

#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "curveforge/error.hpp"
#include "curveforge/projectivity.hpp"

namespace curveforge {

unsigned WeightEnumerator::min_distance() const
{
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i]) return static_cast<unsigned>(i);
    return 0;
}

std::uint64_t WeightEnumerator::total() const
{
    return std::accumulate(c.begin(), c.end(), std::uint64_t{0});
}

LinearCode3::LinearCode3(FieldPtr field, Rows rows) : field_(std::move(field)), rows_(std::move(rows))
{
    const Field& f = *field_;
    const std::size_t n = rows_[0].size();
    if (rows_[1].size() != n || rows_[2].size() != n) throw DomainError("generator rows have different lengths");
    if (n < 3) throw DomainError("a [n,3] code needs n >= 3");
    std::set<Triple> seen;
    for (std::size_t i = 0; i < n; ++i) {
        Triple col = column(i);
        for (Elem e : col)
            if (!f.contains(e)) throw DomainError("generator entry out of range");
        if (col == Triple{0, 0, 0}) throw DomainError("zero column " + std::to_string(i));
        if (!seen.insert(normalize(f, col)).second)
            throw DomainError("column " + std::to_string(i) + " repeats an earlier column up to scalar");
    }
    // Rank 3 iff the columns are not all on one line.
    const auto pts = column_points();
    bool spans = false;
    for (std::size_t i = 2; i < pts.size() && !spans; ++i) spans = !collinear(f, pts[0], pts[1], pts[i]);
    if (!spans) throw DomainError("generator matrix has rank < 3 (columns are collinear)");
}

std::vector<PPoint> LinearCode3::column_points() const
{
    std::vector<PPoint> out;
    out.reserve(length());
    for (std::size_t i = 0; i < length(); ++i) {
        auto t = normalize(*field_, column(i));
        out.push_back({t[0], t[1], t[2]});
    }
    return out;
}

LinearCode3 code_from_arc(const PointSet& s)
{
    if (s.size() < 3) throw DomainError("code_from_arc needs at least 3 points");
    LinearCode3::Rows rows;
    for (const auto& p : s.points()) {
        rows[0].push_back(p.x);
        rows[1].push_back(p.y);
        rows[2].push_back(p.z);
    }
    return LinearCode3(s.field_ptr(), std::move(rows));
}

WeightEnumerator weight_enumerator(const LinearCode3& code)
{
    const Field& f = code.field();
    const Elem q = f.q();
    if (q > max_enumeration_q)
        throw CapExceeded("codeword enumeration is limited to q <= " + std::to_string(max_enumeration_q));
    const std::size_t n = code.length();
    const auto& r = code.rows();
    WeightEnumerator w;
    w.c.assign(n + 1, 0);
    std::vector<Elem> partial(n);
    for (Elem m0 = 0; m0 < q; ++m0)
        for (Elem m1 = 0; m1 < q; ++m1) {
            for (std::size_t i = 0; i < n; ++i) partial[i] = f.add(f.mul(m0, r[0][i]), f.mul(m1, r[1][i]));
            for (Elem m2 = 0; m2 < q; ++m2) {
                std::size_t weight = 0;
                for (std::size_t i = 0; i < n; ++i) weight += f.add(partial[i], f.mul(m2, r[2][i])) != 0;
                ++w.c[weight];
            }
        }
    return w;
}

WeightEnumerator enumerator_from_spectrum(const ArcSpectrum& sp)
{
    WeightEnumerator w;
    w.c.assign(sp.k + 1, 0);
    w.c[0] = 1;
    for (std::size_t i = 0; i < sp.a.size() && i < sp.k; ++i) w.c[sp.k - i] += (sp.q - 1) * sp.a[i];
    return w;
}

bool spectrum_weight_check(const LinearCode3& code, const ArcSpectrum& sp)
{
    if (sp.q != code.field().q()) throw DomainError("spectrum and code are over different fields");
    if (sp.k != code.length()) throw DomainError("spectrum and code describe sets of different sizes");
    const WeightEnumerator w = weight_enumerator(code);
    const std::size_t n = code.length();
    for (std::size_t i = 0; i < sp.a.size(); ++i) {
        const std::uint64_t lhs = (sp.q - 1) * sp.a[i];
        if (i > n) {
            if (lhs != 0) return false;
            continue;
        }
        // Weight 0 also holds the zero word.
        const std::uint64_t rhs = w.c[n - i] - (i == n ? 1 : 0);
        if (lhs != rhs) return false;
    }
    // With the totals equal, no weight outside n - i can carry codewords.
    const std::uint64_t q = sp.q;
    return w.total() == q * q * q;
}

GeneratorFile make_generator_file(const LinearCode3& code, bool with_weights)
{
    const WeightEnumerator w = weight_enumerator(code);
    const unsigned d = w.min_distance();
    GeneratorFile g{code, d, std::nullopt};
    if (with_weights) g.weights = std::vector<std::uint64_t>(w.c.begin() + d, w.c.end());
    return g;
}

void write_generator(std::ostream& out, const GeneratorFile& g)
{
    const LinearCode3& c = g.code;
    const Field& f = c.field();
    out << c.length() << " 3 " << g.declared_distance << ' ' << f.q() << '\n';
    for (const auto& row : c.rows()) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << f.to_string(row[i]);
        out << '\n';
    }
    if (g.weights) {
        out << "W:";
        for (auto v : *g.weights) out << ' ' << v;
        out << '\n';
    }
}

namespace {

bool next_content_line(std::istream& in, std::string& line)
{
    while (std::getline(in, line)) {
        if (const auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.find_first_not_of(" \t") != std::string::npos) return true;
    }
    return false;
}

std::vector<Elem> parse_row(const Field& f, const std::string& line, std::size_t n)
{
    std::vector<std::string> tokens;
    std::istringstream ss(line);
    for (std::string tok; ss >> tok;) tokens.push_back(tok);
    if (tokens.size() == 1 && n > 1 && f.q() <= 10) {
        // Compact census layout: one digit per entry.
        const std::string digits = tokens[0];
        tokens.clear();
        for (char ch : digits) tokens.emplace_back(1, ch);
    }
    std::vector<Elem> row;
    for (const auto& tok : tokens) row.push_back(f.parse(tok));
    if (row.size() != n)
        throw ParseError("generator row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(n));
    return row;
}

}  // namespace

GeneratorFile read_generator(std::istream& in, std::uint32_t cap)
{
    std::string line;
    if (!next_content_line(in, line)) throw ParseError("generator file: missing header 'n 3 d q'");
    std::istringstream header(line);
    long long n = -1, k = -1, d = -1;
    std::uint64_t q = 0;
    std::string extra;
    if (!(header >> n >> k >> d >> q) || (header >> extra) || n < 3 || k != 3 || d < 0 || d > n)
        throw ParseError("generator file: bad header '" + line + "'");
    FieldPtr field;
    try {
        field = make_field_of_order(q, cap);
    } catch (const DomainError& e) {
        throw ParseError("generator file: " + std::string(e.what()));
    }
    LinearCode3::Rows rows;
    for (auto& row : rows) {
        if (!next_content_line(in, line)) throw ParseError("generator file: missing generator row");
        row = parse_row(*field, line, static_cast<std::size_t>(n));
    }
    std::optional<std::vector<std::uint64_t>> weights;
    if (next_content_line(in, line)) {
        std::istringstream ws(line);
        std::string tag;
        ws >> tag;
        if (tag != "W:") throw ParseError("generator file: unexpected line '" + line + "'");
        std::vector<std::uint64_t> w;
        std::string tok;
        while (ws >> tok) {
            try {
                std::size_t used = 0;
                w.push_back(std::stoull(tok, &used));
                if (used != tok.size()) throw ParseError("bad count");
            } catch (const std::exception&) {
                throw ParseError("generator file: bad weight count '" + tok + "'");
            }
        }
        if (w.size() != static_cast<std::size_t>(n - d + 1))
            throw ParseError("generator file: W line needs " + std::to_string(n - d + 1) + " counts (c_d..c_n)");
        weights = std::move(w);
        if (next_content_line(in, line)) throw ParseError("generator file: trailing content '" + line + "'");
    }
    try {
        return {LinearCode3(field, std::move(rows)), static_cast<unsigned>(d), std::move(weights)};
    } catch (const DomainError& e) {
        throw ParseError(std::string("generator file: ") + e.what());
    }
}

}  // namespace curveforge
