#include "curveforge/hpoly.hpp"

#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "curveforge/error.hpp"

namespace curveforge {

namespace {

using Coeffs = std::vector<Elem>;

void trim(Coeffs& c)
{
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Coeffs uni_mul(const Field& f, const Coeffs& a, const Coeffs& b)
{
    if (a.empty() || b.empty()) return {};
    Coeffs r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    trim(r);
    return r;
}

std::vector<Coeffs> uni_powers(const Field& f, Coeffs base, unsigned up_to)
{
    trim(base);
    std::vector<Coeffs> out;
    out.reserve(up_to + 1);
    out.push_back({1});
    for (unsigned e = 1; e <= up_to; ++e) out.push_back(uni_mul(f, out.back(), base));
    return out;
}

}  // namespace

HPoly::HPoly(FieldPtr field, unsigned degree)
    : field_(std::move(field)), degree_(degree), coeffs_(term_count(degree), 0)
{
    if (!field_) throw DomainError("polynomial needs a field");
}

HPoly HPoly::monomial(FieldPtr field, unsigned i, unsigned j, unsigned k, Elem coeff)
{
    HPoly p(std::move(field), i + j + k);
    p.set(i, j, k, coeff);
    return p;
}

HPoly HPoly::linear(FieldPtr field, Elem a, Elem b, Elem c)
{
    HPoly p(std::move(field), 1);
    p.set(1, 0, 0, a);
    p.set(0, 1, 0, b);
    p.set(0, 0, 1, c);
    return p;
}

HPoly HPoly::from_terms(FieldPtr field, unsigned degree, const std::vector<Term>& terms)
{
    HPoly p(std::move(field), degree);
    for (const auto& t : terms) p.accumulate(t.i, t.j, t.k, t.coeff);
    return p;
}

bool HPoly::is_zero() const
{
    for (Elem c : coeffs_)
        if (c != 0) return false;
    return true;
}

Elem HPoly::coeff(unsigned i, unsigned j, unsigned k) const
{
    if (i + j + k != degree_) return 0;
    return coeffs_[term_index(degree_, i, j)];
}

void HPoly::set(unsigned i, unsigned j, unsigned k, Elem c)
{
    if (i + j + k != degree_)
        throw DomainError("exponents (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
                          ") do not sum to degree " + std::to_string(degree_));
    if (c >= field_->q()) throw DomainError("coefficient out of range");
    coeffs_[term_index(degree_, i, j)] = c;
}

void HPoly::accumulate(unsigned i, unsigned j, unsigned k, Elem c)
{
    if (i + j + k != degree_) throw DomainError("exponents do not sum to the degree");
    auto& slot = coeffs_[term_index(degree_, i, j)];
    slot = field_->add(slot, c);
}

std::vector<Term> HPoly::terms() const
{
    std::vector<Term> out;
    std::size_t idx = 0;
    for (unsigned i = degree_ + 1; i-- > 0;) {
        for (unsigned j = degree_ - i + 1; j-- > 0;) {
            Elem c = coeffs_[idx++];
            if (c != 0) out.push_back({i, j, degree_ - i - j, c});
        }
    }
    return out;
}

Elem HPoly::evaluate(const Triple& v) const
{
    const Field& f = *field_;
    std::vector<Elem> px(degree_ + 1), py(degree_ + 1), pz(degree_ + 1);
    px[0] = py[0] = pz[0] = 1;
    for (unsigned e = 1; e <= degree_; ++e) {
        px[e] = f.mul(px[e - 1], v[0]);
        py[e] = f.mul(py[e - 1], v[1]);
        pz[e] = f.mul(pz[e - 1], v[2]);
    }
    Elem acc = 0;
    std::size_t idx = 0;
    for (unsigned i = degree_ + 1; i-- > 0;) {
        for (unsigned j = degree_ - i + 1; j-- > 0;) {
            Elem c = coeffs_[idx++];
            if (c != 0) acc = f.add(acc, f.mul(c, f.mul(px[i], f.mul(py[j], pz[degree_ - i - j]))));
        }
    }
    return acc;
}

void HPoly::check_same(const HPoly& o) const
{
    if (!field_->same_as(*o.field_)) throw FieldMismatch("polynomials over different fields");
}

HPoly HPoly::operator+(const HPoly& o) const
{
    check_same(o);
    if (degree_ != o.degree_) throw DomainError("adding homogeneous polynomials of different degrees");
    HPoly r = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = field_->add(coeffs_[i], o.coeffs_[i]);
    return r;
}

HPoly HPoly::operator-(const HPoly& o) const
{
    check_same(o);
    if (degree_ != o.degree_) throw DomainError("subtracting homogeneous polynomials of different degrees");
    HPoly r = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = field_->sub(coeffs_[i], o.coeffs_[i]);
    return r;
}

HPoly HPoly::operator*(const HPoly& o) const
{
    check_same(o);
    HPoly r(field_, degree_ + o.degree_);
    auto ta = terms();
    auto tb = o.terms();
    for (const auto& a : ta)
        for (const auto& b : tb) {
            auto& slot = r.coeffs_[term_index(r.degree_, a.i + b.i, a.j + b.j)];
            slot = field_->add(slot, field_->mul(a.coeff, b.coeff));
        }
    return r;
}

HPoly HPoly::scaled(Elem c) const
{
    HPoly r = *this;
    for (auto& x : r.coeffs_) x = field_->mul(x, c);
    return r;
}

HPoly HPoly::pow(unsigned e) const
{
    HPoly r = monomial(field_, 0, 0, 0, 1);
    for (unsigned n = 0; n < e; ++n) r = r * *this;
    return r;
}

HPoly HPoly::partial(int var) const
{
    if (var < 0 || var > 2) throw DomainError("partial: variable must be 0, 1 or 2");
    HPoly r(field_, degree_ == 0 ? 0 : degree_ - 1);
    if (degree_ == 0) return r;
    for (const auto& t : terms()) {
        unsigned e[3] = {t.i, t.j, t.k};
        if (e[var] == 0) continue;
        Elem c = field_->mul(t.coeff, field_->from_int(e[var]));
        --e[var];
        if (c != 0) r.accumulate(e[0], e[1], e[2], c);
    }
    return r;
}

HPoly HPoly::embed(const Embedding& e) const
{
    if (!e.source()->same_as(*field_)) throw FieldMismatch("embedding source is not the polynomial's field");
    HPoly r(e.target(), degree_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = e(coeffs_[i]);
    return r;
}

bool HPoly::proportional_to(const HPoly& o) const
{
    if (!field_->same_as(*o.field_) || degree_ != o.degree_) return false;
    if (is_zero() || o.is_zero()) return false;
    return monic() == o.monic();
}

HPoly HPoly::monic() const
{
    for (Elem c : coeffs_)
        if (c != 0) return scaled(field_->inv(c));
    return *this;
}

bool HPoly::operator==(const HPoly& o) const
{
    return field_->same_as(*o.field_) && degree_ == o.degree_ && coeffs_ == o.coeffs_;
}

std::string HPoly::to_string() const
{
    auto ts = terms();
    if (ts.empty()) return "0";
    std::string out;
    const char* names[3] = {"X", "Y", "Z"};
    for (std::size_t n = 0; n < ts.size(); ++n) {
        const auto& t = ts[n];
        if (n) out += " + ";
        std::string mono;
        unsigned e[3] = {t.i, t.j, t.k};
        for (int v = 0; v < 3; ++v) {
            if (e[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[v];
            if (e[v] > 1) mono += "^" + std::to_string(e[v]);
        }
        if (mono.empty())
            out += std::to_string(t.coeff);
        else if (t.coeff == 1)
            out += mono;
        else
            out += std::to_string(t.coeff) + "*" + mono;
    }
    return out;
}

Partials partials(const HPoly& f) { return {f.partial(0), f.partial(1), f.partial(2)}; }

UniPoly::UniPoly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs))
{
    trim(coeffs_);
}

Elem UniPoly::evaluate(Elem t) const
{
    Elem acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_->add(field_->mul(acc, t), *it);
    return acc;
}

UniPoly UniPoly::deflate(Elem t) const
{
    if (coeffs_.empty()) throw DomainError("cannot deflate the zero polynomial");
    // synthetic division by (x - t)
    std::vector<Elem> quotient(coeffs_.size() - 1, 0);
    Elem carry = 0;
    for (std::size_t n = coeffs_.size(); n-- > 1;) {
        carry = field_->add(coeffs_[n], field_->mul(carry, t));
        quotient[n - 1] = carry;
    }
    Elem remainder = field_->add(coeffs_[0], field_->mul(carry, t));
    if (remainder != 0) throw DomainError("deflate: value is not a root");
    return UniPoly(field_, std::move(quotient));
}

unsigned UniPoly::root_multiplicity(Elem t) const
{
    if (coeffs_.empty()) throw DomainError("root multiplicity of the zero polynomial is undefined");
    unsigned m = 0;
    UniPoly cur = *this;
    while (cur.degree() > 0 && cur.evaluate(t) == 0) {
        cur = cur.deflate(t);
        ++m;
    }
    return m;
}

UniPoly UniPoly::embed(const Embedding& e) const
{
    std::vector<Elem> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = e(coeffs_[i]);
    return UniPoly(e.target(), std::move(c));
}

unsigned LineRestriction::infinity_multiplicity() const
{
    if (poly.is_zero()) throw DomainError("line is a component; multiplicity is infinite");
    return degree - static_cast<unsigned>(poly.degree());
}

std::optional<Elem> LineRestriction::parameter_of(const Triple& p) const
{
    const Field& f = poly.field();
    auto c = cross(f, p, direction);
    if (c[0] == 0 && c[1] == 0 && c[2] == 0) return std::nullopt;
    for (int r = 0; r < 3; ++r)
        for (int s = r + 1; s < 3; ++s) {
            Elem det = f.sub(f.mul(base[r], direction[s]), f.mul(base[s], direction[r]));
            if (det == 0) continue;
            Elem lambda = f.div(f.sub(f.mul(p[r], direction[s]), f.mul(p[s], direction[r])), det);
            Elem mu = f.div(f.sub(f.mul(base[r], p[s]), f.mul(base[s], p[r])), det);
            if (lambda == 0) return std::nullopt;
            return f.div(mu, lambda);
        }
    throw DomainError("degenerate line parameterization");
}

std::optional<unsigned> LineRestriction::multiplicity_at(const Triple& p) const
{
    if (poly.is_zero()) return std::nullopt;
    auto t = parameter_of(p);
    if (!t) return infinity_multiplicity();
    return poly.root_multiplicity(*t);
}

LineRestriction restrict_to_span(const HPoly& f, const Triple& base, const Triple& direction)
{
    const Field& fld = f.field();
    const unsigned d = f.degree();
    std::array<std::vector<Coeffs>, 3> pw;
    for (int c = 0; c < 3; ++c) pw[c] = uni_powers(fld, {base[c], direction[c]}, d);
    Coeffs acc(d + 1, 0);
    for (const auto& t : f.terms()) {
        Coeffs m = uni_mul(fld, uni_mul(fld, pw[0][t.i], pw[1][t.j]), pw[2][t.k]);
        for (std::size_t n = 0; n < m.size(); ++n) acc[n] = fld.add(acc[n], fld.mul(t.coeff, m[n]));
    }
    return LineRestriction{UniPoly(f.field_ptr(), std::move(acc)), d, base, direction};
}

LineRestriction restrict_to_line(const HPoly& f, const PLine& l)
{
    if (f.is_zero()) throw DomainError("restriction of the zero polynomial");
    auto pts = points_on(f.field(), l);
    return restrict_to_span(f, coords(pts[0]), coords(pts[1]));
}

std::optional<HPoly> exact_divide(const HPoly& f, const HPoly& g)
{
    if (g.is_zero()) throw ZeroDivision("exact_divide by the zero polynomial");
    if (!f.field().same_as(g.field())) throw FieldMismatch("exact_divide over different fields");
    if (g.degree() > f.degree()) return std::nullopt;
    const Field& fld = f.field();
    const unsigned df = f.degree();
    const unsigned dg = g.degree();
    auto gterms = g.terms();
    const Term lead = gterms.front();  // lex-largest monomial, canonical order is lex X > Y > Z
    const Elem lead_inv = fld.inv(lead.coeff);

    std::vector<Elem> rem = f.dense();
    HPoly quotient(f.field_ptr(), df - dg);
    std::size_t idx = 0;
    for (unsigned i = df + 1; i-- > 0;) {
        for (unsigned j = df - i + 1; j-- > 0; ++idx) {
            const Elem c = rem[idx];
            if (c == 0) continue;
            const unsigned k = df - i - j;
            if (i < lead.i || j < lead.j || k < lead.k) return std::nullopt;
            const unsigned qi = i - lead.i, qj = j - lead.j, qk = k - lead.k;
            const Elem factor = fld.mul(c, lead_inv);
            quotient.accumulate(qi, qj, qk, factor);
            for (const auto& t : gterms) {
                auto& slot = rem[HPoly::term_index(df, qi + t.i, qj + t.j)];
                slot = fld.sub(slot, fld.mul(factor, t.coeff));
            }
        }
    }
    return quotient;
}

HPoly substitute(const HPoly& f, const Projectivity& a)
{
    if (!a.field().same_as(f.field())) throw FieldMismatch("projectivity and polynomial over different fields");
    const auto inv = a.inverse().entries();
    const FieldPtr& fp = f.field_ptr();
    const unsigned d = f.degree();
    std::array<std::vector<HPoly>, 3> pw;
    for (int r = 0; r < 3; ++r) {
        HPoly lin = HPoly::linear(fp, inv[3 * r], inv[3 * r + 1], inv[3 * r + 2]);
        pw[r].push_back(HPoly::monomial(fp, 0, 0, 0, 1));
        for (unsigned e = 1; e <= d; ++e) pw[r].push_back(pw[r].back() * lin);
    }
    HPoly out(fp, d);
    for (const auto& t : f.terms()) out = out + (pw[0][t.i] * pw[1][t.j] * pw[2][t.k]).scaled(t.coeff);
    return out;
}

void write_curve(std::ostream& out, const HPoly& f)
{
    out << f.field().q() << ' ' << f.degree() << '\n';
    for (const auto& t : f.terms()) out << t.i << ' ' << t.j << ' ' << t.k << ' ' << t.coeff << '\n';
}

HPoly read_curve(std::istream& in, std::uint32_t cap)
{
    std::string line;
    auto next_line = [&](std::string& dst) {
        while (std::getline(in, dst)) {
            auto pos = dst.find('#');
            if (pos != std::string::npos) dst.erase(pos);
            if (dst.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    if (!next_line(line)) throw ParseError("curve file: missing header 'q d'");
    std::istringstream header(line);
    std::uint64_t q = 0;
    long long d = -1;
    std::string extra;
    if (!(header >> q >> d) || (header >> extra) || d < 0) throw ParseError("curve file: bad header '" + line + "'");
    FieldPtr field;
    try {
        field = make_field_of_order(q, cap);
    } catch (const DomainError& e) {
        throw ParseError("curve file: " + std::string(e.what()));
    }
    HPoly f(field, static_cast<unsigned>(d));
    std::set<std::pair<unsigned, unsigned>> seen;
    while (next_line(line)) {
        std::istringstream row(line);
        long long i = -1, j = -1, k = -1;
        std::string ctext;
        if (!(row >> i >> j >> k >> ctext) || (row >> extra) || i < 0 || j < 0 || k < 0)
            throw ParseError("curve file: bad term line '" + line + "'");
        if (i + j + k != d) throw ParseError("curve file: term '" + line + "' does not have degree " + std::to_string(d));
        if (!seen.insert({static_cast<unsigned>(i), static_cast<unsigned>(j)}).second)
            throw ParseError("curve file: duplicate term '" + line + "'");
        f.set(static_cast<unsigned>(i), static_cast<unsigned>(j), static_cast<unsigned>(k), field->parse(ctext));
    }
    return f;
}

}  // namespace curveforge
