#include "curveforge/gf.hpp"

#include <cstdlib>
#include <limits>

#include "curveforge/error.hpp"

namespace curveforge {

namespace {

constexpr std::uint32_t kBuiltinCap = 1u << 14;

using PolyP = std::vector<unsigned>;  // coefficients over GF(p), lowest first

void trim(PolyP& f)
{
    while (!f.empty() && f.back() == 0) f.pop_back();
}

unsigned inv_mod(unsigned a, unsigned p)
{
    // p is prime and small; Fermat inverse.
    std::uint64_t result = 1;
    std::uint64_t base = a % p;
    unsigned e = p - 2;
    while (e != 0) {
        if (e & 1u) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<unsigned>(result);
}

// Remainder of f modulo a nonzero g over GF(p).
PolyP poly_mod(PolyP f, const PolyP& g, unsigned p)
{
    trim(f);
    const std::size_t dg = g.size() - 1;
    const unsigned lead_inv = inv_mod(g.back(), p);
    while (f.size() >= g.size()) {
        const unsigned factor = f.back() * lead_inv % p;
        const std::size_t shift = f.size() - 1 - dg;
        for (std::size_t i = 0; i <= dg; ++i) {
            unsigned sub = factor * g[i] % p;
            f[shift + i] = (f[shift + i] + p - sub) % p;
        }
        trim(f);
    }
    return f;
}

PolyP poly_from_code(std::uint64_t code, unsigned p, unsigned len)
{
    PolyP f(len, 0);
    for (unsigned i = 0; i < len; ++i) {
        f[i] = static_cast<unsigned>(code % p);
        code /= p;
    }
    return f;
}

// Irreducible iff no monic factor of degree 1..h/2.
bool is_irreducible(const PolyP& f, unsigned p)
{
    const unsigned h = static_cast<unsigned>(f.size() - 1);
    for (unsigned deg = 1; deg <= h / 2; ++deg) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < deg; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            PolyP g = poly_from_code(code, p, deg);
            g.push_back(1);
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::uint64_t ipow(std::uint64_t b, unsigned e)
{
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

std::uint32_t default_field_cap()
{
    if (const char* env = std::getenv("CURVEFORGE_CAP")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v >= 2 && v <= std::numeric_limits<std::uint32_t>::max())
            return static_cast<std::uint32_t>(v);
    }
    return kBuiltinCap;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool split_prime_power(std::uint64_t q, unsigned& p, unsigned& h)
{
    if (q < 2) return false;
    std::uint64_t d = 2;
    while (d * d <= q && q % d != 0) ++d;
    if (q % d != 0) d = q;
    unsigned e = 0;
    std::uint64_t rest = q;
    while (rest % d == 0) {
        rest /= d;
        ++e;
    }
    if (rest != 1) return false;
    p = static_cast<unsigned>(d);
    h = e;
    return true;
}

FieldPtr make_field(unsigned p, unsigned h, std::uint32_t cap)
{
    if (!is_prime(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
    if (h < 1) throw DomainError("extension degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < h; ++i) {
        q *= p;
        if (q > cap)
            throw CapExceeded("field order " + std::to_string(p) + "^" + std::to_string(h) +
                              " exceeds cap " + std::to_string(cap));
    }
    return FieldPtr(new Field(p, h));
}

FieldPtr make_field_of_order(std::uint64_t q, std::uint32_t cap)
{
    unsigned p = 0;
    unsigned h = 0;
    if (!split_prime_power(q, p, h)) throw DomainError(std::to_string(q) + " is not a prime power");
    return make_field(p, h, cap);
}

Field::Field(unsigned p, unsigned h) : p_(p), h_(h)
{
    q_ = static_cast<Elem>(ipow(p, h));
    order_ = q_ - 1;

    neg_.resize(q_);
    for (Elem a = 0; a < q_; ++a) {
        std::vector<unsigned> d = digits(a);
        for (auto& c : d) c = (p_ - c) % p_;
        neg_[a] = from_digits(d);
    }

    if (h_ > 1) {
        const std::uint64_t count = ipow(p, h);
        for (std::uint64_t code = 0; code < count; ++code) {
            PolyP f = poly_from_code(code, p, h);
            f.push_back(1);
            if (is_irreducible(f, p)) {
                modulus_ = f;
                break;
            }
        }
    }

    // Smallest element of multiplicative order q - 1, found by polynomial arithmetic.
    // For h = 1 this only needs arithmetic mod p, so the modulus can wait.
    if (h_ == 1) modulus_ = {0, 1};
    generator_ = 1;
    for (Elem g = 1; g < q_; ++g) {
        Elem x = g;
        std::uint32_t ord = 1;
        while (x != 1) {
            x = mul_by_poly(x, g);
            ++ord;
        }
        if (ord == order_) {
            generator_ = g;
            break;
        }
    }
    if (h_ == 1) modulus_ = {(p_ - generator_) % p_, 1};

    exp_.resize(2 * static_cast<std::size_t>(order_));
    log_.assign(q_, 0);
    Elem x = 1;
    for (std::uint32_t e = 0; e < order_; ++e) {
        exp_[e] = x;
        exp_[e + order_] = x;
        log_[x] = e;
        x = mul_by_poly(x, generator_);
    }

    zech_.resize(order_);
    for (std::uint32_t n = 0; n < order_; ++n) {
        Elem s = add_by_digits(1, exp_[n]);
        zech_[n] = s == 0 ? -1 : static_cast<std::int32_t>(log_[s]);
    }
}

Elem Field::add_by_digits(Elem a, Elem b) const
{
    Elem result = 0;
    Elem scale = 1;
    for (unsigned i = 0; i < h_; ++i) {
        result += scale * ((a % p_ + b % p_) % p_);
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return result;
}

Elem Field::mul_by_poly(Elem a, Elem b) const
{
    if (h_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
    std::vector<unsigned> da = digits(a);
    std::vector<unsigned> db = digits(b);
    PolyP prod(2 * h_ - 1, 0);
    for (unsigned i = 0; i < h_; ++i)
        for (unsigned j = 0; j < h_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    PolyP r = poly_mod(prod, modulus_, p_);
    r.resize(h_, 0);
    return from_digits(r);
}

Elem Field::inv(Elem a) const
{
    if (a == 0) throw ZeroDivision("inverse of zero");
    return exp_[(order_ - log_[a]) % order_];
}

Elem Field::div(Elem a, Elem b) const
{
    if (b == 0) throw ZeroDivision("division by zero");
    if (a == 0) return 0;
    return exp_[log_[a] + order_ - log_[b]];
}

Elem Field::pow(Elem a, std::int64_t e) const
{
    if (e == 0) return 1;
    if (a == 0) {
        if (e < 0) throw ZeroDivision("negative power of zero");
        return 0;
    }
    std::int64_t r = (static_cast<std::int64_t>(log_[a]) * (e % static_cast<std::int64_t>(order_))) %
                     static_cast<std::int64_t>(order_);
    if (r < 0) r += order_;
    return exp_[static_cast<std::size_t>(r)];
}

std::uint32_t Field::log(Elem a) const
{
    if (a == 0) throw ZeroDivision("log of zero");
    return log_[a];
}

Elem Field::exp(std::int64_t e) const
{
    std::int64_t r = e % static_cast<std::int64_t>(order_);
    if (r < 0) r += order_;
    return exp_[static_cast<std::size_t>(r)];
}

Elem Field::from_int(std::int64_t n) const
{
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
}

std::vector<Elem> Field::elements() const
{
    std::vector<Elem> out;
    out.reserve(q_);
    out.push_back(0);
    for (std::uint32_t e = 0; e < order_; ++e) out.push_back(exp_[e]);
    return out;
}

std::vector<unsigned> Field::digits(Elem a) const
{
    std::vector<unsigned> d(h_, 0);
    for (unsigned i = 0; i < h_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

Elem Field::from_digits(const std::vector<unsigned>& digits) const
{
    Elem result = 0;
    Elem scale = 1;
    for (unsigned i = 0; i < h_ && i < digits.size(); ++i) {
        result += scale * (digits[i] % p_);
        scale *= p_;
    }
    return result;
}

Elem Field::parse(std::string_view text) const
{
    if (text.empty()) throw ParseError("empty field element");
    std::uint64_t v = 0;
    for (char c : text) {
        if (c < '0' || c > '9') throw ParseError("bad field element '" + std::string(text) + "'");
        v = v * 10 + static_cast<unsigned>(c - '0');
        if (v >= q_) throw ParseError("field element " + std::string(text) + " out of range for q = " +
                                      std::to_string(q_));
    }
    return static_cast<Elem>(v);
}

Felt::Felt(const Field& field, Elem value) : field_(&field), value_(value)
{
    if (value >= field.q())
        throw DomainError("element code " + std::to_string(value) + " out of range for q = " +
                          std::to_string(field.q()));
}

void Felt::check_same(const Felt& o) const
{
    if (!field_->same_as(*o.field_))
        throw FieldMismatch("operands from GF(" + std::to_string(field_->q()) + ") and GF(" +
                            std::to_string(o.field_->q()) + ")");
}

Felt Felt::operator+(const Felt& o) const
{
    check_same(o);
    return {*field_, field_->add(value_, o.value_)};
}

Felt Felt::operator-(const Felt& o) const
{
    check_same(o);
    return {*field_, field_->sub(value_, o.value_)};
}

Felt Felt::operator*(const Felt& o) const
{
    check_same(o);
    return {*field_, field_->mul(value_, o.value_)};
}

Felt Felt::operator/(const Felt& o) const
{
    check_same(o);
    return {*field_, field_->div(value_, o.value_)};
}

Felt Felt::inv() const { return {*field_, field_->inv(value_)}; }

Felt Felt::pow(std::int64_t e) const { return {*field_, field_->pow(value_, e)}; }

bool Felt::operator==(const Felt& o) const { return field_->same_as(*o.field_) && value_ == o.value_; }

Embedding::Embedding(FieldPtr src, FieldPtr dst, Elem root, std::vector<Elem> image)
    : src_(std::move(src)), dst_(std::move(dst)), root_(root), image_(std::move(image))
{
}

Embedding embed(const FieldPtr& src, const FieldPtr& dst)
{
    if (src->p() != dst->p())
        throw DomainError("cannot embed characteristic " + std::to_string(src->p()) + " into characteristic " +
                          std::to_string(dst->p()));
    if (dst->h() % src->h() != 0)
        throw DomainError("GF(" + std::to_string(src->q()) + ") is not a subfield of GF(" +
                          std::to_string(dst->q()) + ")");

    const Field& d = *dst;
    const auto& mod = src->modulus();
    Elem root = 0;
    bool found = false;
    for (Elem x = 0; x < d.q() && !found; ++x) {
        Elem acc = 0;
        for (auto it = mod.rbegin(); it != mod.rend(); ++it) acc = d.add(d.mul(acc, x), *it);
        if (acc == 0) {
            root = x;
            found = true;
        }
    }
    if (!found) throw DomainError("source modulus has no root in target field");

    std::vector<Elem> image(src->q());
    for (Elem a = 0; a < src->q(); ++a) {
        std::vector<unsigned> dg = src->digits(a);
        Elem acc = 0;
        for (auto it = dg.rbegin(); it != dg.rend(); ++it) acc = d.add(d.mul(acc, root), *it);
        image[a] = acc;
    }
    return Embedding(src, dst, root, std::move(image));
}

}  // namespace curveforge
