#pragma once

/**
 * @file gf.hpp
 * @brief Table-backed arithmetic in GF(p^h).
 *
 * Elements are plain integer codes in [0, q): the base-p digits of the code are
 * the coefficients (lowest degree first) of the polynomial representative modulo
 * the field's modulus. Codes 0..p-1 are therefore the prime subfield, 0 is zero
 * and 1 is one. Multiplication, inversion and addition are O(1) through exp/log
 * and Zech-logarithm tables built once at construction.
 *
 * The modulus is the first monic irreducible polynomial of degree h over GF(p),
 * ordered by the integer code of its lower coefficients. For h = 1 the modulus
 * is x - g with g the smallest primitive root. The generator is the smallest
 * element code of multiplicative order q - 1.
 */

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace curveforge {

using Elem = std::uint32_t;

/// Default field-size cap: 2^14, overridable through CURVEFORGE_CAP.
std::uint32_t default_field_cap();

bool is_prime(std::uint64_t n);

/// Splits q = p^h; returns false if q is not a prime power.
bool split_prime_power(std::uint64_t q, unsigned& p, unsigned& h);

class Field;
using FieldPtr = std::shared_ptr<const Field>;

FieldPtr make_field(unsigned p, unsigned h, std::uint32_t cap = default_field_cap());
FieldPtr make_field_of_order(std::uint64_t q, std::uint32_t cap = default_field_cap());

class Field {
public:
    unsigned p() const { return p_; }
    unsigned h() const { return h_; }
    Elem q() const { return q_; }

    /// Monic modulus, coefficients lowest degree first (length h + 1).
    const std::vector<unsigned>& modulus() const { return modulus_; }
    Elem generator() const { return generator_; }

    bool same_as(const Field& other) const { return p_ == other.p_ && h_ == other.h_; }

    Elem add(Elem a, Elem b) const
    {
        if (a == 0) return b;
        if (b == 0) return a;
        std::uint32_t la = log_[a];
        std::uint32_t diff = log_[b] + order_ - la;
        if (diff >= order_) diff -= order_;
        std::int32_t z = zech_[diff];
        if (z < 0) return 0;
        return exp_[la + static_cast<std::uint32_t>(z)];
    }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }
    Elem mul(Elem a, Elem b) const
    {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const;
    /// Negative exponents are allowed for nonzero bases; 0^0 = 1.
    Elem pow(Elem a, std::int64_t e) const;

    /// Discrete log to the generator; a must be nonzero.
    std::uint32_t log(Elem a) const;
    Elem exp(std::int64_t e) const;

    /// Image of an integer in the prime subfield.
    Elem from_int(std::int64_t n) const;
    Elem frobenius(Elem a) const { return pow(a, p_); }

    /// 0 followed by g^0, g^1, ..., g^(q-2).
    std::vector<Elem> elements() const;

    std::vector<unsigned> digits(Elem a) const;
    Elem from_digits(const std::vector<unsigned>& digits) const;

    std::string to_string(Elem a) const { return std::to_string(a); }
    Elem parse(std::string_view text) const;

    bool contains(Elem a) const { return a < q_; }

private:
    friend FieldPtr make_field(unsigned, unsigned, std::uint32_t);
    Field(unsigned p, unsigned h);

    Elem add_by_digits(Elem a, Elem b) const;
    Elem mul_by_poly(Elem a, Elem b) const;

    unsigned p_;
    unsigned h_;
    Elem q_;
    std::uint32_t order_;  // q - 1
    std::vector<unsigned> modulus_;
    Elem generator_ = 1;
    std::vector<Elem> exp_;            // size 2(q-1), periodic
    std::vector<std::uint32_t> log_;   // log_[0] unused
    std::vector<std::int32_t> zech_;   // log(1 + g^n), -1 when 1 + g^n = 0
    std::vector<Elem> neg_;
};

class Felt {
public:
    Felt(const Field& field, Elem value);

    const Field& field() const { return *field_; }
    Elem value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    Felt operator+(const Felt& o) const;
    Felt operator-(const Felt& o) const;
    Felt operator*(const Felt& o) const;
    Felt operator/(const Felt& o) const;
    Felt operator-() const { return {*field_, field_->neg(value_)}; }
    Felt inv() const;
    Felt pow(std::int64_t e) const;

    bool operator==(const Felt& o) const;

private:
    void check_same(const Felt& o) const;

    const Field* field_;
    Elem value_;
};

/// Field homomorphism GF(p^h) -> GF(p^(hm)) fixed by a root of the source modulus.
class Embedding {
public:
    Embedding(FieldPtr src, FieldPtr dst, Elem root, std::vector<Elem> image);

    const FieldPtr& source() const { return src_; }
    const FieldPtr& target() const { return dst_; }
    /// Image of the polynomial variable x (a root of the source modulus).
    Elem root() const { return root_; }
    Elem generator_image() const { return image_[src_->generator()]; }

    Elem operator()(Elem a) const { return image_[a]; }

private:
    FieldPtr src_;
    FieldPtr dst_;
    Elem root_;
    std::vector<Elem> image_;
};

/// Embeds src into dst using the smallest-code root of src's modulus in dst.
Embedding embed(const FieldPtr& src, const FieldPtr& dst);

}  // namespace curveforge
