#include "curveforge/projectivity.hpp"

#include "curveforge/error.hpp"

namespace curveforge {

namespace {

Projectivity::Matrix mat_mul(const Field& f, const Projectivity::Matrix& a, const Projectivity::Matrix& b)
{
    Projectivity::Matrix r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Elem acc = 0;
            for (int k = 0; k < 3; ++k) acc = f.add(acc, f.mul(a[3 * i + k], b[3 * k + j]));
            r[3 * i + j] = acc;
        }
    return r;
}

Projectivity::Matrix columns_of(const std::array<PPoint, 4>& frame)
{
    Projectivity::Matrix m{};
    for (int c = 0; c < 3; ++c) {
        auto v = coords(frame[c]);
        for (int r = 0; r < 3; ++r) m[3 * r + c] = v[r];
    }
    return m;
}

// Matrix sending e1, e2, e3, (1,1,1) to the four frame points.
Projectivity::Matrix standard_frame_matrix(const Field& f, const std::array<PPoint, 4>& frame)
{
    auto m = columns_of(frame);
    Elem d = det3(f, m);
    if (d == 0) throw DomainError("frame has three collinear points");
    auto adj = adjugate3(f, m);
    auto p4 = coords(frame[3]);
    std::array<Elem, 3> lambda{};
    for (int r = 0; r < 3; ++r) {
        Elem acc = 0;
        for (int k = 0; k < 3; ++k) acc = f.add(acc, f.mul(adj[3 * r + k], p4[k]));
        lambda[r] = f.div(acc, d);
        if (lambda[r] == 0) throw DomainError("frame has three collinear points");
    }
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m[3 * r + c] = f.mul(m[3 * r + c], lambda[c]);
    return m;
}

}  // namespace

Elem det3(const Field& f, const Projectivity::Matrix& m)
{
    Elem t1 = f.mul(m[0], f.sub(f.mul(m[4], m[8]), f.mul(m[5], m[7])));
    Elem t2 = f.mul(m[1], f.sub(f.mul(m[3], m[8]), f.mul(m[5], m[6])));
    Elem t3 = f.mul(m[2], f.sub(f.mul(m[3], m[7]), f.mul(m[4], m[6])));
    return f.add(f.sub(t1, t2), t3);
}

Projectivity::Matrix adjugate3(const Field& f, const Projectivity::Matrix& m)
{
    auto minor = [&](int r0, int r1, int c0, int c1) {
        return f.sub(f.mul(m[3 * r0 + c0], m[3 * r1 + c1]), f.mul(m[3 * r0 + c1], m[3 * r1 + c0]));
    };
    Projectivity::Matrix adj{};
    // adj[i][j] = cofactor[j][i]
    adj[0] = minor(1, 2, 1, 2);
    adj[1] = f.neg(minor(0, 2, 1, 2));
    adj[2] = minor(0, 1, 1, 2);
    adj[3] = f.neg(minor(1, 2, 0, 2));
    adj[4] = minor(0, 2, 0, 2);
    adj[5] = f.neg(minor(0, 1, 0, 2));
    adj[6] = minor(1, 2, 0, 1);
    adj[7] = f.neg(minor(0, 2, 0, 1));
    adj[8] = minor(0, 1, 0, 1);
    return adj;
}

Projectivity::Projectivity(const Field& f, const Matrix& rows) : field_(&f), m_(rows)
{
    for (Elem e : m_)
        if (e >= f.q()) throw DomainError("matrix entry out of range");
    if (det3(f, m_) == 0) throw DomainError("singular matrix is not a projectivity");
    for (Elem e : m_) {
        if (e != 0) {
            Elem s = f.inv(e);
            for (auto& x : m_) x = f.mul(x, s);
            break;
        }
    }
}

Projectivity Projectivity::identity(const Field& f) { return {f, {1, 0, 0, 0, 1, 0, 0, 0, 1}}; }

Projectivity Projectivity::frame_map(const Field& f, const std::array<PPoint, 4>& from,
                                     const std::array<PPoint, 4>& to)
{
    auto a = standard_frame_matrix(f, from);
    auto b = standard_frame_matrix(f, to);
    return Projectivity(f, mat_mul(f, b, adjugate3(f, a)));
}

Projectivity Projectivity::operator*(const Projectivity& other) const
{
    if (!field_->same_as(*other.field_)) throw FieldMismatch("composing projectivities over different fields");
    return Projectivity(*field_, mat_mul(*field_, m_, other.m_));
}

Projectivity Projectivity::inverse() const { return Projectivity(*field_, adjugate3(*field_, m_)); }

Triple Projectivity::apply(const Triple& v) const
{
    const Field& f = *field_;
    Triple r{};
    for (int i = 0; i < 3; ++i)
        r[i] = f.add(f.add(f.mul(m_[3 * i], v[0]), f.mul(m_[3 * i + 1], v[1])), f.mul(m_[3 * i + 2], v[2]));
    return r;
}

PPoint Projectivity::apply(const PPoint& p) const
{
    auto t = normalize(*field_, apply(coords(p)));
    return {t[0], t[1], t[2]};
}

PLine Projectivity::apply(const PLine& l) const
{
    // l' = A^{-T} l; the adjugate is A^{-1} up to scalar.
    const Field& f = *field_;
    auto adj = adjugate3(f, m_);
    auto v = coords(l);
    Triple r{};
    for (int i = 0; i < 3; ++i)
        r[i] = f.add(f.add(f.mul(adj[i], v[0]), f.mul(adj[3 + i], v[1])), f.mul(adj[6 + i], v[2]));
    auto t = normalize(f, r);
    return {t[0], t[1], t[2]};
}

std::string Projectivity::to_string() const
{
    std::string out;
    for (int i = 0; i < 9; ++i) {
        if (i) out += ' ';
        out += std::to_string(m_[i]);
    }
    return out;
}

}  // namespace curveforge
