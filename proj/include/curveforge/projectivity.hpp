#pragma once

#include <array>
#include <string>
#include <vector>

#include "curveforge/gf.hpp"
#include "curveforge/projplane.hpp"

namespace curveforge {

/// An element of PGL(3, q): an invertible 3x3 matrix up to scalar, stored with
/// its first nonzero entry (row-major) scaled to 1. Points map by v -> A v,
/// lines by the inverse transpose, so incidence is preserved.
///
/// Holds a raw pointer to its field; the field must outlive the projectivity.
class Projectivity {
public:
    using Matrix = std::array<Elem, 9>;

    /// Throws DomainError for a singular matrix.
    Projectivity(const Field& f, const Matrix& rows);

    static Projectivity identity(const Field& f);
    /// The unique projectivity taking the ordered frame `from` onto `to`.
    /// Both frames must have no three points collinear.
    static Projectivity frame_map(const Field& f, const std::array<PPoint, 4>& from,
                                  const std::array<PPoint, 4>& to);

    const Field& field() const { return *field_; }
    const Matrix& entries() const { return m_; }
    Elem at(int r, int c) const { return m_[3 * r + c]; }

    /// Composition: (this * other)(P) = this(other(P)).
    Projectivity operator*(const Projectivity& other) const;
    Projectivity inverse() const;

    Triple apply(const Triple& v) const;
    PPoint apply(const PPoint& p) const;
    PLine apply(const PLine& l) const;

    bool operator==(const Projectivity& other) const { return m_ == other.m_ && field_->same_as(*other.field_); }

    /// Nine field-element texts, row-major, space separated.
    std::string to_string() const;

private:
    const Field* field_;
    Matrix m_;
};

/// Determinant and adjugate helpers shared by the projectivity code.
Elem det3(const Field& f, const Projectivity::Matrix& m);
Projectivity::Matrix adjugate3(const Field& f, const Projectivity::Matrix& m);

}  // namespace curveforge
