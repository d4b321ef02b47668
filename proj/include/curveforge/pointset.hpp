#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "curveforge/gf.hpp"
#include "curveforge/projplane.hpp"

namespace curveforge {

/// An immutable subset of PG(2, q) with O(1) membership. points() is always in
/// enumeration order regardless of insertion order.
class PointSet {
public:
    explicit PointSet(FieldPtr field);
    /// Throws DomainError on duplicates when reject_duplicates is set.
    PointSet(FieldPtr field, const std::vector<PPoint>& points, bool reject_duplicates = true);

    static PointSet from_membership(FieldPtr field, std::vector<std::uint8_t> membership);

    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }

    std::size_t size() const { return indices_.size(); }
    bool empty() const { return indices_.empty(); }
    bool contains(const PPoint& p) const { return member_[index_of(*field_, p)] != 0; }
    bool contains_index(std::size_t i) const { return member_[i] != 0; }

    const std::vector<std::size_t>& indices() const { return indices_; }
    std::vector<PPoint> points() const;
    const std::vector<std::uint8_t>& membership() const { return member_; }

    PointSet complement() const;
    /// Number of members on the line l.
    std::size_t count_on(const PLine& l) const;

    bool operator==(const PointSet& o) const;

private:
    void rebuild_indices();

    FieldPtr field_;
    std::vector<std::uint8_t> member_;
    std::vector<std::size_t> indices_;
};

/// Arc file: header "q k", then one "(x:y:z)" per line; duplicates rejected.
void write_arc(std::ostream& out, const PointSet& s);
PointSet read_arc(std::istream& in, std::uint32_t cap = default_field_cap());

}  // namespace curveforge
