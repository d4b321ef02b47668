#pragma once

// Projective [n, 3, d]_q codes whose columns are the points of an arc.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "curveforge/arcs.hpp"
#include "curveforge/pointset.hpp"

namespace curveforge {

struct WeightEnumerator {
    /// c[i] = number of codewords of weight i, i = 0..n.
    std::vector<std::uint64_t> c;

    std::size_t length() const { return c.empty() ? 0 : c.size() - 1; }
    /// Smallest positive weight present; 0 if there is none.
    unsigned min_distance() const;
    std::uint64_t total() const;
    bool operator==(const WeightEnumerator&) const = default;
};

class LinearCode3 {
public:
    using Rows = std::array<std::vector<Elem>, 3>;

    /// Validates: equal row lengths, no zero column, columns projectively
    /// distinct, rank 3. Throws DomainError otherwise.
    LinearCode3(FieldPtr field, Rows rows);

    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    std::size_t length() const { return rows_[0].size(); }
    const Rows& rows() const { return rows_; }
    Triple column(std::size_t i) const { return {rows_[0][i], rows_[1][i], rows_[2][i]}; }
    /// The columns as normalized points, in column order.
    std::vector<PPoint> column_points() const;

private:
    FieldPtr field_;
    Rows rows_;
};

/// Columns are the points of S in enumeration order. Rejects |S| < 3 and sets
/// contained in a line.
LinearCode3 code_from_arc(const PointSet& s);

/// Largest q accepted by the codeword enumeration.
inline constexpr std::uint32_t max_enumeration_q = 64;

/// Exact enumerator by running over all q^3 messages. Throws CapExceeded for q > 64.
WeightEnumerator weight_enumerator(const LinearCode3& code);

/// Enumerator implied by the spectrum of the column set: c_0 = 1 and
/// c_{k-i} = (q-1) a_i for every i < k.
WeightEnumerator enumerator_from_spectrum(const ArcSpectrum& sp);

/// (q-1) a_i = c_{n-i} for every i, with both sides computed independently.
/// Throws DomainError when the spectrum and the code disagree in q or length.
bool spectrum_weight_check(const LinearCode3& code, const ArcSpectrum& sp);

/// Generator-matrix file:
///   n 3 d q
///   three rows of n field-element texts
///   optional "W: c_d ... c_n"
/// Blank lines and text after "#" are ignored.
/// Rows may also be written without separators when q <= 10 (one digit per
/// entry), which is how published arc census files print them.
struct GeneratorFile {
    LinearCode3 code;
    unsigned declared_distance;
    std::optional<std::vector<std::uint64_t>> weights;  // c_d..c_n
};

void write_generator(std::ostream& out, const GeneratorFile& g);
GeneratorFile read_generator(std::istream& in, std::uint32_t cap = default_field_cap());

/// File record for a code with its exact minimum distance and enumerator.
GeneratorFile make_generator_file(const LinearCode3& code, bool with_weights);

}  // namespace curveforge
