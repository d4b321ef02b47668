#include "curveforge/pointset.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "curveforge/error.hpp"

namespace curveforge {

PointSet::PointSet(FieldPtr field) : field_(std::move(field)), member_(num_points(*field_), 0) {}

PointSet::PointSet(FieldPtr field, const std::vector<PPoint>& points, bool reject_duplicates)
    : PointSet(std::move(field))
{
    for (const auto& p : points) {
        for (Elem c : coords(p))
            if (c >= field_->q()) throw DomainError("point coordinate out of range");
        auto t = normalize(*field_, coords(p));
        auto& slot = member_[index_of(*field_, t)];
        if (slot && reject_duplicates) throw DomainError("duplicate point " + to_string(p));
        slot = 1;
    }
    rebuild_indices();
}

PointSet PointSet::from_membership(FieldPtr field, std::vector<std::uint8_t> membership)
{
    PointSet s(std::move(field));
    if (membership.size() != s.member_.size()) throw DomainError("membership vector has the wrong length");
    s.member_ = std::move(membership);
    for (auto& m : s.member_) m = m ? 1 : 0;
    s.rebuild_indices();
    return s;
}

void PointSet::rebuild_indices()
{
    indices_.clear();
    for (std::size_t i = 0; i < member_.size(); ++i)
        if (member_[i]) indices_.push_back(i);
}

std::vector<PPoint> PointSet::points() const
{
    std::vector<PPoint> out;
    out.reserve(indices_.size());
    for (auto i : indices_) out.push_back(point_at(*field_, i));
    return out;
}

PointSet PointSet::complement() const
{
    std::vector<std::uint8_t> m(member_.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = member_[i] ? 0 : 1;
    return from_membership(field_, std::move(m));
}

std::size_t PointSet::count_on(const PLine& l) const
{
    std::size_t n = 0;
    for (const auto& p : points_on(*field_, l)) n += member_[index_of(*field_, p)];
    return n;
}

bool PointSet::operator==(const PointSet& o) const
{
    return field_->same_as(*o.field_) && member_ == o.member_;
}

void write_arc(std::ostream& out, const PointSet& s)
{
    out << s.field().q() << ' ' << s.size() << '\n';
    for (const auto& p : s.points()) out << to_string(p) << '\n';
}

PointSet read_arc(std::istream& in, std::uint32_t cap)
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
    if (!next_line(line)) throw ParseError("arc file: missing header 'q k'");
    std::istringstream header(line);
    std::uint64_t q = 0;
    long long k = -1;
    std::string extra;
    if (!(header >> q >> k) || (header >> extra) || k < 0) throw ParseError("arc file: bad header '" + line + "'");
    FieldPtr field;
    try {
        field = make_field_of_order(q, cap);
    } catch (const DomainError& e) {
        throw ParseError("arc file: " + std::string(e.what()));
    }
    std::vector<PPoint> pts;
    while (next_line(line)) pts.push_back(parse_point(*field, line));
    if (pts.size() != static_cast<std::size_t>(k))
        throw ParseError("arc file: header announces " + std::to_string(k) + " points, found " +
                         std::to_string(pts.size()));
    try {
        return PointSet(field, pts, true);
    } catch (const DomainError& e) {
        throw ParseError(std::string("arc file: ") + e.what());
    }
}

}  // namespace curveforge
