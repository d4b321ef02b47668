#include "curveforge/bundled_data.hpp"

#include "curveforge/error.hpp"

namespace curveforge::data {

namespace {

void require_f7(const FieldPtr& f)
{
    if (f->q() != 7) throw DomainError("this data set lives in PG(2, 7)");
}

struct Raw {
    Elem x, y, z;
};

PointSet from_raw(const FieldPtr& f, const std::vector<Raw>& raw)
{
    require_f7(f);
    std::vector<PPoint> pts;
    for (const auto& r : raw) pts.push_back(make_point(*f, r.x, r.y, r.z));
    return PointSet(f, pts, true);
}

HPoly product(const FieldPtr& f, const std::vector<Raw>& linear_factors)
{
    HPoly out = HPoly::monomial(f, 0, 0, 0, 1);
    for (const auto& l : linear_factors) out = out * HPoly::linear(f, l.x, l.y, l.z);
    return out;
}

}  // namespace

PointSet arc36_k0_3(const FieldPtr& f7)
{
    return from_raw(f7, {{1, 1, 3}, {1, 1, 5}, {1, 2, 3}, {1, 2, 5}, {1, 2, 6}, {1, 3, 3}, {1, 3, 4}, {1, 3, 5},
                         {1, 3, 6}, {1, 3, 0}, {1, 4, 2}, {1, 4, 4}, {1, 4, 5}, {1, 4, 6}, {1, 4, 0}, {1, 5, 2},
                         {1, 5, 3}, {1, 5, 4}, {1, 5, 6}, {1, 5, 0}, {1, 6, 1}, {1, 6, 3}, {1, 6, 4}, {1, 6, 5},
                         {1, 6, 0}, {1, 0, 1}, {1, 0, 2}, {1, 0, 4}, {1, 0, 6}, {1, 0, 0}, {0, 1, 3}, {0, 1, 4},
                         {0, 1, 5}, {0, 1, 6}, {0, 1, 0}, {0, 0, 1}});
}

PointSet arc36_k0_2(const FieldPtr& f7)
{
    return from_raw(f7, {{1, 1, 4}, {1, 1, 5}, {1, 1, 6}, {1, 1, 0}, {1, 2, 2}, {1, 2, 4}, {1, 2, 6}, {1, 2, 0},
                         {1, 3, 2}, {1, 3, 3}, {1, 3, 4}, {1, 3, 5}, {1, 4, 2}, {1, 4, 3}, {1, 4, 5}, {1, 4, 6},
                         {1, 5, 3}, {1, 5, 5}, {1, 5, 6}, {1, 5, 0}, {1, 6, 1}, {1, 6, 2}, {1, 6, 4}, {1, 6, 6},
                         {1, 6, 0}, {1, 0, 2}, {1, 0, 3}, {1, 0, 4}, {1, 0, 5}, {1, 0, 0}, {0, 1, 3}, {0, 1, 4},
                         {0, 1, 5}, {0, 1, 6}, {0, 1, 0}, {0, 0, 1}});
}

HPoly sextic_g(const FieldPtr& f7)
{
    require_f7(f7);
    // Z - cY has coefficients (0, -c, 1).
    return product(f7, {{0, 1, 0}, {0, 0, 1}, {0, 4, 1}, {0, 3, 1}, {0, 2, 1}, {0, 1, 1}});
}

HPoly quartic_h(const FieldPtr& f7)
{
    require_f7(f7);
    return product(f7, {{1, 0, 0}, {1, 1, 6}, {2, 1, 6}, {1, 2, 5}});
}

std::vector<PPoint> quadric_constraints(const FieldPtr& f7)
{
    require_f7(f7);
    return {make_point(*f7, 1, 0, 0), make_point(*f7, 1, 5, 4), make_point(*f7, 1, 4, 0),
            make_point(*f7, 1, 0, 6), make_point(*f7, 1, 2, 5), make_point(*f7, 1, 6, 4)};
}

PPoint special_point_k0_2(const FieldPtr& f7)
{
    require_f7(f7);
    return make_point(*f7, 1, 5, 2);
}

std::vector<PLine> special_five_lines(const FieldPtr& f7)
{
    require_f7(f7);
    return {make_line(*f7, 1, 3, 6), make_line(*f7, 1, 4, 0)};
}

std::vector<PLine> special_six_lines(const FieldPtr& f7)
{
    require_f7(f7);
    return {make_line(*f7, 0, 1, 1), make_line(*f7, 4, 3, 1), make_line(*f7, 1, 0, 3)};
}

}  // namespace curveforge::data
