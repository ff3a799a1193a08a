#include "hyperfan/affine.hpp"

#include <algorithm>

#include "hyperfan/errors.hpp"

namespace hyperfan {

AffineArrangement::AffineArrangement(std::size_t dim, std::vector<AffineHyperplane> hyperplanes)
    : dim_(dim), hyperplanes_(std::move(hyperplanes))
{
    for (std::size_t i = 0; i < hyperplanes_.size(); ++i) {
        if (hyperplanes_[i].normal.size() != dim_)
            throw DimensionMismatch("affine hyperplane " + std::to_string(i) + " has " +
                                    std::to_string(hyperplanes_[i].normal.size()) + " coordinates, expected " +
                                    std::to_string(dim_));
        if (is_zero(hyperplanes_[i].normal))
            throw InvalidInput("affine hyperplane " + std::to_string(i) + " has a zero normal");
    }
}

HyperplaneArrangement projectivize(const AffineArrangement& aff)
{
    const std::size_t d = aff.dim() + 1;
    RationalMatrix rows(d);
    for (const auto& h : aff.hyperplanes()) {
        RationalVector row;
        row.reserve(d);
        row.push_back(-h.offset);
        row.insert(row.end(), h.normal.begin(), h.normal.end());
        rows.append(std::move(row));
    }
    RationalVector x0(d, 0);
    x0[0] = 1;
    RationalMatrix support_ineq(d);
    support_ineq.append(std::move(x0));
    return HyperplaneArrangement(d, std::move(rows), Cone::from_inequalities(d, std::move(support_ineq)));
}

PolyhedralComplex to_polyhedral_complex(const CellDecomposition& d)
{
    if (d.ambient_dim == 0)
        throw InvalidInput("cannot dehomogenize a fan in dimension 0");
    PolyhedralComplex out;
    out.dim = d.ambient_dim - 1;

    out.lineality = RationalMatrix(out.dim);
    for (const auto& l : d.lineality) {
        if (sgn(l[0]) != 0)
            throw InvariantViolation("fan lineality leaves the hyperplane x0 = 0; support is not inside {x0 >= 0}");
        out.lineality.append(RationalVector(l.begin() + 1, l.end()));
    }

    // Position of each fan ray in the combined vertices ++ far_rays list.
    std::vector<std::size_t> vertex_slot(d.rays.size()), far_slot(d.rays.size());
    std::vector<bool> is_vertex(d.rays.size());
    for (std::size_t i = 0; i < d.rays.size(); ++i) {
        const auto& r = d.rays[i];
        RationalVector rest(r.begin() + 1, r.end());
        if (sgn(r[0]) < 0)
            throw InvariantViolation("fan ray " + to_string(r) + " has negative height; support is not inside {x0 >= 0}");
        if (sgn(r[0]) > 0) {
            is_vertex[i] = true;
            vertex_slot[i] = out.vertices.size();
            out.vertices.push_back(scale(rest, 1 / r[0]));
        } else {
            far_slot[i] = out.far_rays.size();
            out.far_rays.push_back(canonical_primitive(rest, Orientation::ray));
        }
    }

    for (const auto& cell : d.maximal_cells) {
        std::vector<std::size_t> members;
        bool meets_height_one = false;
        for (std::size_t i : cell) {
            if (is_vertex[i]) {
                members.push_back(vertex_slot[i]);
                meets_height_one = true;
            } else {
                members.push_back(out.vertices.size() + far_slot[i]);
            }
        }
        // A cone inside {x0 = 0} has no points at height 1.
        if (!meets_height_one)
            continue;
        std::sort(members.begin(), members.end());
        out.maximal_cells.push_back(std::move(members));
    }
    return out;
}

}  // namespace hyperfan
