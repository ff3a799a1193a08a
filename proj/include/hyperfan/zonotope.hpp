#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hyperfan/arrangement.hpp"
#include "hyperfan/decomposition.hpp"

namespace hyperfan {

/// Affine halfspace <normal, x> >= offset (or hyperplane, when used as an equation).
struct AffineInequality
{
    RationalVector normal;
    Rational offset;

    bool operator==(const AffineInequality&) const = default;
};

/**
 * conv(vertices) + cone(rays) + span(lineality). Vertices and rays are taken
 * modulo the lineality space (orthogonal projection), so they are unique.
 */
struct Polyhedron
{
    std::size_t ambient_dim = 0;
    std::vector<RationalVector> vertices;
    std::vector<RationalVector> rays;
    RationalMatrix lineality;
    std::optional<std::vector<AffineInequality>> facets;
    std::vector<AffineInequality> equations;  ///< affine hull
};

/**
 * Sum of the segments [-h_i, h_i] over all hyperplanes plus the dual of the
 * support. Enumerates all 2^n sign vectors, so n is capped (CapExceeded).
 */
Polyhedron build_zonotope(const HyperplaneArrangement& a, std::size_t max_hyperplanes = 12);

/**
 * Normal fan under the minimisation convention: the cone of vertex v is
 * {w | <w,x> >= <w,v> for all x in p}, generated by the inner normals of the
 * facets through v plus the normals of the affine hull. With this convention
 * the vertex sum_{i in s} h_i - sum_{i not in s} h_i belongs to the cell with
 * signature s. A polyhedron without vertices gives the single cone dual to
 * its recession cone.
 */
CellDecomposition normal_fan(const Polyhedron& p);

}  // namespace hyperfan
