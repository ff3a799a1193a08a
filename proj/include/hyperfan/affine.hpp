#pragma once

#include <cstddef>
#include <vector>

#include "hyperfan/arrangement.hpp"
#include "hyperfan/decomposition.hpp"

namespace hyperfan {

/// The affine hyperplane {x | <normal, x> = offset}.
struct AffineHyperplane
{
    RationalVector normal;
    Rational offset;
};

class AffineArrangement
{
  public:
    /// Throws InvalidInput for a zero normal, DimensionMismatch for inconsistent lengths.
    AffineArrangement(std::size_t dim, std::vector<AffineHyperplane> hyperplanes);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return hyperplanes_.size(); }
    const std::vector<AffineHyperplane>& hyperplanes() const { return hyperplanes_; }

  private:
    std::size_t dim_;
    std::vector<AffineHyperplane> hyperplanes_;
};

/**
 * Height-1 slice of a fan living in {x0 >= 0}. Combined point list is
 * vertices followed by far_rays; maximal_cells index into it.
 */
struct PolyhedralComplex
{
    std::size_t dim = 0;
    std::vector<RationalVector> vertices;
    std::vector<RationalVector> far_rays;
    RationalMatrix lineality;
    std::vector<std::vector<std::size_t>> maximal_cells;
};

/// [a, b] -> [-b, a] in dimension d+1, support {x0 >= 0}.
HyperplaneArrangement projectivize(const AffineArrangement& aff);

/**
 * Dehomogenizes every fan ray: r0 > 0 gives the vertex r'/r0, r0 = 0 the far
 * ray r'. Throws InvariantViolation on a ray with r0 < 0.
 */
PolyhedralComplex to_polyhedral_complex(const CellDecomposition& d);

}  // namespace hyperfan
