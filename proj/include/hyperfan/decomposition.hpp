#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hyperfan/arrangement.hpp"
#include "hyperfan/cone.hpp"

namespace hyperfan {

enum class Algorithm
{
    bfs,
    brute_force,
    normal_fan,  ///< fan read off a polyhedron, see zonotope.hpp
};

std::string to_string(Algorithm a);

struct EnumerationStats
{
    std::size_t hull_conversions = 0;
    std::size_t cells_found = 0;
    Algorithm algorithm = Algorithm::bfs;
    double wall_ms = 0;
};

/**
 * The induced fan: rays (primitive, taken modulo the lineality space), the
 * common lineality space, the maximal cells as sorted ray-index lists and
 * one signature per maximal cell (original hyperplane indices).
 *
 * Rays are sorted lexicographically and cells by their index lists, so the
 * layout does not depend on enumeration order.
 */
struct CellDecomposition
{
    std::size_t ambient_dim = 0;
    std::vector<RationalVector> rays;
    RationalMatrix lineality;
    std::vector<std::vector<std::size_t>> maximal_cells;
    std::vector<Signature> cell_signatures;  ///< aligned with maximal_cells; empty for normal fans
    EnumerationStats stats;
};

struct DecomposeOptions
{
    std::size_t seed = 0;
    std::size_t threads = 1;
    std::size_t max_brute_n = 25;
};

/**
 * Tries every subset of the active reduced hyperplanes: 2^n conversions.
 * Throws CapExceeded when n > options.max_brute_n.
 */
CellDecomposition decompose_brute_force(const HyperplaneArrangement& a, const DecomposeOptions& options = {});

/**
 * Breadth-first traversal of the dual graph of the fan, one conversion per
 * maximal cell. Starts at the cell of generic_point(a, options.seed) and
 * crosses every facet not lying on the support boundary. With threads > 1
 * the frontier is expanded concurrently; the output is identical.
 */
CellDecomposition decompose_bfs(const HyperplaneArrangement& a, const DecomposeOptions& options = {});

/**
 * Signature of the cell across facet f: s with every active hyperplane
 * parallel to f (compared after projection onto the support's span) toggled.
 * Throws InvalidInput when f is parallel to no active hyperplane.
 */
Signature neighbor_signature(const Signature& s, const RationalVector& f, const HyperplaneArrangement& a);

std::optional<std::size_t> signature_to_cell(const CellDecomposition& d, const Signature& s);

/// Throws std::out_of_range for a bad index.
const Signature& cell_to_signature(const CellDecomposition& d, std::size_t cell_index);

/// Same rays, same lineality and same family of maximal cells (as ray sets); ordering and signatures ignored.
bool fans_equal(const CellDecomposition& d1, const CellDecomposition& d2);

/// The i-th maximal cell as a complete cone (uncounted conversion).
Cone cell_cone(const CellDecomposition& d, std::size_t cell_index);

namespace detail {

/**
 * Canonical fan layout from a list of complete full-dimensional cells:
 * global ray list, sorted cells, signatures permuted alongside.
 */
CellDecomposition assemble_fan(std::size_t ambient_dim, const std::vector<Cone>& cells,
                               std::vector<Signature> signatures);

}  // namespace detail

}  // namespace hyperfan
