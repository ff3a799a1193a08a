#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "hyperfan/cone.hpp"
#include "hyperfan/linear.hpp"

namespace hyperfan {

/**
 * Set of hyperplane indices (0-based) on whose closed negative side a cell
 * lies. Hyperplanes vanishing on the whole support never appear.
 */
struct Signature
{
    std::set<std::size_t> members;

    Signature() = default;
    Signature(std::initializer_list<std::size_t> m) : members(m) {}
    explicit Signature(std::set<std::size_t> m) : members(std::move(m)) {}

    bool contains(std::size_t i) const { return members.count(i) != 0; }
    std::size_t size() const { return members.size(); }

    auto operator<=>(const Signature&) const = default;
};

/// One original hyperplane represented by a reduced one: h_original = lambda * h_reduced, sign = sgn(lambda).
struct OriginalRef
{
    std::size_t index;
    int sign;

    bool operator==(const OriginalRef&) const = default;
};

struct HyperplaneClassification
{
    std::set<std::size_t> active;              ///< original indices cutting the support
    std::set<std::size_t> support_degenerate;  ///< original indices vanishing on the support
    /// reduced index -> originals proportional to it (first entry is the kept representative, sign +1)
    std::vector<std::vector<OriginalRef>> reduced_to_original;
};

/**
 * Hyperplanes (rows h_i, hyperplane {x | <h_i,x> = 0}) together with a
 * support cone. Duplicates and scalar multiples are allowed.
 *
 * The support is completed on construction (both descriptions); those two
 * conversions are not charged to any caller's ConversionCounter.
 */
class HyperplaneArrangement
{
  public:
    /// Support defaults to the full space. Throws InvalidInput on a zero row, DimensionMismatch on size mismatch.
    explicit HyperplaneArrangement(RationalMatrix hyperplanes, std::optional<Cone> support = std::nullopt);
    HyperplaneArrangement(std::size_t ambient_dim, RationalMatrix hyperplanes, std::optional<Cone> support);

    std::size_t ambient_dim() const { return dim_; }
    std::size_t size() const { return hyperplanes_.rows(); }
    const RationalMatrix& hyperplanes() const { return hyperplanes_; }
    const RationalVector& hyperplane(std::size_t i) const { return hyperplanes_.row(i); }
    const Cone& support() const { return support_; }
    /// Dimension of the support's linear span; maximal cells have this dimension.
    std::size_t support_dim() const { return support_dim_; }

  private:
    void validate();

    std::size_t dim_;
    RationalMatrix hyperplanes_;
    Cone support_;
    std::size_t support_dim_;
};

/// Drops every hyperplane proportional to an earlier one; keeps the original order.
std::pair<HyperplaneArrangement, HyperplaneClassification> reduce(const HyperplaneArrangement& a);

/// Active vs. support-degenerate split, plus the reduction map.
HyperplaneClassification classify_hyperplanes(const HyperplaneArrangement& a);

/**
 * {active i | <h_i,x> < 0}. Throws OutsideSupport when x is not in the
 * support and NonGenericPoint when an active hyperplane contains x.
 */
Signature signature_of_point(const HyperplaneArrangement& a, const RationalVector& x);

/**
 * A point in the relative interior of the support lying on no active
 * hyperplane. Deterministic in `seed`; different seeds usually land in
 * different cells.
 */
RationalVector generic_point(const HyperplaneArrangement& a, std::size_t seed);

/**
 * The cone  {<h_i,x> <= 0 : i in s} ∩ {<h_i,x> >= 0 : active i not in s} ∩ support,
 * completed with one counted conversion. May be lower dimensional.
 */
Cone cell_from_signature(const HyperplaneArrangement& a, const Signature& s, ConversionCounter& counter);

namespace detail {

/**
 * The reduced arrangement restricted to active hyperplanes, which is what
 * the enumeration algorithms work on, plus the way back to original indices.
 */
struct ActiveReduction
{
    HyperplaneArrangement working;
    std::vector<std::vector<OriginalRef>> to_original;  ///< working index -> originals
};

ActiveReduction active_reduction(const HyperplaneArrangement& a);

/// Translates a signature over working indices into one over original indices.
Signature to_original(const ActiveReduction& r, const Signature& working_signature);

}  // namespace detail

}  // namespace hyperfan
