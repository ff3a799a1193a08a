#pragma once

#include <atomic>
#include <cstddef>
#include <optional>
#include <vector>

#include "hyperfan/linear.hpp"

namespace hyperfan {

/**
 * Counts double-description runs. Every call to complete_v or complete_h
 * increments it exactly once; nothing else touches it. Safe to share between
 * threads.
 */
class ConversionCounter
{
  public:
    ConversionCounter() = default;
    ConversionCounter(const ConversionCounter&) = delete;
    ConversionCounter& operator=(const ConversionCounter&) = delete;

    void increment() { count_.fetch_add(1, std::memory_order_relaxed); }
    std::size_t value() const { return count_.load(std::memory_order_relaxed); }

  private:
    std::atomic<std::size_t> count_{0};
};

/**
 * Polyhedral cone with an inequality description ({x | <a,x> >= 0 for rows a,
 * <e,x> = 0 for equation rows e}) and/or a generator description (conic hull
 * of rays plus linear span of the lineality rows).
 *
 * A cone returned by complete_v/complete_h is *complete*: both descriptions
 * are present and canonical.
 *   - inequalities are the facets, each projected onto the cone's span and
 *     scaled to a primitive integer vector, sorted;
 *   - equations and lineality are row_basis() canonical bases;
 *   - rays are the extreme rays, projected orthogonally to the lineality
 *     space and scaled to primitive integer vectors, sorted.
 * Two complete cones are the same point set iff they compare equal.
 */
class Cone
{
  public:
    static Cone from_inequalities(std::size_t ambient_dim, RationalMatrix inequalities,
                                  std::optional<RationalMatrix> equations = std::nullopt);
    static Cone from_generators(std::size_t ambient_dim, RationalMatrix rays,
                                std::optional<RationalMatrix> lineality = std::nullopt);
    static Cone full_space(std::size_t ambient_dim);
    static Cone nonnegative_orthant(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return dim_; }
    bool has_inequalities() const { return inequalities_.has_value(); }
    bool has_generators() const { return rays_.has_value(); }
    bool is_complete() const { return complete_; }

    /// Each accessor throws InvalidInput when that description is absent.
    const RationalMatrix& inequalities() const;
    const RationalMatrix& equations() const;
    const RationalMatrix& rays() const;
    const RationalMatrix& lineality() const;

    bool operator==(const Cone& other) const;

  private:
    friend Cone complete_v(const Cone&, ConversionCounter&);
    friend Cone complete_h(const Cone&, ConversionCounter&);
    friend Cone dual(const Cone&);

    explicit Cone(std::size_t dim) : dim_(dim) {}

    std::size_t dim_ = 0;
    std::optional<RationalMatrix> inequalities_;
    std::optional<RationalMatrix> equations_;
    std::optional<RationalMatrix> rays_;
    std::optional<RationalMatrix> lineality_;
    bool complete_ = false;
};

/// Inequalities -> generators (one counted double-description run). Result is complete.
Cone complete_v(const Cone& c, ConversionCounter& counter);

/// Generators -> facets (one counted double-description run on the dual). Result is complete.
Cone complete_h(const Cone& c, ConversionCounter& counter);

/**
 * Inner facet normals of a complete cone, projected onto the cone's span,
 * primitive. Throws InvalidInput when the cone is not complete or is {0}.
 */
std::vector<RationalVector> facets(const Cone& c);

/// Dimension of the linear span. Needs the generator description.
std::size_t dim(const Cone& c);

/// {y | <y,x> >= 0 for all x in c}. Needs a complete cone; exact involution.
Cone dual(const Cone& c);

/// True iff x satisfies every inequality and equation. Needs the inequality description.
bool contains(const Cone& c, const RationalVector& x);

/// Point strictly inside the relative interior of a cone with generators (sum of rays).
RationalVector relative_interior_point(const Cone& c);

namespace detail {

/// Raw output of the integer double-description method.
struct DoubleDescription
{
    std::vector<RationalVector> rays;       ///< extreme rays, not yet projected
    std::vector<RationalVector> lineality;  ///< basis of the lineality space
};

/**
 * Incremental double description: starts from the nullspace of `equations`
 * and inserts `inequalities` in the given order. Not counted; callers
 * account for the conversion.
 */
DoubleDescription double_description(std::size_t dim, const RationalMatrix& inequalities,
                                      const RationalMatrix& equations);

}  // namespace detail

}  // namespace hyperfan
