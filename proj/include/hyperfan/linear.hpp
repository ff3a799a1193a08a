#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace hyperfan {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/**
 * Dense rectangular matrix of exact rationals, stored row-major.
 *
 * The column count is tracked separately so that a matrix with zero rows
 * still knows its ambient dimension.
 */
class RationalMatrix
{
  public:
    RationalMatrix() = default;
    explicit RationalMatrix(std::size_t cols) : cols_(cols) {}
    RationalMatrix(std::size_t cols, std::vector<RationalVector> rows);

    /// Convenience for literals: every inner list must have the same length.
    static RationalMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
    static RationalMatrix identity(std::size_t n);
    static RationalMatrix zero(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_.empty(); }

    const RationalVector& operator[](std::size_t i) const { return rows_[i]; }
    const RationalVector& row(std::size_t i) const { return rows_.at(i); }
    const std::vector<RationalVector>& row_list() const { return rows_; }

    auto begin() const { return rows_.begin(); }
    auto end() const { return rows_.end(); }

    /// Throws DimensionMismatch when the row length differs from cols().
    void append(RationalVector row);
    /// Appends all rows of `other`; column counts must agree.
    void append_rows(const RationalMatrix& other);

    RationalVector times(const RationalVector& x) const;

    bool operator==(const RationalMatrix& other) const = default;

  private:
    std::size_t cols_ = 0;
    std::vector<RationalVector> rows_;
};

/// How canonical_primitive treats the sign of its argument.
enum class Orientation
{
    ray,   ///< keep orientation: result is a positive multiple of the input
    line,  ///< identify v with -v: first nonzero entry made positive
};

RationalVector make_vector(std::initializer_list<long> entries);

bool is_zero(const RationalVector& v);
Rational dot(const RationalVector& a, const RationalVector& b);
RationalVector add(const RationalVector& a, const RationalVector& b);
RationalVector subtract(const RationalVector& a, const RationalVector& b);
RationalVector scale(const RationalVector& v, const Rational& factor);

/// Exact rank over the rationals. Pivot: first nonzero entry of each column.
std::size_t rank(const RationalMatrix& m);

/// Basis of {x | m x = 0}, one basis vector per free column, each primitive.
RationalMatrix nullspace(const RationalMatrix& m);

/**
 * Canonical basis of the row space: reduced row echelon form with each row
 * scaled to a primitive integer vector. Two matrices have the same row space
 * iff their row_basis results are equal.
 */
RationalMatrix row_basis(const RationalMatrix& m);

/**
 * Unique primitive integer representative of the ray (or line) through v.
 * Throws InvalidInput for the zero vector.
 */
RationalVector canonical_primitive(const RationalVector& v, Orientation mode);

/**
 * Orthogonal projection onto the span of a fixed set of vectors.
 *
 * Keeps an exact orthogonal basis (Gram-Schmidt over the rationals), so
 * projection of many vectors onto the same subspace is cheap.
 */
class OrthogonalProjector
{
  public:
    OrthogonalProjector(std::size_t dim, const RationalMatrix& spanning);

    std::size_t dim() const { return dim_; }
    std::size_t subspace_dim() const { return basis_.size(); }

    /// Component of v inside the subspace.
    RationalVector project(const RationalVector& v) const;
    /// Component of v orthogonal to the subspace.
    RationalVector reject(const RationalVector& v) const;

  private:
    std::size_t dim_;
    std::vector<RationalVector> basis_;
    std::vector<Rational> norms_;
};

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);
std::string to_string(const RationalVector& v);
/// Accepts "p", "p/q" and "-p/q"; throws InvalidInput otherwise or on q = 0.
Rational parse_rational(std::string_view text);

}  // namespace hyperfan
