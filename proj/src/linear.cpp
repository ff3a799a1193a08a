#include "hyperfan/linear.hpp"

#include <algorithm>
#include <sstream>

#include "hyperfan/errors.hpp"

namespace hyperfan {

RationalMatrix::RationalMatrix(std::size_t cols, std::vector<RationalVector> rows) : cols_(cols)
{
    rows_.reserve(rows.size());
    for (auto& r : rows)
        append(std::move(r));
}

RationalMatrix RationalMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows)
{
    std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
    RationalMatrix m(cols);
    for (const auto& r : rows)
        m.append(make_vector(r));
    return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        RationalVector row(n, 0);
        row[i] = 1;
        m.append(std::move(row));
    }
    return m;
}

RationalMatrix RationalMatrix::zero(std::size_t rows, std::size_t cols)
{
    RationalMatrix m(cols);
    for (std::size_t i = 0; i < rows; ++i)
        m.append(RationalVector(cols, 0));
    return m;
}

void RationalMatrix::append(RationalVector row)
{
    if (row.size() != cols_)
        throw DimensionMismatch("row of length " + std::to_string(row.size()) +
                                " appended to matrix with " + std::to_string(cols_) + " columns");
    rows_.push_back(std::move(row));
}

void RationalMatrix::append_rows(const RationalMatrix& other)
{
    if (other.cols() != cols_)
        throw DimensionMismatch("column counts differ when stacking matrices");
    for (const auto& r : other)
        rows_.push_back(r);
}

RationalVector RationalMatrix::times(const RationalVector& x) const
{
    RationalVector out;
    out.reserve(rows_.size());
    for (const auto& r : rows_)
        out.push_back(dot(r, x));
    return out;
}

RationalVector make_vector(std::initializer_list<long> entries)
{
    RationalVector v;
    v.reserve(entries.size());
    for (long e : entries)
        v.emplace_back(e);
    return v;
}

bool is_zero(const RationalVector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Rational dot(const RationalVector& a, const RationalVector& b)
{
    if (a.size() != b.size())
        throw DimensionMismatch("scalar product of vectors of length " + std::to_string(a.size()) +
                                " and " + std::to_string(b.size()));
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0)
            s += a[i] * b[i];
    return s;
}

RationalVector add(const RationalVector& a, const RationalVector& b)
{
    if (a.size() != b.size())
        throw DimensionMismatch("adding vectors of different length");
    RationalVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return out;
}

RationalVector subtract(const RationalVector& a, const RationalVector& b)
{
    if (a.size() != b.size())
        throw DimensionMismatch("subtracting vectors of different length");
    RationalVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

RationalVector scale(const RationalVector& v, const Rational& factor)
{
    RationalVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = v[i] * factor;
    return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns in order.
std::vector<std::size_t> reduce_to_rref(std::vector<RationalVector>& rows, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows.size(); ++c) {
        std::size_t p = lead;
        while (p < rows.size() && sgn(rows[p][c]) == 0)
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[lead], rows[p]);
        const Rational inv = 1 / rows[lead][c];
        for (auto& e : rows[lead])
            e *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == lead || sgn(rows[r][c]) == 0)
                continue;
            const Rational f = rows[r][c];
            for (std::size_t k = c; k < cols; ++k)
                if (sgn(rows[lead][k]) != 0)
                    rows[r][k] -= f * rows[lead][k];
        }
        pivots.push_back(c);
        ++lead;
    }
    rows.resize(lead);
    return pivots;
}

}  // namespace

std::size_t rank(const RationalMatrix& m)
{
    auto rows = m.row_list();
    return reduce_to_rref(rows, m.cols()).size();
}

RationalMatrix nullspace(const RationalMatrix& m)
{
    auto rows = m.row_list();
    const std::size_t d = m.cols();
    const auto pivots = reduce_to_rref(rows, d);
    std::vector<bool> is_pivot(d, false);
    for (auto c : pivots)
        is_pivot[c] = true;

    RationalMatrix basis(d);
    for (std::size_t free = 0; free < d; ++free) {
        if (is_pivot[free])
            continue;
        RationalVector v(d, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -rows[r][free];
        basis.append(canonical_primitive(v, Orientation::ray));
    }
    return basis;
}

RationalMatrix row_basis(const RationalMatrix& m)
{
    auto rows = m.row_list();
    reduce_to_rref(rows, m.cols());
    RationalMatrix out(m.cols());
    for (auto& r : rows)
        out.append(canonical_primitive(r, Orientation::ray));
    return out;
}

RationalVector canonical_primitive(const RationalVector& v, Orientation mode)
{
    if (is_zero(v))
        throw InvalidInput("canonical form of the zero vector is undefined");

    Integer denom_lcm = 1;
    for (const auto& q : v)
        if (sgn(q) != 0)
            mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), q.get_den_mpz_t());

    std::vector<Integer> ints(v.size());
    Integer g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        ints[i] = v[i].get_num() * (denom_lcm / v[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
    }

    if (mode == Orientation::line) {
        auto first = std::find_if(ints.begin(), ints.end(), [](const Integer& z) { return sgn(z) != 0; });
        if (sgn(*first) < 0)
            g = -g;
    }

    RationalVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = Rational(Integer(ints[i] / g));
    return out;
}

OrthogonalProjector::OrthogonalProjector(std::size_t dim, const RationalMatrix& spanning) : dim_(dim)
{
    if (!spanning.empty() && spanning.cols() != dim)
        throw DimensionMismatch("spanning set does not live in the projector's ambient space");
    for (const auto& v : spanning) {
        RationalVector w = v;
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            const Rational c = dot(w, basis_[k]) / norms_[k];
            if (sgn(c) != 0)
                w = subtract(w, scale(basis_[k], c));
        }
        if (is_zero(w))
            continue;
        w = canonical_primitive(w, Orientation::ray);
        norms_.push_back(dot(w, w));
        basis_.push_back(std::move(w));
    }
}

RationalVector OrthogonalProjector::project(const RationalVector& v) const
{
    if (v.size() != dim_)
        throw DimensionMismatch("projected vector has wrong length");
    RationalVector out(dim_, 0);
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        const Rational c = dot(v, basis_[k]) / norms_[k];
        if (sgn(c) == 0)
            continue;
        for (std::size_t i = 0; i < dim_; ++i)
            if (sgn(basis_[k][i]) != 0)
                out[i] += c * basis_[k][i];
    }
    return out;
}

RationalVector OrthogonalProjector::reject(const RationalVector& v) const
{
    if (basis_.empty()) {
        if (v.size() != dim_)
            throw DimensionMismatch("projected vector has wrong length");
        return v;
    }
    return subtract(v, project(v));
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

std::string to_string(const RationalVector& v)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i].get_str();
    os << ')';
    return os.str();
}

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto valid_int = [](std::string_view part) {
        if (!part.empty() && (part.front() == '-' || part.front() == '+'))
            part.remove_prefix(1);
        return !part.empty() &&
               std::all_of(part.begin(), part.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    const auto slash = s.find('/');
    const std::string_view num = std::string_view(s).substr(0, slash);
    const std::string_view den =
        slash == std::string::npos ? std::string_view("1") : std::string_view(s).substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || (den.front() == '-' || den.front() == '+'))
        throw InvalidInput("not a rational number: '" + s + "'");

    std::string num_str(num);
    if (num_str.front() == '+')
        num_str.erase(0, 1);
    Integer n(num_str, 10);
    Integer d(std::string(den), 10);
    if (sgn(d) == 0)
        throw InvalidInput("zero denominator in '" + s + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

}  // namespace hyperfan
