// Incremental double-description method over the integers.
//
// State: a lineality basis L and the extreme rays R of the cone cut out by the
// equations and the inequalities inserted so far. Every processed inequality
// vanishes on L. Each ray carries the set of processed inequalities tight on
// it, which drives the combinatorial adjacency test.

#include <algorithm>

#include <boost/dynamic_bitset.hpp>

#include "hyperfan/cone.hpp"
#include "hyperfan/errors.hpp"

namespace hyperfan::detail {

namespace {

using IntVector = std::vector<Integer>;

IntVector to_primitive_integers(const RationalVector& v)
{
    const RationalVector p = canonical_primitive(v, Orientation::ray);
    IntVector out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        out[i] = p[i].get_num();
    return out;
}

RationalVector to_rational(const IntVector& v)
{
    RationalVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = Rational(v[i]);
    return out;
}

Integer int_dot(const IntVector& a, const IntVector& b)
{
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0)
            mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
    return s;
}

// alpha * x + beta * y, divided by the gcd of its entries.
IntVector combine(const Integer& alpha, const IntVector& x, const Integer& beta, const IntVector& y)
{
    IntVector out(x.size());
    Integer g = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = alpha * x[i];
        mpz_addmul(out[i].get_mpz_t(), beta.get_mpz_t(), y[i].get_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
    }
    if (sgn(g) != 0 && g != 1)
        for (auto& e : out)
            mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
    return out;
}

struct Ray
{
    IntVector v;
    boost::dynamic_bitset<> tight;
};

}  // namespace

DoubleDescription double_description(std::size_t dim, const RationalMatrix& inequalities,
                                      const RationalMatrix& equations)
{
    if (!inequalities.empty() && inequalities.cols() != dim)
        throw DimensionMismatch("inequalities do not match the ambient dimension");
    if (!equations.empty() && equations.cols() != dim)
        throw DimensionMismatch("equations do not match the ambient dimension");

    const std::size_t m = inequalities.rows();

    std::vector<IntVector> lineality;
    for (const auto& b : nullspace(equations.empty() ? RationalMatrix(dim) : equations))
        lineality.push_back(to_primitive_integers(b));

    std::vector<IntVector> ineq;
    ineq.reserve(m);
    for (const auto& a : inequalities)
        ineq.push_back(is_zero(a) ? IntVector(dim, 0) : to_primitive_integers(a));

    std::vector<Ray> rays;
    boost::dynamic_bitset<> processed(m);

    for (std::size_t k = 0; k < m; ++k) {
        const IntVector& a = ineq[k];

        // Case 1: the inequality cuts the lineality space.
        std::size_t pivot = lineality.size();
        Integer pivot_value;
        for (std::size_t j = 0; j < lineality.size(); ++j) {
            pivot_value = int_dot(a, lineality[j]);
            if (sgn(pivot_value) != 0) {
                pivot = j;
                break;
            }
        }
        if (pivot < lineality.size()) {
            IntVector l0 = lineality[pivot];
            if (sgn(pivot_value) < 0) {
                for (auto& e : l0)
                    e = -e;
                pivot_value = -pivot_value;
            }
            std::vector<IntVector> next_lineality;
            for (std::size_t j = 0; j < lineality.size(); ++j) {
                if (j == pivot)
                    continue;
                const Integer val = int_dot(a, lineality[j]);
                next_lineality.push_back(sgn(val) == 0 ? lineality[j]
                                                       : combine(pivot_value, lineality[j], -val, l0));
            }
            for (auto& r : rays) {
                const Integer val = int_dot(a, r.v);
                if (sgn(val) != 0)
                    r.v = combine(pivot_value, r.v, -val, l0);
                r.tight.set(k);
            }
            rays.push_back(Ray{std::move(l0), processed});
            lineality = std::move(next_lineality);
            processed.set(k);
            continue;
        }

        // Case 2: the inequality vanishes on the lineality; classical DD step.
        std::vector<Integer> values(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            values[i] = int_dot(a, rays[i].v);
            const int s = sgn(values[i]);
            if (s > 0)
                pos.push_back(i);
            else if (s < 0)
                neg.push_back(i);
        }

        std::vector<Ray> next;
        next.reserve(rays.size() + pos.size() * neg.size());
        if (!neg.empty()) {
            for (std::size_t p : pos) {
                for (std::size_t n : neg) {
                    const boost::dynamic_bitset<> common = rays[p].tight & rays[n].tight;
                    bool adjacent = true;
                    for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
                        if (r == p || r == n)
                            continue;
                        if (common.is_subset_of(rays[r].tight))
                            adjacent = false;
                    }
                    if (!adjacent)
                        continue;
                    Ray fresh{combine(values[p], rays[n].v, -values[n], rays[p].v), common};
                    fresh.tight.set(k);
                    next.push_back(std::move(fresh));
                }
            }
        }
        for (std::size_t i = 0; i < rays.size(); ++i) {
            const int s = sgn(values[i]);
            if (s < 0)
                continue;
            if (s == 0)
                rays[i].tight.set(k);
            next.push_back(std::move(rays[i]));
        }
        rays = std::move(next);
        processed.set(k);
    }

    DoubleDescription out;
    out.rays.reserve(rays.size());
    for (const auto& r : rays)
        out.rays.push_back(to_rational(r.v));
    for (const auto& l : lineality)
        out.lineality.push_back(to_rational(l));
    return out;
}

}  // namespace hyperfan::detail
