#pragma once

// Slow, obviously-correct reference computations used to check the library.
// Nothing here calls into the code under test except for plain data access.

#include <algorithm>
#include <cstddef>
#include <set>
#include <vector>

#include "hyperfan/arrangement.hpp"
#include "hyperfan/linear.hpp"

namespace hyperfan::oracle {

/// Laplace expansion along the first row.
inline Rational determinant(const std::vector<RationalVector>& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return m[0][0];
    Rational total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (sgn(m[0][j]) == 0)
            continue;
        std::vector<RationalVector> minor;
        for (std::size_t i = 1; i < n; ++i) {
            RationalVector row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j)
                    row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        const Rational term = m[0][j] * determinant(minor);
        total += (j % 2 == 0) ? term : Rational(-term);
    }
    return total;
}

/// All k-subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    if (k > n)
        return out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        out.push_back(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return out;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

/// Largest k with a nonzero k x k minor.
inline std::size_t rank_by_minors(const std::vector<RationalVector>& rows, std::size_t cols)
{
    for (std::size_t k = std::min(rows.size(), cols); k > 0; --k)
        for (const auto& rs : subsets(rows.size(), k))
            for (const auto& cs : subsets(cols, k)) {
                std::vector<RationalVector> minor;
                for (std::size_t r : rs) {
                    RationalVector row;
                    for (std::size_t c : cs)
                        row.push_back(rows[r][c]);
                    minor.push_back(std::move(row));
                }
                if (sgn(determinant(minor)) != 0)
                    return k;
            }
    return 0;
}

/// Generalized cross product of d-1 vectors in R^d.
inline RationalVector cofactor_normal(const std::vector<RationalVector>& vs, std::size_t d)
{
    RationalVector n(d);
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<RationalVector> minor;
        for (const auto& v : vs) {
            RationalVector row;
            for (std::size_t k = 0; k < d; ++k)
                if (k != j)
                    row.push_back(v[k]);
            minor.push_back(std::move(row));
        }
        const Rational det = determinant(minor);
        n[j] = (j % 2 == 0) ? det : Rational(-det);
    }
    return n;
}

/**
 * Facet normals of a full-dimensional pointed cone given by generators:
 * every hyperplane spanned by d-1 generators that keeps all generators on
 * one side. Primitive, inward, sorted.
 */
inline std::vector<RationalVector> facets_by_subsets(const std::vector<RationalVector>& rays, std::size_t d)
{
    std::set<RationalVector> found;
    for (const auto& s : subsets(rays.size(), d - 1)) {
        std::vector<RationalVector> vs;
        for (std::size_t i : s)
            vs.push_back(rays[i]);
        RationalVector n = cofactor_normal(vs, d);
        if (is_zero(n))
            continue;
        bool pos = false, neg = false;
        for (const auto& r : rays) {
            const int sg = sgn(dot(n, r));
            pos = pos || sg > 0;
            neg = neg || sg < 0;
        }
        if (pos && neg)
            continue;
        if (neg)
            n = scale(n, -1);
        found.insert(canonical_primitive(n, Orientation::ray));
    }
    return {found.begin(), found.end()};
}

/// Membership straight from the support's inequality rows.
inline bool in_support(const HyperplaneArrangement& a, const RationalVector& x)
{
    for (const auto& row : a.support().inequalities())
        if (sgn(dot(row, x)) < 0)
            return false;
    for (const auto& row : a.support().equations())
        if (sgn(dot(row, x)) != 0)
            return false;
    return true;
}

/// Hyperplanes vanishing on every generator of the support.
inline std::set<std::size_t> degenerate_hyperplanes(const HyperplaneArrangement& a)
{
    std::set<std::size_t> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        bool vanishes = true;
        for (const auto& r : a.support().rays())
            vanishes = vanishes && sgn(dot(a.hyperplane(i), r)) == 0;
        for (const auto& l : a.support().lineality())
            vanishes = vanishes && sgn(dot(a.hyperplane(i), l)) == 0;
        if (vanishes)
            out.insert(i);
    }
    return out;
}

/**
 * Signatures of all integer points of [-radius, radius]^d inside the support
 * and off every active hyperplane. For full-dimensional supports in the
 * plane and a large enough box this finds every maximal cell.
 */
inline std::set<Signature> sampled_signatures(const HyperplaneArrangement& a, long radius)
{
    const std::size_t d = a.ambient_dim();
    const std::set<std::size_t> degenerate = degenerate_hyperplanes(a);
    std::set<Signature> out;
    std::vector<long> x(d, -radius);
    while (true) {
        RationalVector p(x.begin(), x.end());
        if (in_support(a, p)) {
            Signature s;
            bool generic = true;
            for (std::size_t i = 0; i < a.size() && generic; ++i) {
                if (degenerate.count(i))
                    continue;
                const int sg = sgn(dot(a.hyperplane(i), p));
                generic = sg != 0;
                if (sg < 0)
                    s.members.insert(i);
            }
            if (generic)
                out.insert(s);
        }
        std::size_t k = 0;
        while (k < d && x[k] == radius)
            x[k++] = -radius;
        if (k == d)
            return out;
        ++x[k];
    }
}

/// Strict convex hull vertices of planar points (monotone chain), sorted lexicographically.
inline std::vector<RationalVector> hull_vertices_2d(std::vector<RationalVector> pts)
{
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3)
        return pts;
    auto cross = [](const RationalVector& o, const RationalVector& a, const RationalVector& b) {
        return Rational((a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]));
    };
    std::vector<RationalVector> hull;
    for (int pass = 0; pass < 2; ++pass) {
        const std::size_t start = hull.size();
        for (const auto& p : pts) {
            while (hull.size() >= start + 2 && sgn(cross(hull[hull.size() - 2], hull.back(), p)) <= 0)
                hull.pop_back();
            hull.push_back(p);
        }
        hull.pop_back();
        std::reverse(pts.begin(), pts.end());
    }
    std::sort(hull.begin(), hull.end());
    hull.erase(std::unique(hull.begin(), hull.end()), hull.end());
    return hull;
}

}  // namespace hyperfan::oracle
