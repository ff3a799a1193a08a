#include <random>

#include <gtest/gtest.h>

#include "hyperfan/errors.hpp"
#include "hyperfan/zonotope.hpp"
#include "support/oracles.hpp"
#include "support/printing.hpp"
#include "support/properties.hpp"
#include "support/random_arrangements.hpp"

using namespace hyperfan;

namespace {

HyperplaneArrangement three_lines(std::optional<Cone> support = std::nullopt)
{
    return HyperplaneArrangement(RationalMatrix::from_rows({{0, 1}, {1, 1}, {-2, 1}}), std::move(support));
}

std::set<RationalVector> vertex_set(const Polyhedron& p)
{
    return {p.vertices.begin(), p.vertices.end()};
}

std::set<RationalVector> points(std::initializer_list<std::initializer_list<long>> rows)
{
    std::set<RationalVector> out;
    for (const auto& r : rows)
        out.insert(make_vector(r));
    return out;
}

}  // namespace

TEST(Zonotope, ThreeLinesHexagon)
{
    const Polyhedron z = build_zonotope(three_lines());
    EXPECT_EQ(vertex_set(z), points({{1, -3}, {3, -1}, {3, 1}, {-1, 3}, {-3, 1}, {-3, -1}}));
    EXPECT_TRUE(z.rays.empty());
    EXPECT_TRUE(z.lineality.empty());
    ASSERT_TRUE(z.facets.has_value());
    EXPECT_EQ(z.facets->size(), 6u);
    for (const auto& f : *z.facets)
        for (const auto& v : z.vertices)
            EXPECT_GE(dot(f.normal, v), f.offset);
}

TEST(Zonotope, NormalFanVertexMatchesSignature)
{
    const auto a = three_lines();
    const CellDecomposition fan = normal_fan(build_zonotope(a));
    const CellDecomposition bfs = decompose_bfs(a);
    EXPECT_TRUE(fans_equal(fan, bfs));
    EXPECT_EQ(fan.stats.algorithm, Algorithm::normal_fan);
    EXPECT_TRUE(fan.cell_signatures.empty());

    // The vertex sum_{i in s} h_i - sum_{i not in s} h_i minimises every functional of the cell s.
    for (std::size_t c = 0; c < bfs.maximal_cells.size(); ++c) {
        const Signature& s = bfs.cell_signatures[c];
        RationalVector v(2, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            v = s.contains(i) ? add(v, a.hyperplane(i)) : subtract(v, a.hyperplane(i));
        const RationalVector w = relative_interior_point(cell_cone(bfs, c));
        for (const auto& u : build_zonotope(a).vertices)
            if (u != v)
                EXPECT_LT(dot(w, v), dot(w, u));
    }
}

TEST(Zonotope, ProperSupportsAddTheDualCone)
{
    const Polyhedron orthant = build_zonotope(three_lines(Cone::nonnegative_orthant(2)));
    EXPECT_EQ(vertex_set(orthant), points({{-3, -1}, {1, -3}}));
    EXPECT_EQ(std::set<RationalVector>(orthant.rays.begin(), orthant.rays.end()), points({{1, 0}, {0, 1}}));

    const Cone third = Cone::from_generators(2, RationalMatrix::from_rows({{0, 1}, {1, -1}}));
    const Polyhedron z = build_zonotope(three_lines(third));
    EXPECT_EQ(vertex_set(z), points({{-3, -1}, {-3, 1}, {1, -3}}));
    EXPECT_TRUE(fans_equal(normal_fan(z), decompose_bfs(three_lines(third))));
}

TEST(Zonotope, Segment)
{
    const HyperplaneArrangement a(RationalMatrix::from_rows({{1, 0}}));
    const Polyhedron z = build_zonotope(a);
    EXPECT_EQ(vertex_set(z), points({{1, 0}, {-1, 0}}));
    EXPECT_EQ(z.equations.size(), 1u);
    const auto fan = normal_fan(z);
    EXPECT_EQ(fan.maximal_cells.size(), 2u);
    EXPECT_EQ(fan.lineality, RationalMatrix::from_rows({{0, 1}}));
}

TEST(Zonotope, CubeGivesOrthants)
{
    const HyperplaneArrangement a(RationalMatrix::identity(3));
    const Polyhedron z = build_zonotope(a);
    EXPECT_EQ(z.vertices.size(), 8u);
    EXPECT_EQ(z.facets->size(), 6u);
    const auto fan = normal_fan(z);
    EXPECT_EQ(fan.maximal_cells.size(), 8u);
    EXPECT_EQ(fan.rays.size(), 6u);
    EXPECT_TRUE(fans_equal(fan, decompose_bfs(a)));
}

TEST(Zonotope, CapOnHyperplaneCount)
{
    RationalMatrix rows(2);
    for (long i = 1; i <= 13; ++i)
        rows.append(make_vector({1, i}));
    EXPECT_THROW(build_zonotope(HyperplaneArrangement(std::move(rows))), CapExceeded);
}

TEST(Zonotope, PlanarVerticesMatchHullOracle)
{
    std::mt19937_64 rng(77);
    for (int t = 0; t < 40; ++t) {
        const auto c = fixtures::random_case(rng, 2, 5, fixtures::SupportFamily::full_space, t);
        const auto& a = c.arrangement;
        if (a.ambient_dim() != 2)
            continue;
        std::vector<RationalVector> sums;
        for (std::size_t mask = 0; mask < (std::size_t{1} << a.size()); ++mask) {
            RationalVector p(2, 0);
            for (std::size_t i = 0; i < a.size(); ++i)
                p = (mask >> i) & 1 ? add(p, a.hyperplane(i)) : subtract(p, a.hyperplane(i));
            sums.push_back(p);
        }
        const auto hull = oracle::hull_vertices_2d(sums);
        if (hull.size() < 3)
            continue;  // degenerate segment, covered above
        EXPECT_EQ(vertex_set(build_zonotope(a)), std::set<RationalVector>(hull.begin(), hull.end())) << c.name;
    }
}

TEST(Zonotope, NormalFanMatchesBfsOnRandomCorpus)
{
    for (const auto& c : fixtures::random_corpus(30, 404, 3, 5))
        EXPECT_EQ(fixtures::check_zonotope_fan(c.arrangement), "") << c.name;
}

TEST(NormalFan, NeedsFacets)
{
    Polyhedron p = build_zonotope(three_lines());
    p.facets.reset();
    EXPECT_THROW(normal_fan(p), InvalidInput);
}
