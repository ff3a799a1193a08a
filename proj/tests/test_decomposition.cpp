#include <random>

#include <gtest/gtest.h>

#include "hyperfan/decomposition.hpp"
#include "hyperfan/errors.hpp"
#include "hyperfan/generators.hpp"
#include "support/oracles.hpp"
#include "support/printing.hpp"
#include "support/properties.hpp"
#include "support/random_arrangements.hpp"

using namespace hyperfan;
using fixtures::signature_set;

namespace {

const RationalMatrix three_line_rows = RationalMatrix::from_rows({{0, 1}, {1, 1}, {-2, 1}});

HyperplaneArrangement three_lines(std::optional<Cone> support = std::nullopt)
{
    return HyperplaneArrangement(three_line_rows, std::move(support));
}

Cone third_support()
{
    return Cone::from_generators(2, RationalMatrix::from_rows({{0, 1}, {1, -1}}));
}

}  // namespace

TEST(Decompose, ThreeLinesSignaturesMatchGridOracle)
{
    for (const auto& a : {three_lines(), three_lines(Cone::nonnegative_orthant(2)), three_lines(third_support())}) {
        const auto expected = oracle::sampled_signatures(a, 8);
        EXPECT_EQ(signature_set(decompose_bfs(a)), expected);
        EXPECT_EQ(signature_set(decompose_brute_force(a)), expected);
    }
    // Full space: six of the eight sign patterns occur; {0} and {1,2} do not.
    const auto full = signature_set(decompose_bfs(three_lines()));
    EXPECT_EQ(full.size(), 6u);
    EXPECT_FALSE(full.count(Signature{0}));
    EXPECT_FALSE(full.count(Signature{1, 2}));
}

TEST(Decompose, ThreeLinesCountsAndConversions)
{
    const std::pair<HyperplaneArrangement, std::size_t> cases[] = {
        {three_lines(), 6}, {three_lines(Cone::nonnegative_orthant(2)), 2}, {three_lines(third_support()), 3}};
    for (const auto& [a, cells] : cases) {
        const auto bfs = decompose_bfs(a);
        const auto brute = decompose_brute_force(a);
        EXPECT_EQ(bfs.maximal_cells.size(), cells);
        EXPECT_EQ(brute.maximal_cells.size(), cells);
        EXPECT_EQ(bfs.stats.hull_conversions, cells);
        EXPECT_EQ(brute.stats.hull_conversions, 8u);
        EXPECT_EQ(bfs.stats.cells_found, cells);
        EXPECT_EQ(bfs.stats.algorithm, Algorithm::bfs);
        EXPECT_EQ(brute.stats.algorithm, Algorithm::brute_force);
        EXPECT_TRUE(fans_equal(bfs, brute));
    }
}

TEST(Decompose, ThreeLinesRaysAndCell)
{
    const auto d = decompose_bfs(three_lines());
    const std::vector<RationalVector> rays{make_vector({-1, -2}), make_vector({-1, 0}), make_vector({-1, 1}),
                                           make_vector({1, -1}),  make_vector({1, 0}),  make_vector({1, 2})};
    EXPECT_EQ(d.rays, rays);
    EXPECT_TRUE(d.lineality.empty());
    const auto cell = signature_to_cell(d, Signature{2});
    ASSERT_TRUE(cell.has_value());
    std::set<RationalVector> cell_rays;
    for (std::size_t i : d.maximal_cells[*cell])
        cell_rays.insert(d.rays[i]);
    EXPECT_EQ(cell_rays, (std::set<RationalVector>{make_vector({1, 0}), make_vector({1, 2})}));
}

TEST(Decompose, DuplicatesReportOriginalIndices)
{
    const HyperplaneArrangement a(RationalMatrix::from_rows({{0, 1}, {0, 2}, {0, -3}, {1, 0}}));
    const auto d = decompose_bfs(a);
    EXPECT_EQ(d.maximal_cells.size(), 4u);
    // Above y = 0 and right of x = 0 only the negated copy is negative.
    EXPECT_TRUE(signature_to_cell(d, Signature{2}).has_value());
    EXPECT_TRUE(signature_to_cell(d, Signature{0, 1, 3}).has_value());
    EXPECT_EQ(signature_set(d), signature_set(decompose_brute_force(a)));
    EXPECT_EQ(decompose_brute_force(a).stats.hull_conversions, 4u);
}

TEST(Decompose, LinealityFromParallelHyperplanes)
{
    const HyperplaneArrangement a(RationalMatrix::from_rows({{1, 0, 0}, {0, 1, 0}}));
    const auto d = decompose_bfs(a);
    EXPECT_EQ(d.maximal_cells.size(), 4u);
    EXPECT_EQ(d.lineality, RationalMatrix::from_rows({{0, 0, 1}}));
    EXPECT_EQ(d.rays.size(), 4u);
}

TEST(Decompose, EmptyArrangementIsTheSupport)
{
    const HyperplaneArrangement a(2, RationalMatrix(2), Cone::nonnegative_orthant(2));
    const auto d = decompose_bfs(a);
    ASSERT_EQ(d.maximal_cells.size(), 1u);
    EXPECT_EQ(d.cell_signatures[0], Signature{});
    EXPECT_EQ(d.rays.size(), 2u);
    EXPECT_EQ(decompose_brute_force(a).stats.hull_conversions, 1u);
}

TEST(Decompose, LowerDimensionalSupport)
{
    // Braid arrangement restricted to the plane x + y + z = 0.
    const Cone plane = Cone::from_inequalities(3, RationalMatrix(3), RationalMatrix::from_rows({{1, 1, 1}}));
    const HyperplaneArrangement a(RationalMatrix::from_rows({{1, -1, 0}, {1, 0, -1}, {0, 1, -1}, {1, 1, 1}}), plane);
    const auto bfs = decompose_bfs(a);
    EXPECT_EQ(bfs.maximal_cells.size(), 6u);
    EXPECT_TRUE(fans_equal(bfs, decompose_brute_force(a)));
    for (std::size_t i = 0; i < bfs.maximal_cells.size(); ++i) {
        EXPECT_EQ(dim(cell_cone(bfs, i)), 2u);
        EXPECT_FALSE(bfs.cell_signatures[i].contains(3)) << "hyperplane 3 vanishes on the support";
    }
}

TEST(Decompose, SupportFacetOnAHyperplane)
{
    // The orthant boundary y = 0 is also hyperplane 0.
    const HyperplaneArrangement a(RationalMatrix::from_rows({{0, 1}, {1, -1}}), Cone::nonnegative_orthant(2));
    const auto bfs = decompose_bfs(a);
    EXPECT_EQ(bfs.maximal_cells.size(), 2u);
    EXPECT_LE(bfs.stats.hull_conversions, 3u);
    EXPECT_TRUE(fans_equal(bfs, decompose_brute_force(a)));
}

TEST(Decompose, BruteForceCap)
{
    const auto a = generate(parse_generator("zero_one:4")).arrangement;
    DecomposeOptions options;
    options.max_brute_n = 10;
    EXPECT_THROW(decompose_brute_force(a, options), CapExceeded);
}

TEST(Decompose, ThreadsDoNotChangeTheResult)
{
    for (const char* name : {"coxeter_a:3", "zero_one:3", "linial:4"}) {
        const auto a = generate(parse_generator(name)).arrangement;
        const auto serial = decompose_bfs(a);
        DecomposeOptions options;
        options.threads = 4;
        const auto parallel = decompose_bfs(a, options);
        EXPECT_EQ(serial.rays, parallel.rays) << name;
        EXPECT_EQ(serial.maximal_cells, parallel.maximal_cells) << name;
        EXPECT_EQ(serial.cell_signatures, parallel.cell_signatures) << name;
        EXPECT_EQ(serial.stats.hull_conversions, parallel.stats.hull_conversions) << name;
    }
}

TEST(NeighborSignature, FlipsParallelHyperplanes)
{
    const auto a = three_lines();
    EXPECT_EQ(neighbor_signature(Signature{2}, make_vector({0, 1}), a), (Signature{0, 2}));
    EXPECT_EQ(neighbor_signature(Signature{2}, make_vector({2, -1}), a), Signature{});
    EXPECT_EQ(neighbor_signature(Signature{2}, make_vector({-4, 2}), a), Signature{});
    EXPECT_THROW(neighbor_signature(Signature{2}, make_vector({1, 0}), a), InvalidInput);

    const HyperplaneArrangement dup(RationalMatrix::from_rows({{0, 1}, {0, -2}}));
    EXPECT_EQ(neighbor_signature(Signature{1}, make_vector({0, 1}), dup), Signature{0});
}

TEST(NeighborSignature, AgreesWithCellAdjacency)
{
    for (const char* name : {"coxeter_a:3", "zero_one:3"}) {
        const auto a = generate(parse_generator(name)).arrangement;
        const auto d = decompose_bfs(a);
        for (std::size_t i = 0; i < d.maximal_cells.size(); ++i)
            for (const auto& f : facets(cell_cone(d, i))) {
                const auto j = signature_to_cell(d, neighbor_signature(d.cell_signatures[i], f, a));
                ASSERT_TRUE(j.has_value()) << name;
                // The neighbour shares the facet: its facet list contains -f.
                const auto g = facets(cell_cone(d, *j));
                EXPECT_NE(std::find(g.begin(), g.end(), scale(f, -1)), g.end()) << name;
            }
    }
}

TEST(SignatureLookup, RoundTripAndErrors)
{
    const auto d = decompose_bfs(three_lines());
    for (std::size_t i = 0; i < d.maximal_cells.size(); ++i)
        EXPECT_EQ(signature_to_cell(d, cell_to_signature(d, i)), i);
    EXPECT_FALSE(signature_to_cell(d, Signature{0}).has_value());
    EXPECT_THROW(cell_to_signature(d, 6), std::out_of_range);
    EXPECT_THROW(cell_cone(d, 6), std::out_of_range);
}

TEST(FansEqual, IgnoresOrderButNotContent)
{
    const auto d = decompose_bfs(three_lines());
    CellDecomposition shuffled = d;
    std::reverse(shuffled.maximal_cells.begin(), shuffled.maximal_cells.end());
    shuffled.cell_signatures.clear();
    EXPECT_TRUE(fans_equal(d, shuffled));

    CellDecomposition fewer = d;
    fewer.maximal_cells.pop_back();
    EXPECT_FALSE(fans_equal(d, fewer));
    EXPECT_FALSE(fans_equal(d, decompose_bfs(three_lines(Cone::nonnegative_orthant(2)))));
}

TEST(Decompose, RandomPlanarCasesMatchGridOracle)
{
    for (const auto& c : fixtures::random_corpus(45, 31, 2, 6)) {
        const auto expected = oracle::sampled_signatures(c.arrangement, 12);
        EXPECT_EQ(signature_set(decompose_bfs(c.arrangement)), expected) << c.name;
    }
}
