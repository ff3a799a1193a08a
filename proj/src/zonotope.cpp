#include "hyperfan/zonotope.hpp"

#include <chrono>
#include <set>

#include "hyperfan/errors.hpp"

namespace hyperfan {

namespace {

RationalVector homogenize(const Rational& head, const RationalVector& v)
{
    RationalVector out;
    out.reserve(v.size() + 1);
    out.push_back(head);
    out.insert(out.end(), v.begin(), v.end());
    return out;
}

RationalVector tail(const RationalVector& v)
{
    return RationalVector(v.begin() + 1, v.end());
}

}  // namespace

Polyhedron build_zonotope(const HyperplaneArrangement& a, std::size_t max_hyperplanes)
{
    const std::size_t n = a.size();
    const std::size_t d = a.ambient_dim();
    if (n > max_hyperplanes || n >= 63)
        throw CapExceeded("zonotope of " + std::to_string(n) + " segments needs 2^" + std::to_string(n) +
                          " candidate points; cap is " + std::to_string(max_hyperplanes));

    std::set<RationalVector> candidates;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        RationalVector p(d, 0);
        for (std::size_t i = 0; i < n; ++i)
            p = (mask & (std::uint64_t{1} << i)) ? add(p, a.hyperplane(i)) : subtract(p, a.hyperplane(i));
        candidates.insert(std::move(p));
    }

    // Cone over {1} x Z: points at height 1, dual support directions at height 0.
    RationalMatrix generators(d + 1);
    for (const auto& p : candidates)
        generators.append(homogenize(1, p));
    for (const auto& y : a.support().inequalities())
        generators.append(homogenize(0, y));
    RationalMatrix lineality(d + 1);
    for (const auto& e : a.support().equations())
        lineality.append(homogenize(0, e));

    ConversionCounter uncharged;
    const Cone hom = complete_h(Cone::from_generators(d + 1, std::move(generators), std::move(lineality)), uncharged);

    Polyhedron out;
    out.ambient_dim = d;
    out.lineality = RationalMatrix(d);
    for (const auto& l : hom.lineality())
        out.lineality.append(tail(l));
    for (const auto& r : hom.rays()) {
        if (sgn(r[0]) > 0)
            out.vertices.push_back(scale(tail(r), 1 / r[0]));
        else
            out.rays.push_back(tail(r));
    }

    std::vector<AffineInequality> facet_list;
    for (const auto& f : hom.inequalities()) {
        bool touches_vertex = false;
        for (const auto& r : hom.rays())
            if (sgn(r[0]) > 0 && sgn(dot(f, r)) == 0)
                touches_vertex = true;
        if (touches_vertex)
            facet_list.push_back({tail(f), -f[0]});
    }
    out.facets = std::move(facet_list);
    for (const auto& e : hom.equations())
        out.equations.push_back({tail(e), -e[0]});
    return out;
}

CellDecomposition normal_fan(const Polyhedron& p)
{
    const auto start = std::chrono::steady_clock::now();
    const std::size_t d = p.ambient_dim;
    if (!p.facets)
        throw InvalidInput("normal fan needs the facet description of the polyhedron");

    RationalMatrix hull_normals(d);
    for (const auto& e : p.equations)
        hull_normals.append(e.normal);

    ConversionCounter counter;
    std::vector<Cone> cones;
    if (p.vertices.empty()) {
        RationalMatrix rec_rays(d);
        for (const auto& r : p.rays)
            rec_rays.append(r);
        const Cone recession = complete_h(Cone::from_generators(d, std::move(rec_rays), p.lineality), counter);
        cones.push_back(dual(recession));
    } else {
        for (const auto& v : p.vertices) {
            RationalMatrix normals(d);
            for (const auto& f : *p.facets)
                if (dot(f.normal, v) == f.offset)
                    normals.append(f.normal);
            cones.push_back(complete_h(Cone::from_generators(d, std::move(normals), hull_normals), counter));
        }
    }

    CellDecomposition out = detail::assemble_fan(d, cones, {});
    out.stats.algorithm = Algorithm::normal_fan;
    out.stats.hull_conversions = counter.value();
    out.stats.cells_found = out.maximal_cells.size();
    out.stats.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return out;
}

}  // namespace hyperfan
