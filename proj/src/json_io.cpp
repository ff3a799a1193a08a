#include "hyperfan/json_io.hpp"

#include "hyperfan/errors.hpp"

namespace hyperfan::json_io {

namespace {

const json& require(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw InvalidInput(std::string("missing key '") + key + "'");
    return j.at(key);
}

std::size_t require_size(const json& j, const char* key)
{
    const json& v = require(j, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        throw InvalidInput(std::string("key '") + key + "' must be a nonnegative integer");
    return v.get<std::size_t>();
}

// Column count of a matrix given as JSON, or `fallback` when it has no rows.
std::size_t width(const json& rows, std::size_t fallback)
{
    if (!rows.is_array())
        throw InvalidInput("expected an array of rows");
    if (rows.empty())
        return fallback;
    if (!rows.front().is_array())
        throw InvalidInput("expected an array of rows");
    return rows.front().size();
}

std::optional<RationalMatrix> optional_matrix(const json& j, const char* key, std::size_t cols)
{
    if (!j.contains(key) || j.at(key).is_null())
        return std::nullopt;
    return matrix_from_json(j.at(key), cols);
}

Algorithm algorithm_from_string(const std::string& s)
{
    if (s == "bfs")
        return Algorithm::bfs;
    if (s == "brute_force")
        return Algorithm::brute_force;
    if (s == "normal_fan")
        return Algorithm::normal_fan;
    throw InvalidInput("unknown algorithm '" + s + "'");
}

// When both descriptions are given they must agree; the check costs two
// uncounted conversions.
Cone support_from_fields(std::size_t dim, const std::optional<RationalMatrix>& ineq,
                         const std::optional<RationalMatrix>& eq, const std::optional<RationalMatrix>& rays,
                         const std::optional<RationalMatrix>& lin)
{
    const bool h = ineq || eq;
    const bool v = rays || lin;
    Cone from_h = Cone::from_inequalities(dim, ineq ? *ineq : RationalMatrix(dim), eq);
    if (!v)
        return from_h;
    Cone from_v = Cone::from_generators(dim, rays ? *rays : RationalMatrix(dim), lin);
    if (!h)
        return from_v;
    ConversionCounter uncounted;
    Cone completed = complete_v(from_h, uncounted);
    if (!(completed == complete_h(from_v, uncounted)))
        throw InvalidInput("inequality and generator descriptions describe different cones");
    return completed;
}

}  // namespace

json to_json(const Rational& q)
{
    return q.get_str();
}

json to_json(const RationalVector& v)
{
    json out = json::array();
    for (const auto& q : v)
        out.push_back(to_json(q));
    return out;
}

json to_json(const RationalMatrix& m)
{
    json out = json::array();
    for (const auto& r : m)
        out.push_back(to_json(r));
    return out;
}

json to_json(const Signature& s)
{
    return json(std::vector<std::size_t>(s.members.begin(), s.members.end()));
}

json to_json(const Cone& c)
{
    json out{{"ambient_dim", c.ambient_dim()}};
    if (c.has_inequalities()) {
        out["inequalities"] = to_json(c.inequalities());
        out["equations"] = to_json(c.equations());
    }
    if (c.has_generators()) {
        out["rays"] = to_json(c.rays());
        out["lineality"] = to_json(c.lineality());
    }
    return out;
}

json to_json(const HyperplaneArrangement& a)
{
    json support = to_json(a.support());
    support.erase("ambient_dim");
    return json{{"ambient_dim", a.ambient_dim()}, {"hyperplanes", to_json(a.hyperplanes())}, {"support", support}};
}

json to_json(const AffineArrangement& a)
{
    json rows = json::array();
    for (const auto& h : a.hyperplanes())
        rows.push_back(json{{"a", to_json(h.normal)}, {"b", to_json(h.offset)}});
    return json{{"dim", a.dim()}, {"hyperplanes", rows}};
}

json to_json(const EnumerationStats& s)
{
    return json{{"algorithm", to_string(s.algorithm)},
                {"hull_conversions", s.hull_conversions},
                {"cells_found", s.cells_found},
                {"wall_ms", s.wall_ms}};
}

json to_json(const CellDecomposition& d)
{
    json rays = json::array();
    for (const auto& r : d.rays)
        rays.push_back(to_json(r));
    json sigs = json::array();
    for (const auto& s : d.cell_signatures)
        sigs.push_back(to_json(s));
    return json{{"ambient_dim", d.ambient_dim},
                {"rays", rays},
                {"lineality", to_json(d.lineality)},
                {"maximal_cells", d.maximal_cells},
                {"cell_signatures", sigs},
                {"stats", to_json(d.stats)}};
}

json to_json(const Polyhedron& p)
{
    auto list = [](const std::vector<RationalVector>& vs) {
        json out = json::array();
        for (const auto& v : vs)
            out.push_back(to_json(v));
        return out;
    };
    auto halfspaces = [](const std::vector<AffineInequality>& hs) {
        json out = json::array();
        for (const auto& h : hs)
            out.push_back(json{{"normal", to_json(h.normal)}, {"offset", to_json(h.offset)}});
        return out;
    };
    json out{{"ambient_dim", p.ambient_dim},
             {"vertices", list(p.vertices)},
             {"rays", list(p.rays)},
             {"lineality", to_json(p.lineality)},
             {"equations", halfspaces(p.equations)}};
    out["facets"] = p.facets ? halfspaces(*p.facets) : json(nullptr);
    return out;
}

json to_json(const PolyhedralComplex& c)
{
    auto list = [](const std::vector<RationalVector>& vs) {
        json out = json::array();
        for (const auto& v : vs)
            out.push_back(to_json(v));
        return out;
    };
    return json{{"dim", c.dim},
                {"vertices", list(c.vertices)},
                {"far_rays", list(c.far_rays)},
                {"lineality", to_json(c.lineality)},
                {"maximal_cells", c.maximal_cells}};
}

Rational rational_from_json(const json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long>());
    throw InvalidInput("rational numbers must be strings \"p/q\" or integers, got " + j.dump());
}

RationalVector vector_from_json(const json& j)
{
    if (!j.is_array())
        throw InvalidInput("expected an array of rationals, got " + j.dump());
    RationalVector v;
    v.reserve(j.size());
    for (const auto& e : j)
        v.push_back(rational_from_json(e));
    return v;
}

RationalMatrix matrix_from_json(const json& j, std::size_t cols)
{
    if (!j.is_array())
        throw InvalidInput("expected an array of rows, got " + j.dump());
    RationalMatrix m(cols);
    for (const auto& row : j) {
        RationalVector v = vector_from_json(row);
        if (v.size() != cols)
            throw InvalidInput("row " + row.dump() + " has " + std::to_string(v.size()) + " entries, expected " +
                               std::to_string(cols));
        m.append(std::move(v));
    }
    return m;
}

Cone cone_from_json(const json& j)
{
    const std::size_t d = require_size(j, "ambient_dim");
    return support_from_fields(d, optional_matrix(j, "inequalities", d), optional_matrix(j, "equations", d),
                               optional_matrix(j, "rays", d), optional_matrix(j, "lineality", d));
}

HyperplaneArrangement arrangement_from_json(const json& j)
{
    if (!j.is_object())
        throw InvalidInput("arrangement must be a JSON object");
    const json& hyps = j.contains("hyperplanes") ? j.at("hyperplanes") : require(j, "HYPERPLANES");

    std::size_t d = width(hyps, 0);
    if (j.contains("ambient_dim"))
        d = require_size(j, "ambient_dim");
    if (d == 0)
        throw InvalidInput("cannot infer the ambient dimension; give 'ambient_dim' or at least one hyperplane");
    RationalMatrix rows = matrix_from_json(hyps, d);

    std::optional<RationalMatrix> ineq, eq, rays, lin;
    if (j.contains("support")) {
        const json& s = j.at("support");
        if (!s.is_object())
            throw InvalidInput("'support' must be an object");
        ineq = optional_matrix(s, "inequalities", d);
        eq = optional_matrix(s, "equations", d);
        rays = s.contains("input_rays") ? optional_matrix(s, "input_rays", d) : optional_matrix(s, "rays", d);
        lin = s.contains("input_lineality") ? optional_matrix(s, "input_lineality", d)
                                            : optional_matrix(s, "lineality", d);
    }
    if (j.contains("SUPPORT.INEQUALITIES"))
        ineq = matrix_from_json(j.at("SUPPORT.INEQUALITIES"), d);
    if (j.contains("SUPPORT.EQUATIONS"))
        eq = matrix_from_json(j.at("SUPPORT.EQUATIONS"), d);
    if (j.contains("SUPPORT.INPUT_RAYS"))
        rays = matrix_from_json(j.at("SUPPORT.INPUT_RAYS"), d);
    if (j.contains("SUPPORT.INPUT_LINEALITY"))
        lin = matrix_from_json(j.at("SUPPORT.INPUT_LINEALITY"), d);

    if (!ineq && !eq && !rays && !lin)
        return HyperplaneArrangement(d, std::move(rows), std::nullopt);
    return HyperplaneArrangement(d, std::move(rows), support_from_fields(d, ineq, eq, rays, lin));
}

AffineArrangement affine_from_json(const json& j)
{
    const json& hyps = require(j, "hyperplanes");
    if (!hyps.is_array())
        throw InvalidInput("'hyperplanes' must be an array of {a, b} objects");
    std::size_t d = j.contains("dim") ? require_size(j, "dim") : 0;
    std::vector<AffineHyperplane> rows;
    for (const auto& h : hyps) {
        RationalVector a = vector_from_json(require(h, "a"));
        if (d == 0)
            d = a.size();
        rows.push_back({std::move(a), rational_from_json(require(h, "b"))});
    }
    if (d == 0)
        throw InvalidInput("cannot infer the dimension of an empty affine arrangement; give 'dim'");
    return AffineArrangement(d, std::move(rows));
}

CellDecomposition decomposition_from_json(const json& j)
{
    CellDecomposition d;
    d.ambient_dim = require_size(j, "ambient_dim");
    for (const auto& r : require(j, "rays")) {
        RationalVector v = vector_from_json(r);
        if (v.size() != d.ambient_dim)
            throw InvalidInput("fan ray of wrong dimension");
        d.rays.push_back(std::move(v));
    }
    d.lineality = matrix_from_json(require(j, "lineality"), d.ambient_dim);
    for (const auto& cell : require(j, "maximal_cells")) {
        std::vector<std::size_t> idx = cell.get<std::vector<std::size_t>>();
        for (std::size_t i : idx)
            if (i >= d.rays.size())
                throw InvalidInput("cell references ray " + std::to_string(i) + " which does not exist");
        d.maximal_cells.push_back(std::move(idx));
    }
    if (j.contains("cell_signatures"))
        for (const auto& s : j.at("cell_signatures")) {
            const auto m = s.get<std::vector<std::size_t>>();
            d.cell_signatures.emplace_back(std::set<std::size_t>(m.begin(), m.end()));
        }
    if (j.contains("stats")) {
        const json& s = j.at("stats");
        d.stats.algorithm = algorithm_from_string(require(s, "algorithm").get<std::string>());
        d.stats.hull_conversions = require_size(s, "hull_conversions");
        d.stats.cells_found = require_size(s, "cells_found");
        d.stats.wall_ms = require(s, "wall_ms").get<double>();
    }
    return d;
}

}  // namespace hyperfan::json_io
