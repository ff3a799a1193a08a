#pragma once

#include <json.hpp>

#include "hyperfan/affine.hpp"
#include "hyperfan/arrangement.hpp"
#include "hyperfan/cone.hpp"
#include "hyperfan/decomposition.hpp"
#include "hyperfan/zonotope.hpp"

// JSON schemas. Every rational is written as a string "p/q" (or "p"); on
// input, JSON integers are accepted too.
//
//   cone         {ambient_dim, inequalities?, equations?, rays?, lineality?}
//   arrangement  {hyperplanes, support?: cone-like object without ambient_dim}
//                Uppercase aliases HYPERPLANES, SUPPORT.INEQUALITIES,
//                SUPPORT.EQUATIONS, SUPPORT.INPUT_RAYS, SUPPORT.INPUT_LINEALITY
//                are accepted at the top level.
//   affine       {hyperplanes: [{a: [...], b: "..."}]}
//   fan          {ambient_dim, rays, lineality, maximal_cells, cell_signatures, stats}
//   polyhedron   {ambient_dim, vertices, rays, lineality, facets: [{normal, offset}], equations}
//   complex      {dim, vertices, far_rays, lineality, maximal_cells}
namespace hyperfan::json_io {

using json = nlohmann::json;

json to_json(const Rational& q);
json to_json(const RationalVector& v);
json to_json(const RationalMatrix& m);
json to_json(const Signature& s);
json to_json(const Cone& c);
json to_json(const HyperplaneArrangement& a);
json to_json(const AffineArrangement& a);
json to_json(const EnumerationStats& s);
json to_json(const CellDecomposition& d);
json to_json(const Polyhedron& p);
json to_json(const PolyhedralComplex& c);

/// All readers throw InvalidInput on schema violations.
Rational rational_from_json(const json& j);
RationalVector vector_from_json(const json& j);
RationalMatrix matrix_from_json(const json& j, std::size_t cols);
Cone cone_from_json(const json& j);
HyperplaneArrangement arrangement_from_json(const json& j);
AffineArrangement affine_from_json(const json& j);
CellDecomposition decomposition_from_json(const json& j);

}  // namespace hyperfan::json_io
