#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "hyperfan/affine.hpp"
#include "hyperfan/arrangement.hpp"

namespace hyperfan {

enum class GeneratorKind
{
    coxeter_a,   ///< e_i - e_j in R^(n+1), parameter n in [1, 6]
    linial,      ///< affine x_i - x_j = 1 in R^n, projectivized; n in [2, 5]
    zero_one,    ///< all nonzero 0/1 vectors of R^d; d in [1, 5]
    del_pezzo5,  ///< degree-5 del Pezzo pairing on the hypersimplex Delta(2,5); no parameter
};

struct GeneratorSpec
{
    GeneratorKind kind;
    std::size_t parameter = 0;
};

/// "coxeter_a:3", "linial:4", "zero_one:4", "del_pezzo5". Throws InvalidInput.
GeneratorSpec parse_generator(std::string_view text);
std::string to_string(const GeneratorSpec& spec);

struct GeneratedArrangement
{
    HyperplaneArrangement arrangement;
    std::optional<AffineArrangement> affine;  ///< set when the arrangement is a projectivization
};

/// Deterministic; throws InvalidInput for an out-of-range parameter.
GeneratedArrangement generate(const GeneratorSpec& spec);

}  // namespace hyperfan
