#include "hyperfan/generators.hpp"

#include <charconv>

#include "hyperfan/errors.hpp"

namespace hyperfan {

namespace {

void check_range(const GeneratorSpec& spec, std::size_t lo, std::size_t hi)
{
    if (spec.parameter < lo || spec.parameter > hi)
        throw InvalidInput("generator " + to_string(spec) + ": parameter must lie in [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]");
}

HyperplaneArrangement coxeter_a(std::size_t n)
{
    const std::size_t d = n + 1;
    RationalMatrix rows(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            RationalVector h(d, 0);
            h[i] = 1;
            h[j] = -1;
            rows.append(std::move(h));
        }
    return HyperplaneArrangement(d, std::move(rows), std::nullopt);
}

AffineArrangement linial(std::size_t n)
{
    std::vector<AffineHyperplane> rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            RationalVector a(n, 0);
            a[i] = 1;
            a[j] = -1;
            rows.push_back({std::move(a), Rational(1)});
        }
    return AffineArrangement(n, std::move(rows));
}

HyperplaneArrangement zero_one(std::size_t d)
{
    RationalMatrix rows(d);
    for (std::size_t mask = 1; mask < (std::size_t{1} << d); ++mask) {
        RationalVector h(d, 0);
        for (std::size_t i = 0; i < d; ++i)
            if (mask & (std::size_t{1} << i))
                h[i] = 1;
        rows.append(std::move(h));
    }
    return HyperplaneArrangement(d, std::move(rows), std::nullopt);
}

// Support: cone over the vertices of Delta(2,5) at height 1 in R^6.
// Hyperplanes: rows [0 | v * P] where P is 1/4 everywhere, row and column 4
// negated, and -3/4 on the first four diagonal entries.
HyperplaneArrangement del_pezzo5()
{
    std::vector<RationalVector> pairing(5, RationalVector(5, Rational(1, 4)));
    for (std::size_t j = 0; j < 5; ++j)
        pairing[4][j] = -pairing[4][j];
    for (std::size_t i = 0; i < 5; ++i)
        pairing[i][4] = -pairing[i][4];
    for (std::size_t i = 0; i < 4; ++i)
        pairing[i][i] = Rational(-3, 4);

    RationalMatrix support_rays(6);
    RationalMatrix rows(6);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j) {
            RationalVector v(5, 0);
            v[i] = 1;
            v[j] = 1;
            RationalVector ray{Rational(1)};
            ray.insert(ray.end(), v.begin(), v.end());
            support_rays.append(std::move(ray));

            // v * P picks rows i and j of the pairing
            RationalVector h(6, 0);
            for (std::size_t c = 0; c < 5; ++c)
                h[c + 1] = pairing[i][c] + pairing[j][c];
            rows.append(std::move(h));
        }
    return HyperplaneArrangement(6, std::move(rows), Cone::from_generators(6, std::move(support_rays)));
}

}  // namespace

GeneratorSpec parse_generator(std::string_view text)
{
    const auto colon = text.find(':');
    const std::string_view name = text.substr(0, colon);
    GeneratorSpec spec{GeneratorKind::coxeter_a, 0};
    if (name == "coxeter_a")
        spec.kind = GeneratorKind::coxeter_a;
    else if (name == "linial")
        spec.kind = GeneratorKind::linial;
    else if (name == "zero_one")
        spec.kind = GeneratorKind::zero_one;
    else if (name == "del_pezzo5")
        spec.kind = GeneratorKind::del_pezzo5;
    else
        throw InvalidInput("unknown generator '" + std::string(name) + "'");

    if (colon == std::string_view::npos) {
        if (spec.kind != GeneratorKind::del_pezzo5)
            throw InvalidInput("generator '" + std::string(name) + "' needs a parameter, e.g. " +
                               std::string(name) + ":3");
        return spec;
    }
    const std::string_view param = text.substr(colon + 1);
    const auto [ptr, ec] = std::from_chars(param.data(), param.data() + param.size(), spec.parameter);
    if (ec != std::errc() || ptr != param.data() + param.size())
        throw InvalidInput("bad generator parameter '" + std::string(param) + "'");
    return spec;
}

std::string to_string(const GeneratorSpec& spec)
{
    switch (spec.kind) {
    case GeneratorKind::coxeter_a:
        return "coxeter_a:" + std::to_string(spec.parameter);
    case GeneratorKind::linial:
        return "linial:" + std::to_string(spec.parameter);
    case GeneratorKind::zero_one:
        return "zero_one:" + std::to_string(spec.parameter);
    case GeneratorKind::del_pezzo5:
        return "del_pezzo5";
    }
    return "unknown";
}

GeneratedArrangement generate(const GeneratorSpec& spec)
{
    switch (spec.kind) {
    case GeneratorKind::coxeter_a:
        check_range(spec, 1, 6);
        return {coxeter_a(spec.parameter), std::nullopt};
    case GeneratorKind::linial: {
        check_range(spec, 2, 5);
        AffineArrangement aff = linial(spec.parameter);
        HyperplaneArrangement proj = projectivize(aff);
        return {std::move(proj), std::move(aff)};
    }
    case GeneratorKind::zero_one:
        check_range(spec, 1, 5);
        return {zero_one(spec.parameter), std::nullopt};
    case GeneratorKind::del_pezzo5:
        return {del_pezzo5(), std::nullopt};
    }
    throw InvalidInput("unknown generator kind");
}

}  // namespace hyperfan
