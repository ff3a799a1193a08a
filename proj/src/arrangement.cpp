#include "hyperfan/arrangement.hpp"

#include <random>

#include "hyperfan/errors.hpp"

namespace hyperfan {

namespace {

Cone completed_support(std::size_t dim, std::optional<Cone> support)
{
    if (!support)
        return Cone::full_space(dim);
    if (support->ambient_dim() != dim)
        throw DimensionMismatch("support lives in dimension " + std::to_string(support->ambient_dim()) +
                                ", hyperplanes in dimension " + std::to_string(dim));
    if (support->is_complete())
        return *support;
    ConversionCounter uncharged;
    return support->has_inequalities() ? complete_v(*support, uncharged) : complete_h(*support, uncharged);
}

bool vanishes_on_support(const RationalVector& h, const Cone& support)
{
    for (const auto& r : support.rays())
        if (sgn(dot(h, r)) != 0)
            return false;
    for (const auto& l : support.lineality())
        if (sgn(dot(h, l)) != 0)
            return false;
    return true;
}

// Sign of lambda in h = lambda * b, or 0 when h and b are not proportional.
int proportionality_sign(const RationalVector& h, const RationalVector& b)
{
    if (canonical_primitive(h, Orientation::line) != canonical_primitive(b, Orientation::line))
        return 0;
    return canonical_primitive(h, Orientation::ray) == canonical_primitive(b, Orientation::ray) ? 1 : -1;
}

std::vector<std::size_t> first_primes(std::size_t count)
{
    std::vector<std::size_t> primes;
    for (std::size_t n = 2; primes.size() < count; ++n) {
        bool prime = true;
        for (std::size_t p : primes) {
            if (p * p > n)
                break;
            if (n % p == 0) {
                prime = false;
                break;
            }
        }
        if (prime)
            primes.push_back(n);
    }
    return primes;
}

}  // namespace

HyperplaneArrangement::HyperplaneArrangement(RationalMatrix hyperplanes, std::optional<Cone> support)
    : dim_(support ? support->ambient_dim() : hyperplanes.cols()),
      hyperplanes_(std::move(hyperplanes)),
      support_(completed_support(dim_, std::move(support))),
      support_dim_(dim(support_))
{
    validate();
}

HyperplaneArrangement::HyperplaneArrangement(std::size_t ambient_dim, RationalMatrix hyperplanes,
                                             std::optional<Cone> support)
    : dim_(ambient_dim),
      hyperplanes_(std::move(hyperplanes)),
      support_(completed_support(ambient_dim, std::move(support))),
      support_dim_(dim(support_))
{
    validate();
}

void HyperplaneArrangement::validate()
{
    if (hyperplanes_.empty())
        hyperplanes_ = RationalMatrix(dim_);
    if (hyperplanes_.cols() != dim_)
        throw DimensionMismatch("hyperplanes have " + std::to_string(hyperplanes_.cols()) +
                                " coordinates, support lives in dimension " + std::to_string(dim_));
    for (std::size_t i = 0; i < hyperplanes_.rows(); ++i)
        if (is_zero(hyperplanes_[i]))
            throw InvalidInput("hyperplane " + std::to_string(i) + " is the zero vector");
}

HyperplaneClassification classify_hyperplanes(const HyperplaneArrangement& a)
{
    HyperplaneClassification c;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (vanishes_on_support(a.hyperplane(i), a.support()))
            c.support_degenerate.insert(i);
        else
            c.active.insert(i);
    }

    std::vector<RationalVector> kept;
    for (std::size_t i = 0; i < a.size(); ++i) {
        bool collapsed = false;
        for (std::size_t k = 0; k < kept.size(); ++k) {
            const int s = proportionality_sign(a.hyperplane(i), kept[k]);
            if (s != 0) {
                c.reduced_to_original[k].push_back({i, s});
                collapsed = true;
                break;
            }
        }
        if (!collapsed) {
            kept.push_back(a.hyperplane(i));
            c.reduced_to_original.push_back({{i, 1}});
        }
    }
    return c;
}

std::pair<HyperplaneArrangement, HyperplaneClassification> reduce(const HyperplaneArrangement& a)
{
    HyperplaneClassification c = classify_hyperplanes(a);
    RationalMatrix rows(a.ambient_dim());
    for (const auto& originals : c.reduced_to_original)
        rows.append(a.hyperplane(originals.front().index));
    return {HyperplaneArrangement(a.ambient_dim(), std::move(rows), a.support()), std::move(c)};
}

Signature signature_of_point(const HyperplaneArrangement& a, const RationalVector& x)
{
    if (!contains(a.support(), x))
        throw OutsideSupport("point " + to_string(x) + " is not in the support cone");
    Signature s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Rational v = dot(a.hyperplane(i), x);
        if (sgn(v) < 0) {
            s.members.insert(i);
        } else if (sgn(v) == 0 && !vanishes_on_support(a.hyperplane(i), a.support())) {
            throw NonGenericPoint("point " + to_string(x) + " lies on active hyperplane " + std::to_string(i));
        }
    }
    return s;
}

RationalVector generic_point(const HyperplaneArrangement& a, std::size_t seed)
{
    const std::size_t d = a.ambient_dim();
    const auto classification = classify_hyperplanes(a);

    std::vector<RationalVector> generators;
    for (const auto& r : a.support().rays())
        generators.push_back(r);
    for (const auto& l : a.support().lineality())
        generators.push_back(l);
    const std::size_t n_rays = a.support().rays().rows();

    // Base point: sum of rays for seed 0, otherwise a seeded positive
    // combination of rays plus an arbitrary combination of lineality.
    RationalVector base(d, 0);
    std::mt19937_64 rng(seed);
    for (std::size_t j = 0; j < generators.size(); ++j) {
        long coefficient = 0;
        if (seed == 0)
            coefficient = j < n_rays ? 1 : 0;
        else if (j < n_rays)
            coefficient = static_cast<long>(rng() % 7) + 1;
        else
            coefficient = static_cast<long>(rng() % 15) - 7;
        if (coefficient != 0)
            base = add(base, scale(generators[j], Rational(coefficient)));
    }

    auto is_generic = [&](const RationalVector& x) {
        for (std::size_t i : classification.active)
            if (sgn(dot(a.hyperplane(i), x)) == 0)
                return false;
        return true;
    };
    if (is_generic(base))
        return base;

    // base + sum_j t^(j+1) g_j: for each active hyperplane the scalar product is
    // a nonzero polynomial in t of degree <= #generators, so at most
    // #active * #generators values of t are bad and the loop terminates.
    const std::size_t attempts = classification.active.size() * generators.size() + 1;
    for (std::size_t p : first_primes(attempts)) {
        const Rational t(1, p);
        RationalVector x = base;
        Rational power = t;
        for (const auto& g : generators) {
            x = add(x, scale(g, power));
            power *= t;
        }
        if (is_generic(x))
            return x;
    }
    throw InvariantViolation("no generic point found; perturbation schedule exhausted");
}

Cone cell_from_signature(const HyperplaneArrangement& a, const Signature& s, ConversionCounter& counter)
{
    const std::size_t d = a.ambient_dim();
    RationalMatrix inequalities(d);
    for (std::size_t i : s.members)
        if (i >= a.size())
            throw InvalidInput("signature index " + std::to_string(i) + " out of range");
    for (std::size_t i = 0; i < a.size(); ++i) {
        const RationalVector& h = a.hyperplane(i);
        if (vanishes_on_support(h, a.support())) {
            if (s.contains(i))
                throw InvalidInput("signature contains support-degenerate hyperplane " + std::to_string(i));
            continue;
        }
        inequalities.append(s.contains(i) ? scale(h, Rational(-1)) : h);
    }
    inequalities.append_rows(a.support().inequalities());
    return complete_v(Cone::from_inequalities(d, std::move(inequalities), a.support().equations()), counter);
}

namespace detail {

ActiveReduction active_reduction(const HyperplaneArrangement& a)
{
    auto [reduced, classification] = reduce(a);
    RationalMatrix rows(a.ambient_dim());
    std::vector<std::vector<OriginalRef>> to_original;
    for (std::size_t k = 0; k < reduced.size(); ++k) {
        if (vanishes_on_support(reduced.hyperplane(k), a.support()))
            continue;
        rows.append(reduced.hyperplane(k));
        to_original.push_back(classification.reduced_to_original[k]);
    }
    return {HyperplaneArrangement(a.ambient_dim(), std::move(rows), a.support()), std::move(to_original)};
}

Signature to_original(const ActiveReduction& r, const Signature& working_signature)
{
    Signature out;
    for (std::size_t k = 0; k < r.to_original.size(); ++k) {
        const bool negative_side = working_signature.contains(k);
        for (const auto& ref : r.to_original[k])
            if (negative_side != (ref.sign < 0))
                out.members.insert(ref.index);
    }
    return out;
}

}  // namespace detail

}  // namespace hyperfan
