#include "hyperfan/cone.hpp"

#include <algorithm>
#include <set>

#include "hyperfan/errors.hpp"

namespace hyperfan {

namespace {

void check_cols(const RationalMatrix& m, std::size_t dim, const char* what)
{
    if (!m.empty() && m.cols() != dim)
        throw DimensionMismatch(std::string(what) + " have " + std::to_string(m.cols()) +
                                " columns, expected " + std::to_string(dim));
}

RationalMatrix with_cols(const RationalMatrix& m, std::size_t dim)
{
    return m.empty() ? RationalMatrix(dim) : m;
}

RationalMatrix sorted_matrix(std::size_t dim, std::vector<RationalVector> rows)
{
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return RationalMatrix(dim, std::move(rows));
}

RationalMatrix stack(std::size_t dim, const RationalMatrix& a, const RationalMatrix& b)
{
    RationalMatrix out(dim);
    out.append_rows(with_cols(a, dim));
    out.append_rows(with_cols(b, dim));
    return out;
}

// Keeps the generators r (taken modulo `lineality`) that span an extreme ray of
// the cone {facets >= 0, equations = 0}.
std::vector<RationalVector> extreme_rays(std::size_t dim, const std::vector<RationalVector>& candidates,
                                         const RationalMatrix& lineality, const RationalMatrix& facet_rows,
                                         const RationalMatrix& equation_rows)
{
    const OrthogonalProjector lin(dim, lineality);
    const std::size_t target = dim - lineality.rows() - 1;
    std::set<RationalVector> out;
    for (const auto& r : candidates) {
        RationalVector v = lin.reject(r);
        if (is_zero(v))
            continue;
        v = canonical_primitive(v, Orientation::ray);
        if (out.count(v))
            continue;
        RationalMatrix tight = with_cols(equation_rows, dim);
        for (const auto& f : facet_rows)
            if (sgn(dot(f, v)) == 0)
                tight.append(f);
        if (rank(tight) == target)
            out.insert(std::move(v));
    }
    return {out.begin(), out.end()};
}

}  // namespace

Cone Cone::from_inequalities(std::size_t ambient_dim, RationalMatrix inequalities,
                             std::optional<RationalMatrix> equations)
{
    check_cols(inequalities, ambient_dim, "inequalities");
    Cone c(ambient_dim);
    c.inequalities_ = with_cols(inequalities, ambient_dim);
    RationalMatrix eq = equations ? *equations : RationalMatrix(ambient_dim);
    check_cols(eq, ambient_dim, "equations");
    c.equations_ = with_cols(eq, ambient_dim);
    return c;
}

Cone Cone::from_generators(std::size_t ambient_dim, RationalMatrix rays,
                           std::optional<RationalMatrix> lineality)
{
    check_cols(rays, ambient_dim, "rays");
    Cone c(ambient_dim);
    c.rays_ = with_cols(rays, ambient_dim);
    RationalMatrix lin = lineality ? *lineality : RationalMatrix(ambient_dim);
    check_cols(lin, ambient_dim, "lineality rows");
    c.lineality_ = with_cols(lin, ambient_dim);
    return c;
}

Cone Cone::full_space(std::size_t ambient_dim)
{
    Cone c(ambient_dim);
    c.inequalities_ = RationalMatrix(ambient_dim);
    c.equations_ = RationalMatrix(ambient_dim);
    c.rays_ = RationalMatrix(ambient_dim);
    c.lineality_ = RationalMatrix::identity(ambient_dim);
    c.complete_ = true;
    return c;
}

Cone Cone::nonnegative_orthant(std::size_t ambient_dim)
{
    Cone c(ambient_dim);
    const auto unit_vectors = RationalMatrix::identity(ambient_dim).row_list();
    c.inequalities_ = sorted_matrix(ambient_dim, unit_vectors);
    c.equations_ = RationalMatrix(ambient_dim);
    c.rays_ = sorted_matrix(ambient_dim, unit_vectors);
    c.lineality_ = RationalMatrix(ambient_dim);
    c.complete_ = true;
    return c;
}

const RationalMatrix& Cone::inequalities() const
{
    if (!inequalities_)
        throw InvalidInput("cone has no inequality description");
    return *inequalities_;
}

const RationalMatrix& Cone::equations() const
{
    if (!equations_)
        throw InvalidInput("cone has no inequality description");
    return *equations_;
}

const RationalMatrix& Cone::rays() const
{
    if (!rays_)
        throw InvalidInput("cone has no generator description");
    return *rays_;
}

const RationalMatrix& Cone::lineality() const
{
    if (!lineality_)
        throw InvalidInput("cone has no generator description");
    return *lineality_;
}

bool Cone::operator==(const Cone& other) const
{
    if (!complete_ || !other.complete_)
        throw InvalidInput("cone equality is only defined on complete cones");
    return dim_ == other.dim_ && *rays_ == *other.rays_ && *lineality_ == *other.lineality_;
}

Cone complete_v(const Cone& c, ConversionCounter& counter)
{
    const std::size_t d = c.ambient_dim();
    const RationalMatrix& ineq = c.inequalities();
    const RationalMatrix eq_in = with_cols(c.equations(), d);
    counter.increment();

    const auto dd = detail::double_description(d, with_cols(ineq, d), eq_in);

    Cone out(d);
    const RationalMatrix lineality = row_basis(RationalMatrix(d, dd.lineality));
    const OrthogonalProjector lin(d, lineality);
    std::vector<RationalVector> rays;
    rays.reserve(dd.rays.size());
    for (const auto& r : dd.rays)
        rays.push_back(canonical_primitive(lin.reject(r), Orientation::ray));
    out.rays_ = sorted_matrix(d, std::move(rays));
    out.lineality_ = lineality;

    const RationalMatrix generators = stack(d, *out.rays_, lineality);
    const RationalMatrix equations = row_basis(nullspace(generators));
    out.equations_ = equations;

    // Irredundant inequalities: not tight everywhere, and their tight
    // generators span a hyperplane of the cone's span.
    const std::size_t cone_dim = d - equations.rows();
    const OrthogonalProjector eq_space(d, equations);
    std::vector<RationalVector> facet_rows;
    for (const auto& a : ineq) {
        if (is_zero(a))
            continue;
        RationalMatrix tight = lineality;
        bool somewhere_positive = false;
        for (const auto& r : *out.rays_) {
            if (sgn(dot(a, r)) == 0)
                tight.append(r);
            else
                somewhere_positive = true;
        }
        if (!somewhere_positive || rank(tight) + 1 != cone_dim)
            continue;
        facet_rows.push_back(canonical_primitive(eq_space.reject(a), Orientation::ray));
    }
    out.inequalities_ = sorted_matrix(d, std::move(facet_rows));
    out.complete_ = true;
    return out;
}

Cone complete_h(const Cone& c, ConversionCounter& counter)
{
    const std::size_t d = c.ambient_dim();
    const RationalMatrix rays_in = with_cols(c.rays(), d);
    const RationalMatrix lin_in = with_cols(c.lineality(), d);
    counter.increment();

    // Generators of the dual cone are the facets and equations of c.
    const auto dd = detail::double_description(d, rays_in, lin_in);

    Cone out(d);
    const RationalMatrix equations = row_basis(RationalMatrix(d, dd.lineality));
    const OrthogonalProjector eq_space(d, equations);
    std::vector<RationalVector> facet_rows;
    for (const auto& f : dd.rays)
        facet_rows.push_back(canonical_primitive(eq_space.reject(f), Orientation::ray));
    out.inequalities_ = sorted_matrix(d, std::move(facet_rows));
    out.equations_ = equations;

    const RationalMatrix lineality = row_basis(nullspace(stack(d, equations, *out.inequalities_)));
    out.lineality_ = lineality;
    out.rays_ = RationalMatrix(d, extreme_rays(d, rays_in.row_list(), lineality, *out.inequalities_, equations));
    out.complete_ = true;
    return out;
}

std::vector<RationalVector> facets(const Cone& c)
{
    if (!c.is_complete())
        throw InvalidInput("facets need a complete cone");
    if (dim(c) == 0)
        throw InvalidInput("the zero cone has no facets");
    return c.inequalities().row_list();
}

std::size_t dim(const Cone& c)
{
    if (!c.has_generators())
        throw InvalidInput("dimension needs the generator description; complete the cone first");
    return rank(stack(c.ambient_dim(), c.rays(), c.lineality()));
}

Cone dual(const Cone& c)
{
    if (!c.is_complete())
        throw InvalidInput("dual needs a complete cone");
    Cone out(c.ambient_dim());
    out.inequalities_ = c.rays_;
    out.equations_ = c.lineality_;
    out.rays_ = c.inequalities_;
    out.lineality_ = c.equations_;
    out.complete_ = true;
    return out;
}

bool contains(const Cone& c, const RationalVector& x)
{
    if (x.size() != c.ambient_dim())
        throw DimensionMismatch("point of dimension " + std::to_string(x.size()) + " tested against cone in dimension " +
                                std::to_string(c.ambient_dim()));
    for (const auto& a : c.inequalities())
        if (sgn(dot(a, x)) < 0)
            return false;
    for (const auto& e : c.equations())
        if (sgn(dot(e, x)) != 0)
            return false;
    return true;
}

RationalVector relative_interior_point(const Cone& c)
{
    RationalVector x(c.ambient_dim(), 0);
    for (const auto& r : c.rays())
        x = add(x, r);
    return x;
}

}  // namespace hyperfan
