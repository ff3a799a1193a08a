#include "hyperfan/decomposition.hpp"

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <deque>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "hyperfan/errors.hpp"

namespace hyperfan {

std::string to_string(Algorithm a)
{
    switch (a) {
    case Algorithm::bfs:
        return "bfs";
    case Algorithm::brute_force:
        return "brute_force";
    case Algorithm::normal_fan:
        return "normal_fan";
    }
    return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Decides which hyperplanes are parallel to a facet normal, modulo the
// orthogonal complement of the support's span.
class FacetMatcher
{
  public:
    explicit FacetMatcher(const HyperplaneArrangement& a) : span_(a.ambient_dim(), a.support().equations())
    {
        for (std::size_t i = 0; i < a.size(); ++i) {
            const RationalVector p = span_.reject(a.hyperplane(i));
            if (is_zero(p))
                continue;
            by_direction_[canonical_primitive(p, Orientation::line)].push_back(i);
        }
        for (const auto& f : a.support().inequalities())
            support_facets_.push_back(key(f));
        std::sort(support_facets_.begin(), support_facets_.end());
    }

    RationalVector key(const RationalVector& normal) const
    {
        return canonical_primitive(span_.reject(normal), Orientation::line);
    }

    bool is_support_facet(const RationalVector& normal) const
    {
        return std::binary_search(support_facets_.begin(), support_facets_.end(), key(normal));
    }

    const std::vector<std::size_t>* parallel_hyperplanes(const RationalVector& normal) const
    {
        auto it = by_direction_.find(key(normal));
        return it == by_direction_.end() ? nullptr : &it->second;
    }

  private:
    OrthogonalProjector span_;
    std::map<RationalVector, std::vector<std::size_t>> by_direction_;
    std::vector<RationalVector> support_facets_;
};

Signature toggled(const Signature& s, const std::vector<std::size_t>& indices)
{
    Signature out = s;
    for (std::size_t i : indices) {
        if (out.contains(i))
            out.members.erase(i);
        else
            out.members.insert(i);
    }
    return out;
}

struct CellResult
{
    Signature signature;
    Cone cone;
};

// Computes one cell and the signatures of its neighbors inside the support.
std::vector<Signature> expand(const HyperplaneArrangement& w, const FacetMatcher& matcher, const Signature& s,
                              ConversionCounter& counter, std::vector<CellResult>& sink, std::mutex* sink_lock)
{
    Cone cone = cell_from_signature(w, s, counter);
    if (dim(cone) != w.support_dim())
        throw InvariantViolation("signature reached by a facet flip gives a cell of dimension " +
                                 std::to_string(dim(cone)) + ", expected " + std::to_string(w.support_dim()));
    std::vector<Signature> neighbors;
    for (const auto& f : cone.inequalities()) {
        if (matcher.is_support_facet(f))
            continue;
        const auto* parallel = matcher.parallel_hyperplanes(f);
        if (parallel == nullptr)
            throw InvariantViolation("cell facet " + to_string(f) + " is parallel to no hyperplane");
        neighbors.push_back(toggled(s, *parallel));
    }
    if (sink_lock) {
        std::lock_guard<std::mutex> guard(*sink_lock);
        sink.push_back({s, std::move(cone)});
    } else {
        sink.push_back({s, std::move(cone)});
    }
    return neighbors;
}

CellDecomposition finish(const HyperplaneArrangement& a, const detail::ActiveReduction& r,
                         std::vector<CellResult> results)
{
    std::vector<Cone> cones;
    std::vector<Signature> signatures;
    cones.reserve(results.size());
    signatures.reserve(results.size());
    for (auto& res : results) {
        cones.push_back(std::move(res.cone));
        signatures.push_back(detail::to_original(r, res.signature));
    }
    return detail::assemble_fan(a.ambient_dim(), cones, std::move(signatures));
}

std::vector<CellResult> bfs_sequential(const HyperplaneArrangement& w, const FacetMatcher& matcher,
                                       const Signature& start, ConversionCounter& counter)
{
    std::vector<CellResult> results;
    std::set<Signature> visited{start};
    std::deque<Signature> queue{start};
    while (!queue.empty()) {
        Signature s = std::move(queue.front());
        queue.pop_front();
        for (auto& n : expand(w, matcher, s, counter, results, nullptr))
            if (visited.insert(n).second)
                queue.push_back(std::move(n));
    }
    return results;
}

std::vector<CellResult> bfs_parallel(const HyperplaneArrangement& w, const FacetMatcher& matcher,
                                     const Signature& start, ConversionCounter& counter, std::size_t threads)
{
    std::vector<CellResult> results;
    std::mutex results_lock;

    std::mutex lock;
    std::condition_variable wake;
    std::set<Signature> visited{start};
    std::deque<Signature> queue{start};
    std::size_t in_flight = 0;
    std::exception_ptr failure;

    auto worker = [&] {
        for (;;) {
            Signature s;
            {
                std::unique_lock<std::mutex> guard(lock);
                wake.wait(guard, [&] { return failure || !queue.empty() || in_flight == 0; });
                if (failure || queue.empty())
                    return;
                s = std::move(queue.front());
                queue.pop_front();
                ++in_flight;
            }
            std::vector<Signature> neighbors;
            try {
                neighbors = expand(w, matcher, s, counter, results, &results_lock);
            } catch (...) {
                std::lock_guard<std::mutex> guard(lock);
                if (!failure)
                    failure = std::current_exception();
                --in_flight;
                wake.notify_all();
                return;
            }
            {
                std::lock_guard<std::mutex> guard(lock);
                for (auto& n : neighbors)
                    if (visited.insert(n).second)
                        queue.push_back(std::move(n));
                --in_flight;
            }
            wake.notify_all();
        }
    };

    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
    return results;
}

}  // namespace

CellDecomposition decompose_brute_force(const HyperplaneArrangement& a, const DecomposeOptions& options)
{
    const auto start = Clock::now();
    const auto reduction = detail::active_reduction(a);
    const HyperplaneArrangement& w = reduction.working;
    const std::size_t n = w.size();
    if (n > options.max_brute_n || n >= 63)
        throw CapExceeded("brute force over " + std::to_string(n) + " active hyperplanes means 2^" +
                          std::to_string(n) + " conversions (exponential blowup); cap is " +
                          std::to_string(options.max_brute_n));

    ConversionCounter counter;
    std::vector<CellResult> results;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Signature s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i))
                s.members.insert(i);
        Cone cone = cell_from_signature(w, s, counter);
        if (dim(cone) == w.support_dim())
            results.push_back({std::move(s), std::move(cone)});
    }

    CellDecomposition out = finish(a, reduction, std::move(results));
    out.stats.algorithm = Algorithm::brute_force;
    out.stats.hull_conversions = counter.value();
    out.stats.cells_found = out.maximal_cells.size();
    out.stats.wall_ms = elapsed_ms(start);
    return out;
}

CellDecomposition decompose_bfs(const HyperplaneArrangement& a, const DecomposeOptions& options)
{
    const auto start = Clock::now();
    const auto reduction = detail::active_reduction(a);
    const HyperplaneArrangement& w = reduction.working;
    const FacetMatcher matcher(w);

    const Signature first = signature_of_point(w, generic_point(w, options.seed));
    ConversionCounter counter;
    std::vector<CellResult> results = options.threads > 1
                                          ? bfs_parallel(w, matcher, first, counter, options.threads)
                                          : bfs_sequential(w, matcher, first, counter);

    CellDecomposition out = finish(a, reduction, std::move(results));
    out.stats.algorithm = Algorithm::bfs;
    out.stats.hull_conversions = counter.value();
    out.stats.cells_found = out.maximal_cells.size();
    out.stats.wall_ms = elapsed_ms(start);
    return out;
}

Signature neighbor_signature(const Signature& s, const RationalVector& f, const HyperplaneArrangement& a)
{
    if (f.size() != a.ambient_dim())
        throw DimensionMismatch("facet normal has wrong dimension");
    const FacetMatcher matcher(a);
    const auto* parallel = matcher.parallel_hyperplanes(f);
    if (parallel == nullptr)
        throw InvalidInput("facet " + to_string(f) + " is parallel to no active hyperplane; support facets cannot be flipped");
    return toggled(s, *parallel);
}

std::optional<std::size_t> signature_to_cell(const CellDecomposition& d, const Signature& s)
{
    auto it = std::find(d.cell_signatures.begin(), d.cell_signatures.end(), s);
    if (it == d.cell_signatures.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - d.cell_signatures.begin());
}

const Signature& cell_to_signature(const CellDecomposition& d, std::size_t cell_index)
{
    if (cell_index >= d.cell_signatures.size())
        throw std::out_of_range("cell index " + std::to_string(cell_index) + " out of range (" +
                                std::to_string(d.cell_signatures.size()) + " cells)");
    return d.cell_signatures[cell_index];
}

bool fans_equal(const CellDecomposition& d1, const CellDecomposition& d2)
{
    if (d1.ambient_dim != d2.ambient_dim)
        return false;
    if (row_basis(d1.lineality.empty() ? RationalMatrix(d1.ambient_dim) : d1.lineality) !=
        row_basis(d2.lineality.empty() ? RationalMatrix(d2.ambient_dim) : d2.lineality))
        return false;

    auto ray_set = [](const CellDecomposition& d) {
        std::vector<RationalVector> r = d.rays;
        std::sort(r.begin(), r.end());
        return r;
    };
    if (ray_set(d1) != ray_set(d2))
        return false;

    auto cell_family = [](const CellDecomposition& d) {
        std::vector<std::vector<RationalVector>> family;
        for (const auto& cell : d.maximal_cells) {
            std::vector<RationalVector> rays;
            for (std::size_t i : cell)
                rays.push_back(d.rays.at(i));
            std::sort(rays.begin(), rays.end());
            family.push_back(std::move(rays));
        }
        std::sort(family.begin(), family.end());
        return family;
    };
    return cell_family(d1) == cell_family(d2);
}

Cone cell_cone(const CellDecomposition& d, std::size_t cell_index)
{
    const auto& cell = d.maximal_cells.at(cell_index);
    RationalMatrix rays(d.ambient_dim);
    for (std::size_t i : cell)
        rays.append(d.rays.at(i));
    ConversionCounter uncharged;
    return complete_h(Cone::from_generators(d.ambient_dim, std::move(rays), d.lineality), uncharged);
}

namespace detail {

CellDecomposition assemble_fan(std::size_t ambient_dim, const std::vector<Cone>& cells,
                               std::vector<Signature> signatures)
{
    CellDecomposition out;
    out.ambient_dim = ambient_dim;
    out.lineality = cells.empty() ? RationalMatrix(ambient_dim) : cells.front().lineality();

    std::map<RationalVector, std::size_t> ray_index;
    for (const auto& c : cells) {
        if (c.lineality() != out.lineality)
            throw InvariantViolation("maximal cells disagree on the lineality space");
        for (const auto& r : c.rays())
            ray_index.emplace(r, 0);
    }
    std::size_t next = 0;
    for (auto& [ray, index] : ray_index) {
        index = next++;
        out.rays.push_back(ray);
    }

    std::vector<std::vector<std::size_t>> raw_cells;
    raw_cells.reserve(cells.size());
    for (const auto& c : cells) {
        std::vector<std::size_t> idx;
        for (const auto& r : c.rays())
            idx.push_back(ray_index.at(r));
        std::sort(idx.begin(), idx.end());
        raw_cells.push_back(std::move(idx));
    }

    std::vector<std::size_t> order(cells.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        if (raw_cells[x] != raw_cells[y])
            return raw_cells[x] < raw_cells[y];
        return !signatures.empty() && signatures[x] < signatures[y];
    });
    for (std::size_t i : order) {
        out.maximal_cells.push_back(raw_cells[i]);
        if (!signatures.empty())
            out.cell_signatures.push_back(std::move(signatures[i]));
    }
    return out;
}

}  // namespace detail

}  // namespace hyperfan
