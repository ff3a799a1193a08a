#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>

#include <CLI11.hpp>

#include "hyperfan/affine.hpp"
#include "hyperfan/decomposition.hpp"
#include "hyperfan/errors.hpp"
#include "hyperfan/generators.hpp"
#include "hyperfan/json_io.hpp"
#include "hyperfan/zonotope.hpp"

namespace hyperfan::cli {

namespace {

using json = nlohmann::json;

struct Options
{
    std::string generator;
    std::vector<std::string> generators;
    std::string input;
    std::string algorithm = "bfs";
    std::size_t seed = 0;
    std::vector<std::size_t> seeds{0, 1, 2};
    bool affine = false;
    std::size_t threads = 1;
    std::size_t max_brute_n = 25;
    std::size_t max_zonotope_n = 12;
    std::string output;
};

struct Problem
{
    std::string label;
    HyperplaneArrangement arrangement;
    bool affine;
};

// Thrown for runs that completed but whose results disagree.
struct MismatchFound
{
    json report;
};

Problem load_generator(const std::string& name, bool force_affine)
{
    const GeneratorSpec spec = parse_generator(name);
    GeneratedArrangement g = generate(spec);
    const bool affine = g.affine.has_value();
    if (force_affine && !affine)
        throw InvalidInput("--affine needs an arrangement living in {x0 >= 0}; generator " + to_string(spec) +
                           " is linear");
    return {to_string(spec), std::move(g.arrangement), affine};
}

Problem load_file(const std::string& path, bool affine)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot open '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InvalidInput(path + ": " + e.what());
    }
    try {
        if (affine)
            return {path, projectivize(json_io::affine_from_json(j)), true};
        return {path, json_io::arrangement_from_json(j), false};
    } catch (const json::exception& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

Problem load_single(const Options& o)
{
    if (o.generator.empty() == o.input.empty())
        throw InvalidInput("give exactly one of --generator and --input");
    if (!o.generator.empty())
        return load_generator(o.generator, o.affine);
    return load_file(o.input, o.affine);
}

DecomposeOptions decompose_options(const Options& o, std::size_t seed)
{
    DecomposeOptions d;
    d.seed = seed;
    d.threads = std::max<std::size_t>(o.threads, 1);
    d.max_brute_n = o.max_brute_n;
    return d;
}

json benchmark_record(const std::string& label, const HyperplaneArrangement& a, const CellDecomposition& d)
{
    return json{{"generator", label},
                {"algorithm", to_string(d.stats.algorithm)},
                {"n_hyperplanes", a.size()},
                {"n_rays", d.rays.size()},
                {"n_maximal_cells", d.maximal_cells.size()},
                {"hull_conversions", d.stats.hull_conversions},
                {"wall_ms", static_cast<std::uint64_t>(std::llround(d.stats.wall_ms))}};
}

std::vector<Algorithm> algorithms_from(const std::string& name)
{
    if (name == "bfs")
        return {Algorithm::bfs};
    if (name == "brute")
        return {Algorithm::brute_force};
    if (name == "both")
        return {Algorithm::bfs, Algorithm::brute_force};
    throw InvalidInput("unknown algorithm '" + name + "'");
}

CellDecomposition run_algorithm(Algorithm alg, const HyperplaneArrangement& a, const DecomposeOptions& options)
{
    return alg == Algorithm::bfs ? decompose_bfs(a, options) : decompose_brute_force(a, options);
}

// Signatures in `lhs` but not in `rhs`, smallest first.
json signature_difference(const CellDecomposition& lhs, const CellDecomposition& rhs)
{
    std::set<Signature> r(rhs.cell_signatures.begin(), rhs.cell_signatures.end());
    std::vector<Signature> diff;
    for (const auto& s : lhs.cell_signatures)
        if (!r.count(s))
            diff.push_back(s);
    std::sort(diff.begin(), diff.end(), [](const Signature& x, const Signature& y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    json out = json::array();
    for (const auto& s : diff)
        out.push_back(json_io::to_json(s));
    return out;
}

// Empty when the two decompositions agree; otherwise a report naming the smallest offending signature.
std::optional<json> compare_decompositions(const CellDecomposition& reference, const CellDecomposition& candidate)
{
    const bool same_fan = fans_equal(reference, candidate);
    const std::set<Signature> a(reference.cell_signatures.begin(), reference.cell_signatures.end());
    const std::set<Signature> b(candidate.cell_signatures.begin(), candidate.cell_signatures.end());
    if (same_fan && a == b)
        return std::nullopt;
    json report{{"fans_equal", same_fan},
                {"missing", signature_difference(reference, candidate)},
                {"unexpected", signature_difference(candidate, reference)}};
    if (!report["missing"].empty())
        report["minimal_failing_signature"] = report["missing"].front();
    else if (!report["unexpected"].empty())
        report["minimal_failing_signature"] = report["unexpected"].front();
    return report;
}

json run_decompose(const Options& o)
{
    const Problem p = load_single(o);
    const DecomposeOptions options = decompose_options(o, o.seed);
    std::vector<CellDecomposition> results;
    json records = json::array();
    for (Algorithm alg : algorithms_from(o.algorithm)) {
        results.push_back(run_algorithm(alg, p.arrangement, options));
        records.push_back(benchmark_record(p.label, p.arrangement, results.back()));
    }

    json out{{"input", p.label},
             {"arrangement", json_io::to_json(p.arrangement)},
             {"decomposition", json_io::to_json(results.front())},
             {"records", records}};
    if (p.affine)
        out["polyhedral_complex"] = json_io::to_json(to_polyhedral_complex(results.front()));
    if (results.size() == 2) {
        const auto report = compare_decompositions(results[1], results[0]);
        out["agree"] = !report.has_value();
        if (report) {
            out["mismatch"] = *report;
            throw MismatchFound{out};
        }
    }
    return out;
}

json run_compare(const Options& o)
{
    const Problem p = load_single(o);
    if (o.seeds.empty())
        throw InvalidInput("--seeds must name at least one seed");
    const CellDecomposition brute = decompose_brute_force(p.arrangement, decompose_options(o, 0));
    json records = json::array({benchmark_record(p.label, p.arrangement, brute)});
    json mismatches = json::array();
    for (std::size_t seed : o.seeds) {
        const CellDecomposition bfs = decompose_bfs(p.arrangement, decompose_options(o, seed));
        json record = benchmark_record(p.label, p.arrangement, bfs);
        record["seed"] = seed;
        records.push_back(record);
        if (auto report = compare_decompositions(brute, bfs)) {
            (*report)["seed"] = seed;
            mismatches.push_back(*report);
        }
    }
    json out{{"input", p.label},
             {"seeds", o.seeds},
             {"agree", mismatches.empty()},
             {"records", records},
             {"mismatches", mismatches}};
    if (!mismatches.empty())
        throw MismatchFound{out};
    return out;
}

json run_zonotope_check(const Options& o)
{
    const Problem p = load_single(o);
    const Polyhedron z = build_zonotope(p.arrangement, o.max_zonotope_n);
    const CellDecomposition fan = normal_fan(z);
    const CellDecomposition bfs = decompose_bfs(p.arrangement, decompose_options(o, o.seed));
    const bool agree = fans_equal(fan, bfs);
    json out{{"input", p.label},
             {"zonotope", json_io::to_json(z)},
             {"n_vertices", z.vertices.size()},
             {"normal_fan_cells", fan.maximal_cells.size()},
             {"bfs_cells", bfs.maximal_cells.size()},
             {"agree", agree}};
    if (!agree)
        throw MismatchFound{out};
    return out;
}

json run_bench(const Options& o)
{
    std::vector<std::string> names = o.generators;
    if (names.empty())
        names = {"zero_one:2", "zero_one:3", "zero_one:4", "coxeter_a:3", "linial:4", "del_pezzo5"};
    const std::vector<Algorithm> algorithms = algorithms_from(o.algorithm);

    json records = json::array();
    json skipped = json::array();
    json disagreements = json::array();
    for (const auto& name : names) {
        const Problem p = load_generator(name, false);
        const DecomposeOptions options = decompose_options(o, o.seed);
        std::optional<std::size_t> cells;
        for (Algorithm alg : algorithms) {
            CellDecomposition d;
            try {
                d = run_algorithm(alg, p.arrangement, options);
            } catch (const CapExceeded&) {
                skipped.push_back(json{{"generator", p.label}, {"algorithm", to_string(alg)}});
                continue;
            }
            records.push_back(benchmark_record(p.label, p.arrangement, d));
            if (cells && *cells != d.maximal_cells.size())
                disagreements.push_back(p.label);
            cells = d.maximal_cells.size();
        }
    }
    json out{{"records", records}, {"skipped", skipped}};
    if (!disagreements.empty()) {
        out["disagreements"] = disagreements;
        throw MismatchFound{out};
    }
    return out;
}

void add_input_options(CLI::App& cmd, Options& o)
{
    auto* gen = cmd.add_option("--generator", o.generator, "coxeter_a:N, linial:N, zero_one:D or del_pezzo5");
    auto* in = cmd.add_option("--input", o.input, "arrangement JSON file");
    gen->excludes(in);
    cmd.add_flag("--affine", o.affine, "treat the input as an affine arrangement and report the polyhedral complex");
}

void add_run_options(CLI::App& cmd, Options& o)
{
    cmd.add_option("--threads", o.threads, "worker threads for the BFS frontier")->check(CLI::PositiveNumber);
    cmd.add_option("--max-brute-n", o.max_brute_n, "largest hyperplane count brute force will attempt");
    cmd.add_option("--output", o.output, "write JSON here instead of standard output");
}

void emit(const json& result, const Options& o, std::ostream& out)
{
    if (o.output.empty()) {
        out << result.dump(2) << '\n';
        return;
    }
    std::ofstream file(o.output);
    if (!file)
        throw InvalidInput("cannot write '" + o.output + "'");
    file << result.dump(2) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Cell decompositions of hyperplane arrangements"};
    app.name("hyperfan-cli");
    app.require_subcommand(1);
    Options o;

    auto* decompose = app.add_subcommand("decompose", "enumerate the maximal cells");
    add_input_options(*decompose, o);
    add_run_options(*decompose, o);
    decompose->add_option("--algorithm", o.algorithm, "bfs, brute or both")
        ->check(CLI::IsMember({"bfs", "brute", "both"}));
    decompose->add_option("--seed", o.seed, "seed for the BFS start point");

    auto* compare = app.add_subcommand("compare", "check BFS against brute force over several seeds");
    add_input_options(*compare, o);
    add_run_options(*compare, o);
    compare->add_option("--seeds", o.seeds, "BFS seeds, comma separated")->delimiter(',');

    auto* zonotope = app.add_subcommand("zonotope-check", "check the zonotope's normal fan against BFS");
    add_input_options(*zonotope, o);
    add_run_options(*zonotope, o);
    zonotope->add_option("--seed", o.seed, "seed for the BFS start point");
    zonotope->add_option("--max-zonotope-n", o.max_zonotope_n, "largest hyperplane count for the zonotope");

    auto* bench = app.add_subcommand("bench", "emit one benchmark record per generator and algorithm");
    bench->add_option("--generator", o.generators, "generator, repeatable");
    add_run_options(*bench, o);
    bench->add_option("--algorithm", o.algorithm, "bfs, brute or both")
        ->check(CLI::IsMember({"bfs", "brute", "both"}));
    bench->add_option("--seed", o.seed, "seed for the BFS start point");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }
    if (bench->parsed() && bench->count("--algorithm") == 0)
        o.algorithm = "both";

    try {
        json result;
        if (decompose->parsed())
            result = run_decompose(o);
        else if (compare->parsed())
            result = run_compare(o);
        else if (zonotope->parsed())
            result = run_zonotope_check(o);
        else
            result = run_bench(o);
        emit(result, o, out);
        return ok;
    } catch (const MismatchFound& m) {
        err << "error: results disagree\n";
        try {
            emit(m.report, o, out);
        } catch (const HyperfanError& e) {
            err << "error: " << e.what() << '\n';
        }
        return mismatch;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return cap_exceeded;
    } catch (const HyperfanError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
}

}  // namespace hyperfan::cli
