#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rpdep/chain_family.hpp"
#include "rpdep/cnf3.hpp"
#include "rpdep/evaluator.hpp"
#include "rpdep/oracles.hpp"
#include "rpdep/qdimacs.hpp"
#include "rpdep/resdep.hpp"

namespace rpdep::cli {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

double seconds(std::chrono::nanoseconds d)
{
    return std::chrono::duration<double>(d).count();
}

struct Loaded
{
    ParsedFormula parsed;
    std::chrono::nanoseconds parse_time{0};
    std::string digest;
};

Loaded load(const std::string& path)
{
    const auto t0 = Clock::now();
    Loaded l{parse_qdimacs_file(path), {}, {}};
    l.parse_time = Clock::now() - t0;
    l.digest = formula_digest(l.parsed.formula);
    return l;
}

Variable require_variable(const QcnfFormula& f, long long v)
{
    if (v <= 0 || v > static_cast<long long>(f.max_var()) || !f.in_prefix(static_cast<Variable>(v))) {
        throw UsageError("unknown variable " + std::to_string(v));
    }
    return static_cast<Variable>(v);
}

VariableSet require_connecting(const QcnfFormula& f, const std::vector<long long>& vars)
{
    VariableSet x;
    for (const auto raw : vars) {
        const auto v = require_variable(f, raw);
        if (!f.is_existential(v)) {
            throw UsageError("connecting variable " + std::to_string(v) + " is universal");
        }
        x.insert(v);
    }
    return x;
}

Json diagnostics_json(const NormalizeDiagnostics& d)
{
    return Json{{"tautological_clauses", d.tautological_clauses},
                {"duplicate_literals", d.duplicate_literals},
                {"duplicate_quantifications", d.duplicate_quantifications},
                {"free_variables", d.free_variables},
                {"unused_variables", d.unused_variables}};
}

Json path_json(const ResolutionPath& p)
{
    Json steps = Json::array();
    for (const auto& s : p.steps) {
        steps.push_back({{"entry", s.entry.to_dimacs()}, {"clause", s.clause + 1}, {"exit", s.exit.to_dimacs()}});
    }
    return steps;
}

std::string annotate(const QcnfFormula& f, Variable v)
{
    return std::string(1, quantifier_letter(f.quantifier(v))) + "@" + std::to_string(f.depth(v));
}

struct Report
{
    std::string command;
    std::string digest;
    std::chrono::nanoseconds parse{0};
    std::chrono::nanoseconds total{0};
    EngineStats engine;
    std::size_t pairs = 0;

    Json to_json() const
    {
        return Json{{"command", command},
                    {"input_digest", digest},
                    {"timings",
                     {{"parse", seconds(parse)},
                      {"transform", seconds(engine.transform)},
                      {"graph", seconds(engine.graph)},
                      {"walk", seconds(engine.walk)},
                      {"total", seconds(total)}}},
                    {"counts",
                     {{"vertices", engine.vertices},
                      {"edges", engine.edges},
                      {"pushes", engine.pushes},
                      {"walks", engine.walks},
                      {"pairs", pairs}}},
                    {"push_bound_held", engine.push_bound_held}};
    }

    void write_text(std::ostream& err) const
    {
        err << "report command=" << command << " digest=" << digest << '\n'
            << "report parse=" << seconds(parse) << "s transform=" << seconds(engine.transform)
            << "s graph=" << seconds(engine.graph) << "s walk=" << seconds(engine.walk) << "s total=" << seconds(total)
            << "s\n"
            << "report vertices=" << engine.vertices << " edges=" << engine.edges << " pushes=" << engine.pushes
            << " walks=" << engine.walks << " pairs=" << pairs
            << " push_bound_held=" << (engine.push_bound_held ? "yes" : "no") << '\n';
    }
};

// ---------------------------------------------------------------- deps

struct DepsOptions
{
    std::string file;
    std::string scheme = "res";
    std::optional<long long> var;
    bool witness = false;
    std::string format = "text";
    unsigned jobs = 1;
    bool verbose = false;
    bool report = false;
};

int run_deps(const DepsOptions& o, std::ostream& out, std::ostream& err)
{
    const auto start = Clock::now();
    const auto loaded = load(o.file);
    const auto& f = loaded.parsed.formula;
    Report report{"deps", loaded.digest, loaded.parse_time, {}, {}, 0};

    DependencyRelation relation;
    if (o.var) {
        const auto v = require_variable(f, *o.var);
        if (o.scheme == "triv") {
            for (const auto& [a, b] : dtriv_full(f)) {
                if (a == v) {
                    relation.insert(a, b);
                }
            }
        } else if (f.is_existential(v)) {
            for (const Variable u : dres_of_existential(f, v, &report.engine)) {
                relation.insert(v, u);
            }
        } else {
            for (const Variable y : f.right_of(v)) {
                if (dres_contains(f, v, y, false, &report.engine).dependent) {
                    relation.insert(v, y);
                }
            }
        }
    } else {
        relation = o.scheme == "triv" ? dtriv_full(f) : dres_full(f, o.jobs, &report.engine);
    }
    const auto pairs = relation.ordered(f);
    report.pairs = pairs.size();

    // Witnesses for existential-source pairs of the resolution-path scheme.
    std::vector<std::optional<std::pair<ResolutionPath, ResolutionPath>>> witnesses(pairs.size());
    if (o.witness && o.scheme == "res") {
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (f.is_existential(pairs[i].first)) {
                witnesses[i] = dres_contains(f, pairs[i].first, pairs[i].second, true).witness_pair;
            }
        }
    }
    report.total = Clock::now() - start;

    if (o.format == "json") {
        Json doc{{"command", "deps"}, {"scheme", o.scheme}, {"formula_hash", loaded.digest}};
        Json list = Json::array();
        for (const auto& [a, b] : pairs) {
            list.push_back({a, b});
        }
        doc["pairs"] = list;
        if (o.witness) {
            Json ws = Json::array();
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                if (witnesses[i]) {
                    ws.push_back({{"pair", {pairs[i].first, pairs[i].second}},
                                  {"paths", {path_json(witnesses[i]->first), path_json(witnesses[i]->second)}}});
                }
            }
            doc["witnesses"] = ws;
        }
        if (o.verbose) {
            Json vars = Json::array();
            for (const auto& e : f.prefix()) {
                vars.push_back({{"var", e.var},
                                {"quantifier", std::string(1, quantifier_letter(e.quantifier))},
                                {"depth", f.depth(e.var)}});
            }
            doc["variables"] = vars;
        }
        doc["diagnostics"] = diagnostics_json(loaded.parsed.diagnostics);
        if (o.report) {
            doc["report"] = report.to_json();
        }
        out << doc.dump(2) << '\n';
    } else {
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const auto [a, b] = pairs[i];
            out << a << ' ' << b;
            if (o.verbose) {
                out << "  # " << annotate(f, a) << ' ' << annotate(f, b);
            }
            out << '\n';
            if (witnesses[i]) {
                out << "  path " << to_string(witnesses[i]->first) << '\n';
                out << "  path " << to_string(witnesses[i]->second) << '\n';
            }
        }
        if (o.report) {
            report.write_text(err);
        }
    }
    return kOk;
}

// ---------------------------------------------------------------- query

struct QueryOptions
{
    std::string file;
    long long x = 0;
    long long y = 0;
    bool witness = false;
    std::string format = "text";
};

int run_query(const QueryOptions& o, std::ostream& out)
{
    const auto loaded = load(o.file);
    const auto& f = loaded.parsed.formula;
    const auto x = require_variable(f, o.x);
    const auto y = require_variable(f, o.y);
    if (x == y) {
        throw UsageError("query needs two distinct variables");
    }
    const auto result = dres_contains(f, x, y, o.witness);
    if (o.format == "json") {
        Json doc{{"command", "query"},
                 {"formula_hash", loaded.digest},
                 {"x", x},
                 {"y", y},
                 {"dependent", result.dependent}};
        if (result.witness_pair) {
            doc["witnesses"] = Json::array({path_json(result.witness_pair->first),
                                            path_json(result.witness_pair->second)});
        }
        out << doc.dump(2) << '\n';
    } else {
        out << (result.dependent ? "dependent" : "independent") << '\n';
        if (result.witness_pair) {
            out << "path " << to_string(result.witness_pair->first) << '\n';
            out << "path " << to_string(result.witness_pair->second) << '\n';
        }
    }
    return result.dependent ? kOk : kNegative;
}

// ---------------------------------------------------------------- eval

struct EvalOptions
{
    std::string file;
    std::size_t max_vars = EvalBudget{}.max_variables;
    std::string format = "text";
};

int run_eval(const EvalOptions& o, std::ostream& out)
{
    const auto loaded = load(o.file);
    EvalBudget budget;
    budget.max_variables = o.max_vars;
    const bool value = evaluate(loaded.parsed.formula, budget);
    if (o.format == "json") {
        out << Json{{"command", "eval"},
                    {"formula_hash", loaded.digest},
                    {"value", value ? 1 : 0},
                    {"result", value ? "SAT" : "UNSAT"}}
                   .dump(2)
            << '\n';
    } else {
        out << (value ? "SAT" : "UNSAT") << '\n';
    }
    return kOk;
}

// ---------------------------------------------------------------- check

struct CheckOptions
{
    std::string file;
    std::size_t max_vars = EvalBudget{}.max_variables;
    std::size_t max_reorderings = EvalBudget{}.max_reorderings;
    std::string format = "text";
};

struct CheckOutcome
{
    std::string name;
    bool passed;
    std::string detail;
};

std::string pair_list(const QcnfFormula& f, const DependencyRelation& r)
{
    std::string s;
    for (const auto& [a, b] : r.ordered(f)) {
        s += (s.empty() ? "" : " ") + std::string("(") + std::to_string(a) + "," + std::to_string(b) + ")";
    }
    return s.empty() ? "none" : s;
}

std::vector<CheckOutcome> run_checks(const QcnfFormula& f, const EvalBudget& budget)
{
    std::vector<CheckOutcome> results;
    const auto dres = dres_full(f);
    const auto dtriv = dtriv_full(f);
    const auto dmat = dmat_full(f, budget);

    {
        const auto missing = dmat.minus(dres);
        results.push_back({"mat-within-res", missing.empty(),
                           missing.empty() ? "strict pairs (res minus mat): " + pair_list(f, dres.minus(dmat))
                                           : "mat pairs outside res: " + pair_list(f, missing)});
    }
    {
        const auto missing = dres.minus(dtriv);
        results.push_back({"res-within-triv", missing.empty(),
                           missing.empty() ? "ok" : "res pairs outside triv: " + pair_list(f, missing)});
    }
    {
        const auto report = check_transposition_soundness(f, dres, budget);
        std::string detail = "ok";
        if (report.counterexample) {
            detail = "value changes when exchanging " + std::to_string(report.counterexample->first) + " and " +
                     std::to_string(report.counterexample->second);
        }
        results.push_back({"transposition-soundness", report.sound, detail});
    }
    {
        std::string detail = "ok";
        bool passed = true;
        for (const Variable v : f.variables()) {
            if (!check_cumulative_shift(f, dres, {v}, budget)) {
                passed = false;
                detail = "shifting the closure of {" + std::to_string(v) + "} changes the value";
                break;
            }
        }
        results.push_back({"cumulative-shift", passed, detail});
    }
    {
        const auto existentials = f.existentials();
        const auto split = to_q3cnf(f, VariableSet(existentials.begin(), existentials.end()));
        const auto g = build_connection_graph(split.formula, split.connection_set);
        std::string detail = "ok";
        bool passed = true;
        for (std::uint32_t s = 0; s < g.vertex_count() && passed; ++s) {
            const auto lab = pec_walk(g, s);
            const auto oracle = pec_reachable_oracle(g, s);
            for (std::uint32_t t = 0; t < g.vertex_count(); ++t) {
                if (lab.colors(t) != oracle.colors[t]) {
                    passed = false;
                    detail = "labels differ for source " + std::to_string(s) + " at vertex " + std::to_string(t);
                    break;
                }
            }
        }
        results.push_back({"pec-oracle", passed, detail});
    }
    return results;
}

int run_check(const CheckOptions& o, std::ostream& out)
{
    const auto loaded = load(o.file);
    EvalBudget budget;
    budget.max_variables = o.max_vars;
    budget.max_reorderings = o.max_reorderings;
    const auto results = run_checks(loaded.parsed.formula, budget);
    const bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
    if (o.format == "json") {
        Json checks = Json::array();
        for (const auto& r : results) {
            checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        }
        out << Json{{"command", "check"}, {"formula_hash", loaded.digest}, {"checks", checks}, {"passed", all}}.dump(2)
            << '\n';
    } else {
        for (const auto& r : results) {
            out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
        }
    }
    return all ? kOk : kNegative;
}

// ---------------------------------------------------------------- bench

struct BenchOptions
{
    std::string family = "chain";
    std::vector<std::size_t> sizes{10000, 20000};
    std::size_t repeats = 5;
    std::string format = "text";
};

int run_bench(const BenchOptions& o, std::ostream& out)
{
    Json rows = Json::array();
    if (o.format != "json") {
        out << "size bytes vertices edges pushes seconds\n";
    }
    for (const auto size : o.sizes) {
        const auto chain = make_chain_formula(size);
        const auto bytes = to_qdimacs(chain.formula).size();
        std::vector<double> times;
        EngineStats last;
        for (std::size_t r = 0; r < std::max<std::size_t>(1, o.repeats); ++r) {
            EngineStats stats;
            const auto t0 = Clock::now();
            const auto deps = dres_of_existential(chain.formula, chain.source, &stats);
            times.push_back(seconds(Clock::now() - t0));
            if (!deps.contains(chain.universal)) {
                throw std::logic_error("chain formula lost its dependency");
            }
            last = stats;
        }
        std::sort(times.begin(), times.end());
        const auto median = times[times.size() / 2];
        if (o.format == "json") {
            rows.push_back({{"size", chain.formula.size()},
                            {"bytes", bytes},
                            {"vertices", last.vertices},
                            {"edges", last.edges},
                            {"pushes", last.pushes},
                            {"seconds", median}});
        } else {
            out << chain.formula.size() << ' ' << bytes << ' ' << last.vertices << ' ' << last.edges << ' '
                << last.pushes << ' ' << median << '\n';
        }
    }
    if (o.format == "json") {
        out << Json{{"command", "bench"}, {"family", o.family}, {"repeats", o.repeats}, {"rows", rows}}.dump(2)
            << '\n';
    }
    return kOk;
}

// ---------------------------------------------------------------- transform / graph

struct SplitOptions
{
    std::string file;
    std::vector<long long> connect;
};

int run_transform(const SplitOptions& o, std::ostream& out)
{
    const auto loaded = load(o.file);
    const auto& f = loaded.parsed.formula;
    write_transform_qdimacs(out, to_q3cnf(f, require_connecting(f, o.connect)));
    return kOk;
}

int run_graph(const SplitOptions& o, std::ostream& out)
{
    const auto loaded = load(o.file);
    const auto& f = loaded.parsed.formula;
    const auto split = to_q3cnf(f, require_connecting(f, o.connect));
    write_graph_text(out, build_connection_graph(split.formula, split.connection_set));
    return kOk;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Resolution-path dependencies of QDIMACS formulas", "rpdep"};
    app.set_version_flag("--version", RPDEP_VERSION);
    app.require_subcommand(1);
    const std::vector<std::string> formats{"text", "json"};

    DepsOptions deps;
    auto* deps_cmd = app.add_subcommand("deps", "Print a dependency relation");
    deps_cmd->add_option("file", deps.file, "QDIMACS input")->required();
    deps_cmd->add_option("--scheme", deps.scheme, "res or triv")->check(CLI::IsMember({"res", "triv"}));
    deps_cmd->add_option("--var", deps.var, "Only pairs whose first variable is this one");
    deps_cmd->add_flag("--witness", deps.witness, "Attach resolution paths to existential-source pairs");
    deps_cmd->add_option("--format", deps.format)->check(CLI::IsMember(formats));
    deps_cmd->add_option("--jobs", deps.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
    deps_cmd->add_flag("--verbose", deps.verbose, "Annotate variables with quantifier and depth");
    deps_cmd->add_flag("--report", deps.report, "Timings and counters (stderr in text mode)");

    QueryOptions query;
    auto* query_cmd = app.add_subcommand("query", "Test one pair; exit 0 dependent, 1 independent");
    query_cmd->add_option("file", query.file)->required();
    query_cmd->add_option("x", query.x)->required();
    query_cmd->add_option("y", query.y)->required();
    query_cmd->add_flag("--witness", query.witness);
    query_cmd->add_option("--format", query.format)->check(CLI::IsMember(formats));

    EvalOptions eval;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate the formula by brute force");
    eval_cmd->add_option("file", eval.file)->required();
    eval_cmd->add_option("--max-vars", eval.max_vars);
    eval_cmd->add_option("--format", eval.format)->check(CLI::IsMember(formats));

    CheckOptions check;
    auto* check_cmd = app.add_subcommand("check", "Cross-validate the engine against the brute-force oracles");
    check_cmd->add_option("file", check.file)->required();
    check_cmd->add_option("--max-vars", check.max_vars);
    check_cmd->add_option("--max-reorderings", check.max_reorderings);
    check_cmd->add_option("--format", check.format)->check(CLI::IsMember(formats));

    BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "Time the per-variable set procedure on generated formulas");
    bench_cmd->add_option("--family", bench.family)->check(CLI::IsMember({"chain"}));
    bench_cmd->add_option("--sizes", bench.sizes)->delimiter(',');
    bench_cmd->add_option("--repeats", bench.repeats)->check(CLI::Range(1, 1000));
    bench_cmd->add_option("--format", bench.format)->check(CLI::IsMember(formats));

    SplitOptions transform;
    auto* transform_cmd = app.add_subcommand("transform", "Split clauses to width 3 and print QDIMACS");
    transform_cmd->add_option("file", transform.file)->required();
    transform_cmd->add_option("--connect", transform.connect, "Connecting variables")->delimiter(',');

    SplitOptions graph;
    auto* graph_cmd = app.add_subcommand("graph", "Print the two-colored connection graph");
    graph_cmd->add_option("file", graph.file)->required();
    graph_cmd->add_option("--connect", graph.connect, "Connecting variables")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageError;
    }

    try {
        if (deps_cmd->parsed()) {
            return run_deps(deps, out, err);
        }
        if (query_cmd->parsed()) {
            return run_query(query, out);
        }
        if (eval_cmd->parsed()) {
            return run_eval(eval, out);
        }
        if (check_cmd->parsed()) {
            return run_check(check, out);
        }
        if (bench_cmd->parsed()) {
            return run_bench(bench, out);
        }
        if (transform_cmd->parsed()) {
            return run_transform(transform, out);
        }
        return run_graph(graph, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kBudgetExceeded;
    }
}

} // namespace rpdep::cli
