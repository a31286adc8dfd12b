#include "rpdep/resdep.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace rpdep {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<bool> existential_mask(const QcnfFormula& f, const VariableSet& x)
{
    std::vector<bool> mask(static_cast<std::size_t>(f.max_var()) + 1, false);
    for (const Variable v : x) {
        if (!f.in_prefix(v)) {
            throw std::invalid_argument("connecting set contains unknown variable " + std::to_string(v));
        }
        if (!f.is_existential(v)) {
            throw std::invalid_argument("connecting set contains universal variable " + std::to_string(v));
        }
        mask[v] = true;
    }
    return mask;
}

/// Existentials strictly right of v, minus `skip`.
std::vector<bool> right_existentials(const QcnfFormula& f, Variable v, Variable skip)
{
    std::vector<bool> mask(static_cast<std::size_t>(f.max_var()) + 1, false);
    const auto& prefix = f.prefix();
    for (std::size_t i = f.depth(v); i < prefix.size(); ++i) {
        if (prefix[i].quantifier == Quantifier::Exists && prefix[i].var != skip) {
            mask[prefix[i].var] = true;
        }
    }
    return mask;
}

void require_literal(const QcnfFormula& f, Literal l)
{
    if (!f.occurs(l)) {
        throw std::invalid_argument("literal " + to_string(l) + " is not in the formula");
    }
}

struct PairWalks
{
    ColorLabeling positive;
    ColorLabeling negative;
};

/// Which crossing of the dependency-pair definition holds: 0 none, 1 straight, 2 crossed.
int pair_kind(const ConnectionIndex& index, const PairWalks& walks, Variable b)
{
    if (index.connected(walks.positive, pos(b)) && index.connected(walks.negative, neg(b))) {
        return 1;
    }
    if (index.connected(walks.positive, neg(b)) && index.connected(walks.negative, pos(b))) {
        return 2;
    }
    return 0;
}

} // namespace

void EngineStats::merge(const EngineStats& other)
{
    transform += other.transform;
    graph += other.graph;
    walk += other.walk;
    vertices += other.vertices;
    edges += other.edges;
    pushes += other.pushes;
    walks += other.walks;
    push_bound_held = push_bound_held && other.push_bound_held;
}

ConnectionIndex::ConnectionIndex(const QcnfFormula& f, const std::vector<bool>& connect, EngineStats* stats)
    : f_(f), stats_(stats)
{
    const auto t0 = Clock::now();
    split_ = split_to_ternary(f);
    const auto t1 = Clock::now();

    connect_.assign(static_cast<std::size_t>(split_.formula.max_var()) + 1, false);
    std::copy_n(connect.begin(), std::min(connect.size(), connect_.size()), connect_.begin());
    for (std::size_t i = 0; i < split_.fresh_count; ++i) {
        connect_[split_.first_fresh + i] = true;
    }
    graph_ = build_clique_graph(split_.formula, connect_);

    // Literal -> clauses of the split formula, for turning blue edges back into clauses.
    const auto& clauses = split_.formula.clauses();
    occ_offsets_.assign(split_.formula.literal_code_bound() + 1, 0);
    for (const auto& c : clauses) {
        for (const Literal l : c) {
            ++occ_offsets_[l.code() + 1];
        }
    }
    for (std::size_t i = 1; i < occ_offsets_.size(); ++i) {
        occ_offsets_[i] += occ_offsets_[i - 1];
    }
    occ_clauses_.resize(occ_offsets_.back());
    std::vector<std::size_t> fill(occ_offsets_.begin(), occ_offsets_.end() - 1);
    for (std::size_t ci = 0; ci < clauses.size(); ++ci) {
        for (const Literal l : clauses[ci]) {
            occ_clauses_[fill[l.code()]++] = static_cast<std::uint32_t>(ci);
        }
    }
    const auto t2 = Clock::now();

    if (stats_ != nullptr) {
        stats_->transform += t1 - t0;
        stats_->graph += t2 - t1;
        stats_->vertices += graph_.vertex_count();
        stats_->edges += graph_.edge_count();
    }
}

ColorLabeling ConnectionIndex::walk_from(Literal from) const
{
    require_literal(f_, from);
    const auto t0 = Clock::now();
    auto labeling = pec_walk(graph_, from.code());
    if (stats_ != nullptr) {
        stats_->walk += Clock::now() - t0;
        stats_->pushes += labeling.pushes();
        ++stats_->walks;
        if (labeling.pushes() > 2 * graph_.edge_count()) {
            stats_->push_bound_held = false;
        }
    }
    return labeling;
}

bool ConnectionIndex::connected(const ColorLabeling& labeling, Literal to) const
{
    require_literal(f_, to);
    return reachable_with_last_color(labeling, to.code(), Color::Blue);
}

ResolutionPath ConnectionIndex::witness(const ColorLabeling& labeling, Literal to) const
{
    const auto walk = extract_walk(graph_, labeling, to.code(), Color::Blue);
    // Blue edges are the clause steps; the red edges between them are the links.
    ResolutionPath split_path;
    const auto& clauses = split_.formula.clauses();
    for (std::size_t i = 0; i + 1 < walk.size(); i += 2) {
        const auto a = Literal::from_code(walk[i]);
        const auto b = Literal::from_code(walk[i + 1]);
        std::optional<std::size_t> found;
        for (auto k = occ_offsets_[a.code()]; k < occ_offsets_[a.code() + 1]; ++k) {
            const auto& c = clauses[occ_clauses_[k]];
            if (std::find(c.begin(), c.end(), b) != c.end()) {
                found = occ_clauses_[k];
                break;
            }
        }
        if (!found) {
            throw std::logic_error("blue edge without a supporting clause");
        }
        split_path.steps.push_back({a, *found, b});
    }
    auto path = collapse_fresh_links(split_, split_path);

    VariableSet x;
    for (Variable v = 1; v <= f_.max_var() && v < connect_.size(); ++v) {
        if (connect_[v]) {
            x.insert(x.end(), v);
        }
    }
    std::string why;
    if (!is_resolution_path(f_, x, path, &why)) {
        throw std::logic_error("witness fails validation: " + why);
    }
    return path;
}

ConnectionResult resolution_connected(const QcnfFormula& f, const VariableSet& x, Literal l1, Literal l2,
                                      bool want_witness)
{
    if (l1 == l2) {
        throw std::invalid_argument("a literal is not resolution connected to itself");
    }
    const auto mask = existential_mask(f, x);
    require_literal(f, l1);
    require_literal(f, l2);
    const ConnectionIndex index(f, mask);
    const auto labeling = index.walk_from(l1);
    ConnectionResult result;
    result.connected = index.connected(labeling, l2);
    if (result.connected && want_witness) {
        result.witness = index.witness(labeling, l2);
    }
    return result;
}

bool is_dependency_pair(const QcnfFormula& f, const VariableSet& x, Variable a, Variable b)
{
    if (a == b) {
        throw std::invalid_argument("dependency pair needs two distinct variables");
    }
    const auto mask = existential_mask(f, x);
    if (!f.occurs(a) || !f.occurs(b)) {
        return false;
    }
    const ConnectionIndex index(f, mask);
    const PairWalks walks{index.walk_from(pos(a)), index.walk_from(neg(a))};
    return pair_kind(index, walks, b) != 0;
}

DependencyQueryResult dres_contains(const QcnfFormula& f, Variable x, Variable y, bool want_witness,
                                    EngineStats* stats)
{
    const auto dx = f.depth(x);
    const auto dy = f.depth(y);
    if (x == y) {
        throw std::invalid_argument("dependency query needs two distinct variables");
    }
    DependencyQueryResult result;
    if (dx > dy || f.quantifier(x) == f.quantifier(y) || !f.occurs(x) || !f.occurs(y)) {
        return result;
    }
    const ConnectionIndex index(f, right_existentials(f, x, y), stats);
    const PairWalks walks{index.walk_from(pos(x)), index.walk_from(neg(x))};
    const auto kind = pair_kind(index, walks, y);
    result.dependent = kind != 0;
    if (result.dependent && want_witness) {
        const auto target = kind == 1 ? pos(y) : neg(y);
        result.witness_pair.emplace(index.witness(walks.positive, target), index.witness(walks.negative, ~target));
    }
    return result;
}

VariableSet dres_of_existential(const QcnfFormula& f, Variable y, EngineStats* stats)
{
    if (!f.is_existential(y)) {
        throw std::invalid_argument("variable " + std::to_string(y) + " is universal");
    }
    VariableSet result;
    if (!f.occurs(y)) {
        return result;
    }
    const ConnectionIndex index(f, right_existentials(f, y, y), stats);
    const PairWalks walks{index.walk_from(pos(y)), index.walk_from(neg(y))};
    const auto& prefix = f.prefix();
    for (std::size_t i = f.depth(y); i < prefix.size(); ++i) {
        const auto v = prefix[i].var;
        if (prefix[i].quantifier == Quantifier::Forall && f.occurs(v) && pair_kind(index, walks, v) != 0) {
            result.insert(result.end(), v);
        }
    }
    return result;
}

DependencyRelation dres_full(const QcnfFormula& f, unsigned jobs, EngineStats* stats)
{
    // One task per existential source, one per (universal, later existential) pair.
    struct Task
    {
        Variable source;
        Variable target; // 0 for the existential set procedure
    };
    std::vector<Task> tasks;
    const auto& prefix = f.prefix();
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        const auto v = prefix[i].var;
        if (!f.occurs(v)) {
            continue;
        }
        if (prefix[i].quantifier == Quantifier::Exists) {
            tasks.push_back({v, 0});
            continue;
        }
        for (std::size_t j = i + 1; j < prefix.size(); ++j) {
            if (prefix[j].quantifier == Quantifier::Exists && f.occurs(prefix[j].var)) {
                tasks.push_back({v, prefix[j].var});
            }
        }
    }

    DependencyRelation relation;
    std::mutex merge_lock;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        DependencyRelation local;
        EngineStats local_stats;
        for (auto t = next++; t < tasks.size(); t = next++) {
            const auto& task = tasks[t];
            if (task.target == 0) {
                for (const Variable u : dres_of_existential(f, task.source, &local_stats)) {
                    local.insert(task.source, u);
                }
            } else if (dres_contains(f, task.source, task.target, false, &local_stats).dependent) {
                local.insert(task.source, task.target);
            }
        }
        const std::lock_guard guard(merge_lock);
        relation.insert(local);
        if (stats != nullptr) {
            stats->merge(local_stats);
        }
    };

    const auto threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
    if (threads == 1) {
        worker();
        return relation;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) {
        pool.emplace_back(worker);
    }
    for (auto& t : pool) {
        t.join();
    }
    return relation;
}

DependencyRelation dtriv_full(const QcnfFormula& f)
{
    DependencyRelation relation;
    const auto& prefix = f.prefix();
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (!f.occurs(prefix[i].var)) {
            continue;
        }
        for (std::size_t j = i + 1; j < prefix.size(); ++j) {
            if (f.occurs(prefix[j].var) && f.block_index(prefix[i].var) != f.block_index(prefix[j].var)) {
                relation.insert(prefix[i].var, prefix[j].var);
            }
        }
    }
    return relation;
}

} // namespace rpdep
