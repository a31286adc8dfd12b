#include "rpdep/oracles.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace rpdep {

namespace {

std::size_t saturating_mul(std::size_t a, std::size_t b)
{
    if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
        return std::numeric_limits<std::size_t>::max();
    }
    return a * b;
}

std::size_t saturating_add(std::size_t a, std::size_t b)
{
    return a > std::numeric_limits<std::size_t>::max() - b ? std::numeric_limits<std::size_t>::max() : a + b;
}

std::size_t factorial(std::size_t n)
{
    std::size_t r = 1;
    for (std::size_t i = 2; i <= n; ++i) {
        r = saturating_mul(r, i);
    }
    return r;
}

std::size_t binomial(std::size_t n, std::size_t k)
{
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = saturating_mul(r, n - k + i) / i;
    }
    return r;
}

void require_ordered_pair(const QcnfFormula& f, Variable x, Variable y)
{
    if (f.depth(x) >= f.depth(y)) {
        throw std::invalid_argument("pair (" + std::to_string(x) + "," + std::to_string(y) +
                                    ") is not ordered by the prefix");
    }
}

void require_existential_set(const QcnfFormula& f, const VariableSet& x)
{
    for (const Variable v : x) {
        if (!f.in_prefix(v) || !f.is_existential(v)) {
            throw std::invalid_argument("connecting variable " + std::to_string(v) + " is not existential");
        }
    }
}

/// Clause ordinals containing each literal code, ascending.
std::vector<std::vector<std::size_t>> occurrence_lists(const QcnfFormula& f)
{
    std::vector<std::vector<std::size_t>> occ(f.literal_code_bound());
    for (std::size_t ci = 0; ci < f.clauses().size(); ++ci) {
        for (const Literal l : f.clauses()[ci]) {
            occ[l.code()].push_back(ci);
        }
    }
    return occ;
}

class PathEnumerator
{
public:
    PathEnumerator(const QcnfFormula& f, const VariableSet& x, Literal to, std::size_t max_len,
                   std::size_t max_paths)
        : f_(f), x_(x), to_(to), max_len_(max_len), max_paths_(max_paths), occ_(occurrence_lists(f))
    {}

    void extend(Literal entry)
    {
        if (found_.size() >= max_paths_ || current_.steps.size() >= max_len_) {
            return;
        }
        for (const auto ci : occ_[entry.code()]) {
            for (const Literal exit : f_.clauses()[ci]) {
                if (exit.var() == entry.var()) {
                    continue;
                }
                current_.steps.push_back({entry, ci, exit});
                if (exit == to_) {
                    found_.push_back(current_);
                    if (found_.size() >= max_paths_) {
                        return;
                    }
                }
                if (x_.contains(exit.var())) {
                    extend(~exit);
                }
                current_.steps.pop_back();
                if (found_.size() >= max_paths_) {
                    return;
                }
            }
        }
    }

    std::vector<ResolutionPath> take() { return std::move(found_); }

private:
    const QcnfFormula& f_;
    const VariableSet& x_;
    Literal to_;
    std::size_t max_len_;
    std::size_t max_paths_;
    std::vector<std::vector<std::size_t>> occ_;
    ResolutionPath current_;
    std::vector<ResolutionPath> found_;
};

} // namespace

std::size_t dmat_reordering_count(const QcnfFormula& f, Variable x, Variable y)
{
    require_ordered_pair(f, x, y);
    const std::size_t n = f.num_vars();
    const std::size_t movable = f.right_of(x).size() - 1; // candidates to follow y
    std::size_t total = 0;
    for (std::size_t k = 0; k <= movable; ++k) {
        const auto term = saturating_mul(saturating_mul(binomial(movable, k), factorial(n - 2 - k)), factorial(k));
        total = saturating_add(total, term);
    }
    return total;
}

bool dmat_contains(const QcnfFormula& f, Variable x, Variable y, const EvalBudget& budget)
{
    require_ordered_pair(f, x, y);
    if (f.num_vars() > budget.max_variables) {
        throw BudgetExceeded("max_variables", budget.max_variables, f.num_vars());
    }
    const auto count = dmat_reordering_count(f, x, y);
    if (count > budget.max_reorderings) {
        throw BudgetExceeded("max_reorderings", budget.max_reorderings, count);
    }

    const MatrixTruthTable table(f, budget);
    std::vector<Variable> movable;
    for (const Variable v : f.right_of(x)) {
        if (v != y) {
            movable.push_back(v);
        }
    }
    std::vector<Variable> others;
    for (const Variable v : f.variables()) {
        if (v != x && v != y) {
            others.push_back(v);
        }
    }

    std::vector<PrefixEntry> prefix(f.num_vars());
    const PrefixEntry px{x, f.quantifier(x)};
    const PrefixEntry py{y, f.quantifier(y)};
    for (std::size_t subset = 0; subset < (std::size_t{1} << movable.size()); ++subset) {
        std::vector<Variable> after;
        for (std::size_t i = 0; i < movable.size(); ++i) {
            if ((subset >> i) & 1u) {
                after.push_back(movable[i]);
            }
        }
        std::vector<Variable> before;
        for (const Variable v : others) {
            if (std::find(after.begin(), after.end(), v) == after.end()) {
                before.push_back(v);
            }
        }
        std::sort(before.begin(), before.end());
        do {
            std::sort(after.begin(), after.end());
            do {
                std::size_t pos = 0;
                for (const Variable v : before) {
                    prefix[pos++] = {v, f.quantifier(v)};
                }
                const auto xpos = pos;
                prefix[pos++] = px;
                prefix[pos++] = py;
                for (const Variable v : after) {
                    prefix[pos++] = {v, f.quantifier(v)};
                }
                const bool original = table.value(prefix);
                std::swap(prefix[xpos], prefix[xpos + 1]);
                const bool transposed = table.value(prefix);
                if (original != transposed) {
                    return true;
                }
            } while (std::next_permutation(after.begin(), after.end()));
        } while (std::next_permutation(before.begin(), before.end()));
    }
    return false;
}

DependencyRelation dmat_full(const QcnfFormula& f, const EvalBudget& budget)
{
    DependencyRelation r;
    for (const auto& [x, y] : prefix_order(f)) {
        if (dmat_contains(f, x, y, budget)) {
            r.insert(x, y);
        }
    }
    return r;
}

ProductReachability pec_reachable_oracle(const ColoredGraph& g, std::uint32_t s)
{
    if (s >= g.vertex_count()) {
        throw std::out_of_range("source vertex " + std::to_string(s) + " not in graph");
    }
    // State 2v + c: standing at v, having arrived over an edge of color c.
    const std::size_t states = 2 * g.vertex_count();
    std::vector<std::vector<std::size_t>> successors(states);
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        for (const Color arrived : {Color::Red, Color::Blue}) {
            const auto from = 2 * static_cast<std::size_t>(v) + static_cast<std::size_t>(arrived);
            for (const auto& nb : g.neighbors(v)) {
                if (nb.color != arrived) {
                    successors[from].push_back(2 * static_cast<std::size_t>(nb.vertex) +
                                               static_cast<std::size_t>(nb.color));
                }
            }
        }
    }

    std::vector<std::uint8_t> visited(states, 0);
    std::vector<std::size_t> stack;
    for (const auto& nb : g.neighbors(s)) {
        if (nb.color == Color::Blue) {
            const auto state = 2 * static_cast<std::size_t>(nb.vertex) + static_cast<std::size_t>(Color::Blue);
            if (!visited[state]) {
                visited[state] = 1;
                stack.push_back(state);
            }
        }
    }
    while (!stack.empty()) {
        const auto state = stack.back();
        stack.pop_back();
        for (const auto next : successors[state]) {
            if (!visited[next]) {
                visited[next] = 1;
                stack.push_back(next);
            }
        }
    }

    ProductReachability result;
    result.colors.assign(g.vertex_count(), ColorSet{});
    for (std::size_t state = 0; state < states; ++state) {
        if (visited[state]) {
            result.colors[state / 2].insert(static_cast<Color>(state % 2));
            ++result.states_visited;
        }
    }
    return result;
}

std::vector<ResolutionPath> enumerate_resolution_paths(const QcnfFormula& f, const VariableSet& x, Literal from,
                                                       Literal to, std::size_t max_len, std::size_t max_paths)
{
    require_existential_set(f, x);
    if (from == to) {
        throw std::invalid_argument("resolution paths need distinct end literals");
    }
    if (!f.occurs(from) || !f.occurs(to) || max_paths == 0) {
        return {};
    }
    PathEnumerator search(f, x, to, max_len, max_paths);
    search.extend(from);
    return search.take();
}

bool resolution_path_exists(const QcnfFormula& f, const VariableSet& x, Literal from, Literal to,
                            std::size_t max_len)
{
    require_existential_set(f, x);
    if (from == to) {
        throw std::invalid_argument("resolution paths need distinct end literals");
    }
    if (!f.occurs(from) || !f.occurs(to) || max_len == 0) {
        return false;
    }
    const auto occ = occurrence_lists(f);
    // Breadth-first over entry literals: the first visit has the most length left.
    std::vector<std::size_t> used(f.literal_code_bound(), 0);
    std::deque<Literal> frontier{from};
    used[from.code()] = 1;
    while (!frontier.empty()) {
        const auto entry = frontier.front();
        frontier.pop_front();
        const auto clauses_used = used[entry.code()];
        for (const auto ci : occ[entry.code()]) {
            for (const Literal exit : f.clauses()[ci]) {
                if (exit.var() == entry.var()) {
                    continue;
                }
                if (exit == to) {
                    return true;
                }
                const auto next = ~exit;
                if (x.contains(exit.var()) && clauses_used < max_len && used[next.code()] == 0) {
                    used[next.code()] = clauses_used + 1;
                    frontier.push_back(next);
                }
            }
        }
    }
    return false;
}

std::size_t complete_path_length(const QcnfFormula& f)
{
    return 2 * f.literals().size();
}

std::size_t shortest_path_bound(const VariableSet& x)
{
    return 1 + 2 * x.size();
}

TranspositionReport check_transposition_soundness(const QcnfFormula& f, const DependencyRelation& scheme,
                                                  const EvalBudget& budget)
{
    TranspositionReport report;
    const bool base = evaluate(f, budget);
    const auto& prefix = f.prefix();
    for (std::size_t r = 0; r + 1 < prefix.size(); ++r) {
        const auto x = prefix[r].var;
        const auto y = prefix[r + 1].var;
        if (scheme.contains(x, y)) {
            continue;
        }
        if (evaluate(transpose_adjacent(f, r), budget) != base) {
            report.sound = false;
            report.counterexample = VariablePair{x, y};
            return report;
        }
    }
    return report;
}

bool check_cumulative_shift(const QcnfFormula& f, const DependencyRelation& scheme, const VariableSet& x,
                            const EvalBudget& budget)
{
    const auto shifted = shift_down(f, closure(scheme, x));
    return evaluate(f, budget) == evaluate(shifted, budget);
}

} // namespace rpdep
