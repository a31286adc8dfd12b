#include "rpdep/relation.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <ostream>

namespace rpdep {

VariableSet DependencyRelation::successors(Variable x) const
{
    VariableSet result;
    for (auto it = pairs_.lower_bound({x, 0}); it != pairs_.end() && it->first == x; ++it) {
        result.insert(it->second);
    }
    return result;
}

bool DependencyRelation::is_subset_of(const DependencyRelation& other) const
{
    return std::includes(other.pairs_.begin(), other.pairs_.end(), pairs_.begin(), pairs_.end());
}

DependencyRelation DependencyRelation::minus(const DependencyRelation& other) const
{
    DependencyRelation result;
    std::set_difference(pairs_.begin(), pairs_.end(), other.pairs_.begin(), other.pairs_.end(),
                        std::inserter(result.pairs_, result.pairs_.end()));
    return result;
}

bool DependencyRelation::within(const QcnfFormula& f) const
{
    return std::all_of(pairs_.begin(), pairs_.end(), [&](const VariablePair& p) {
        return f.in_prefix(p.first) && f.in_prefix(p.second) && f.depth(p.first) < f.depth(p.second);
    });
}

std::vector<VariablePair> DependencyRelation::ordered(const QcnfFormula& f) const
{
    std::vector<VariablePair> result(pairs_.begin(), pairs_.end());
    std::sort(result.begin(), result.end(), [&](const VariablePair& a, const VariablePair& b) {
        return std::pair(f.depth(a.first), f.depth(a.second)) < std::pair(f.depth(b.first), f.depth(b.second));
    });
    return result;
}

DependencyRelation prefix_order(const QcnfFormula& f)
{
    DependencyRelation r;
    const auto& prefix = f.prefix();
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        for (std::size_t j = i + 1; j < prefix.size(); ++j) {
            r.insert(prefix[i].var, prefix[j].var);
        }
    }
    return r;
}

VariableSet closure(const DependencyRelation& r, const VariableSet& x)
{
    std::map<Variable, std::vector<Variable>> adjacency;
    for (const auto& [a, b] : r) {
        adjacency[a].push_back(b);
    }
    VariableSet reached = x;
    std::vector<Variable> stack(x.begin(), x.end());
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        const auto it = adjacency.find(v);
        if (it == adjacency.end()) {
            continue;
        }
        for (const Variable w : it->second) {
            if (reached.insert(w).second) {
                stack.push_back(w);
            }
        }
    }
    return reached;
}

void write_relation_text(std::ostream& out, const DependencyRelation& r, const QcnfFormula& f)
{
    for (const auto& [x, y] : r.ordered(f)) {
        out << x << ' ' << y << '\n';
    }
}

} // namespace rpdep
