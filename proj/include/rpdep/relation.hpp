#ifndef RPDEP_RELATION_HPP_
#define RPDEP_RELATION_HPP_

#include <cstddef>
#include <iosfwd>
#include <set>
#include <utility>
#include <vector>

#include "rpdep/formula.hpp"

namespace rpdep {

using VariablePair = std::pair<Variable, Variable>;

/// A set of ordered variable pairs, the output of a dependency scheme.
class DependencyRelation
{
public:
    using const_iterator = std::set<VariablePair>::const_iterator;

    DependencyRelation() = default;
    DependencyRelation(std::initializer_list<VariablePair> pairs) : pairs_(pairs) {}

    void insert(Variable x, Variable y) { pairs_.emplace(x, y); }
    void insert(const DependencyRelation& other) { pairs_.insert(other.begin(), other.end()); }
    bool contains(Variable x, Variable y) const { return pairs_.contains({x, y}); }

    std::size_t size() const noexcept { return pairs_.size(); }
    bool empty() const noexcept { return pairs_.empty(); }
    const_iterator begin() const noexcept { return pairs_.begin(); }
    const_iterator end() const noexcept { return pairs_.end(); }

    /// R(x) = { y : (x,y) in R }.
    VariableSet successors(Variable x) const;
    bool is_subset_of(const DependencyRelation& other) const;
    /// Pairs of this relation missing from `other`.
    DependencyRelation minus(const DependencyRelation& other) const;

    /// Every pair (x,y) satisfies depth(x) < depth(y) in f.
    bool within(const QcnfFormula& f) const;

    /// Pairs sorted by (depth(x), depth(y)) in f.
    std::vector<VariablePair> ordered(const QcnfFormula& f) const;

    bool operator==(const DependencyRelation&) const = default;

private:
    std::set<VariablePair> pairs_;
};

/// R_F: every pair (x,y) with x left of y in the prefix.
DependencyRelation prefix_order(const QcnfFormula& f);

/// Reflexive-transitive closure image R*(X).
VariableSet closure(const DependencyRelation& r, const VariableSet& x);

/// One `x y` line per pair, ascending (depth(x), depth(y)).
void write_relation_text(std::ostream& out, const DependencyRelation& r, const QcnfFormula& f);

} // namespace rpdep

#endif
