#ifndef RPDEP_ORACLES_HPP_
#define RPDEP_ORACLES_HPP_

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "rpdep/evaluator.hpp"
#include "rpdep/formula.hpp"
#include "rpdep/pec_graph.hpp"
#include "rpdep/relation.hpp"
#include "rpdep/resolution_path.hpp"

/**
 * \file oracles.hpp
 * \brief Brute-force reference implementations used to validate the linear-time engine.
 *
 * Nothing here is meant to be fast; every entry point is bounded by an
 * EvalBudget and throws BudgetExceeded rather than running unbounded.
 */

namespace rpdep {

/// Number of prefix orders dmat_contains enumerates for (x, y).
std::size_t dmat_reordering_count(const QcnfFormula& f, Variable x, Variable y);

/**
 * \brief Membership in the minimal matrix scheme.
 *
 * True iff some reordering F' of the prefix puts x immediately before y,
 * keeps the variables right of x within those right of x in f, and changes
 * its value when x and y are transposed. Requires depth(x) < depth(y).
 */
bool dmat_contains(const QcnfFormula& f, Variable x, Variable y, const EvalBudget& budget = {});

/// All pairs of R_F in the minimal matrix scheme.
DependencyRelation dmat_full(const QcnfFormula& f, const EvalBudget& budget = {});

struct ProductReachability
{
    std::vector<ColorSet> colors;
    std::size_t states_visited = 0;
};

/**
 * Reachability over explicit (vertex, last edge color) states, seeded by the
 * blue edges at s. colors[t] matches the PEC-walk labeling.
 */
ProductReachability pec_reachable_oracle(const ColoredGraph& g, std::uint32_t s);

/**
 * All X-resolution paths from `from` to `to` with at most max_len clause
 * occurrences, found by exhaustive search over the defining conditions.
 * Stops after max_paths results. Paths come out in depth-first order.
 */
std::vector<ResolutionPath> enumerate_resolution_paths(const QcnfFormula& f, const VariableSet& x, Literal from,
                                                       Literal to, std::size_t max_len,
                                                       std::size_t max_paths = std::numeric_limits<std::size_t>::max());

/**
 * Whether enumerate_resolution_paths(f, x, from, to, max_len) is nonempty.
 * The search skips an entry literal already expanded with at least as much
 * remaining length, since the continuations only depend on that literal.
 */
bool resolution_path_exists(const QcnfFormula& f, const VariableSet& x, Literal from, Literal to,
                            std::size_t max_len);

/// 2 |lit(F)|: long enough for completeness of the existence search.
std::size_t complete_path_length(const QcnfFormula& f);

/**
 * 1 + 2|X|: every nonempty path set contains a path of at most this many
 * clauses. Cutting the steps between two equal entry literals leaves a valid
 * path, so a shortest path has distinct entries, and all entries after the
 * first are literals over X.
 */
std::size_t shortest_path_bound(const VariableSet& x);

struct TranspositionReport
{
    bool sound = true;
    /// First adjacent pair (by depth) outside the relation whose exchange changes the value.
    std::optional<VariablePair> counterexample;
};

TranspositionReport check_transposition_soundness(const QcnfFormula& f, const DependencyRelation& scheme,
                                                  const EvalBudget& budget = {});

/// nu(F) == nu(shift_down(F, closure(scheme, X))).
bool check_cumulative_shift(const QcnfFormula& f, const DependencyRelation& scheme, const VariableSet& x,
                            const EvalBudget& budget = {});

} // namespace rpdep

#endif
