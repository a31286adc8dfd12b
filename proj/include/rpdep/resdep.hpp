#ifndef RPDEP_RESDEP_HPP_
#define RPDEP_RESDEP_HPP_

#include <chrono>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rpdep/cnf3.hpp"
#include "rpdep/formula.hpp"
#include "rpdep/pec_graph.hpp"
#include "rpdep/relation.hpp"
#include "rpdep/resolution_path.hpp"

namespace rpdep {

/// Accumulated engine counters. Durations add up over every index built or walk run.
struct EngineStats
{
    std::chrono::nanoseconds transform{0};
    std::chrono::nanoseconds graph{0};
    std::chrono::nanoseconds walk{0};
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t pushes = 0;
    std::size_t walks = 0;
    /// False once any walk pushed more than twice the edge count of its graph.
    bool push_bound_held = true;

    void merge(const EngineStats& other);
};

/**
 * \brief Split formula plus connection graph for one connecting set.
 *
 * Builds the ternary split of f, marks X and the fresh variables as
 * connecting, and builds the two-colored literal graph once. Every walk
 * from a literal then answers connectedness to all other literals.
 */
class ConnectionIndex
{
public:
    /// connect[v] marks v as a connecting variable; the caller guarantees they are existential.
    ConnectionIndex(const QcnfFormula& f, const std::vector<bool>& connect, EngineStats* stats = nullptr);

    /// Labeling of all walks leaving `from` over a blue edge. Requires from in lit(F).
    ColorLabeling walk_from(Literal from) const;

    /// Whether the walk source reaches `to` with a blue last edge; `to` must differ from the source.
    bool connected(const ColorLabeling& labeling, Literal to) const;

    /// Resolution path of the original formula from the labeling source to `to`, revalidated.
    ResolutionPath witness(const ColorLabeling& labeling, Literal to) const;

    const TernarySplit& split() const noexcept { return split_; }
    const ColoredGraph& graph() const noexcept { return graph_; }

private:
    const QcnfFormula& f_;
    std::vector<bool> connect_;
    TernarySplit split_;
    ColoredGraph graph_;
    std::vector<std::size_t> occ_offsets_;
    std::vector<std::uint32_t> occ_clauses_;
    EngineStats* stats_;
};

struct ConnectionResult
{
    bool connected = false;
    std::optional<ResolutionPath> witness;
};

/**
 * Whether l1 and l2 are resolution connected in f with respect to X.
 * Throws std::invalid_argument if l1 == l2, if X has a universal or unknown
 * variable, or if either literal is not in lit(F).
 */
ConnectionResult resolution_connected(const QcnfFormula& f, const VariableSet& x, Literal l1, Literal l2,
                                      bool want_witness = false);

/// (x~y and -x~-y) or (x~-y and -x~y) with respect to X. False if x or y does not occur.
bool is_dependency_pair(const QcnfFormula& f, const VariableSet& x, Variable a, Variable b);

struct DependencyQueryResult
{
    bool dependent = false;
    /// Paths x..y and -x..-y, or x..-y and -x..y, in the original formula.
    std::optional<std::pair<ResolutionPath, ResolutionPath>> witness_pair;
};

/// Membership of (x, y) in D^res. Throws std::out_of_range for an unknown variable, std::invalid_argument if x == y.
DependencyQueryResult dres_contains(const QcnfFormula& f, Variable x, Variable y, bool want_witness = false,
                                    EngineStats* stats = nullptr);

/// Universals x right of the existential y with (y, x) in D^res, from two walks on one graph.
VariableSet dres_of_existential(const QcnfFormula& f, Variable y, EngineStats* stats = nullptr);

/// Whole D^res. jobs > 1 spreads the per-variable subqueries over threads; the result does not depend on it.
DependencyRelation dres_full(const QcnfFormula& f, unsigned jobs = 1, EngineStats* stats = nullptr);

/// Pairs of R_F whose variables lie in different quantifier blocks. Variables without occurrences are left out.
DependencyRelation dtriv_full(const QcnfFormula& f);

} // namespace rpdep

#endif
