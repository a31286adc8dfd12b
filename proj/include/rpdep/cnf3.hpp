#ifndef RPDEP_CNF3_HPP_
#define RPDEP_CNF3_HPP_

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "rpdep/formula.hpp"
#include "rpdep/resolution_path.hpp"

namespace rpdep {

/// Clause splitting without any connecting-set bookkeeping.
struct TernarySplit
{
    QcnfFormula formula;
    /// provenance[i] is the input clause ordinal that produced clause i.
    std::vector<std::size_t> provenance;
    /// Fresh variables are first_fresh, first_fresh + 1, ..., first_fresh + fresh_count - 1.
    Variable first_fresh = 0;
    std::size_t fresh_count = 0;

    bool is_fresh(Variable v) const noexcept { return v >= first_fresh && v - first_fresh < fresh_count; }
};

/**
 * Splits every clause (l1 .. ln) with n > 3 into (l1 l2 z) and (-z l3 .. ln),
 * repeating on the second piece. Pieces keep input order and stay adjacent.
 * Fresh variables get consecutive ids above max_var and form one outermost
 * existential block in ascending order. Linear in |F|.
 */
TernarySplit split_to_ternary(const QcnfFormula& f);

struct TransformResult
{
    QcnfFormula formula;
    VariableSet connection_set; ///< X together with the fresh variables
    std::vector<std::size_t> provenance;
    VariableSet fresh_variables;
    Variable first_fresh = 0;

    bool is_fresh(Variable v) const noexcept { return fresh_variables.contains(v); }
};

/// Throws std::invalid_argument if X has a universal or unknown variable.
TransformResult to_q3cnf(const QcnfFormula& f, const VariableSet& x);

/**
 * Collapses every fresh link ..., C', z, -z, C'', ... of a path in the split
 * formula into a single step through the originating clause. `original` must
 * be the formula that was split. The input path is validated against the
 * split formula, and the result is validated against `original`.
 * Throws std::invalid_argument on an invalid path or a fresh endpoint.
 */
ResolutionPath map_path_back(const QcnfFormula& original, const TransformResult& result, const ResolutionPath& path);

/// Same collapse for a bare split; no validation, used by the engine after its own checks.
ResolutionPath collapse_fresh_links(const TernarySplit& split, const ResolutionPath& path);

/// QDIMACS text of the split formula preceded by "c provenance <produced> <input>" lines (1-based).
void write_transform_qdimacs(std::ostream& out, const TransformResult& result);

} // namespace rpdep

#endif
