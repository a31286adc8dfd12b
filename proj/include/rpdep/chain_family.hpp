#ifndef RPDEP_CHAIN_FAMILY_HPP_
#define RPDEP_CHAIN_FAMILY_HPP_

#include <cstddef>

#include "rpdep/formula.hpp"

namespace rpdep {

/// A generated chain formula and the two variables its dependency hinges on.
struct ChainFormula
{
    QcnfFormula formula;
    Variable source;    ///< outermost existential y
    Variable universal; ///< u, reachable from y only through both chains
};

/**
 * Chain benchmark with |F| close to target_size (at least 20).
 *
 * Prefix: a padding block of existentials, then y, then u, then the chain
 * existentials. Two chains of width-5 clauses lead from y to u and from -y
 * to -u through complementary links, so each walk from y must cross the
 * whole chain with alternating colors. Padding literals keep the clauses
 * wide without creating links, because padding sits left of y.
 */
ChainFormula make_chain_formula(std::size_t target_size);

} // namespace rpdep

#endif
