#ifndef RPDEP_RESOLUTION_PATH_HPP_
#define RPDEP_RESOLUTION_PATH_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "rpdep/formula.hpp"

namespace rpdep {

/// One clause occurrence ell_i, C_i, ell'_i of a resolution path.
struct PathStep
{
    Literal entry;
    std::size_t clause; ///< 0-based clause ordinal
    Literal exit;

    bool operator==(const PathStep&) const = default;
};

/**
 * \brief Sequence ell_1, C_1, ell'_1, ..., ell_n, C_n, ell'_n.
 *
 * Consecutive steps are linked by complementary literals of connecting
 * variables: entry_{i+1} = ~exit_i.
 */
struct ResolutionPath
{
    std::vector<PathStep> steps;

    Literal from() const { return steps.front().entry; }
    Literal to() const { return steps.back().exit; }
    bool empty() const noexcept { return steps.empty(); }

    bool operator==(const ResolutionPath&) const = default;
};

/**
 * Checks the four defining conditions of an X-resolution path in f.
 * On failure returns false and, if `why` is set, a short reason.
 */
bool is_resolution_path(const QcnfFormula& f, const VariableSet& x, const ResolutionPath& path,
                        std::string* why = nullptr);

/// Renders `1,C1,-2,2,C4,3` with 1-based clause ordinals.
std::string to_string(const ResolutionPath& path);

/// Sequence of clause ordinals (0-based) visited by the path.
std::vector<std::size_t> clause_sequence(const ResolutionPath& path);

} // namespace rpdep

#endif
