#ifndef RPDEP_EVALUATOR_HPP_
#define RPDEP_EVALUATOR_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rpdep/formula.hpp"

namespace rpdep {

/// Caps on the desk-scale oracles; they refuse larger inputs instead of running unbounded.
struct EvalBudget
{
    std::size_t max_variables = 20;
    std::size_t max_reorderings = 200000;
};

class BudgetExceeded : public std::runtime_error
{
public:
    BudgetExceeded(std::string budget, std::size_t limit, std::size_t required)
        : std::runtime_error(budget + " budget exceeded: need " + std::to_string(required) + ", limit " +
                             std::to_string(limit)),
          budget_(std::move(budget))
    {}

    /// "max_variables" or "max_reorderings".
    const std::string& budget() const noexcept { return budget_; }

private:
    std::string budget_;
};

/**
 * \brief Semantic value of a closed QCNF formula by the recursive min/max definition.
 *
 * Branches on the prefix in order, 0 before 1, and stops a quantifier
 * early once its value is decided. Variables that no longer occur in the
 * restricted matrix are skipped. Exponential; guarded by the budget.
 */
bool evaluate(const QcnfFormula& f, const EvalBudget& budget = {});

/// Same for unnormalized input. Every matrix variable must be bound by the prefix.
bool evaluate(const RawFormula& f, const EvalBudget& budget = {});

/**
 * \brief Truth table of a matrix, for evaluating many reorderings of one formula.
 *
 * Variables are indexed by their position in the prefix given at
 * construction; `value` folds quantifiers from the innermost outwards.
 */
class MatrixTruthTable
{
public:
    MatrixTruthTable(const QcnfFormula& f, const EvalBudget& budget = {});

    /// nu of the formula with this matrix and the given prefix order.
    bool value(const std::vector<PrefixEntry>& prefix) const;

private:
    std::size_t bit_of(Variable v) const;

    std::vector<std::uint64_t> table_;
    std::vector<Variable> variables_;
    std::vector<std::uint32_t> bit_;
};

} // namespace rpdep

#endif
