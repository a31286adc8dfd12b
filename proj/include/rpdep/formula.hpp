#ifndef RPDEP_FORMULA_HPP_
#define RPDEP_FORMULA_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

/**
 * \file formula.hpp
 * \brief Prenex CNF formulas with a quantifier prefix (QCNF).
 */

namespace rpdep {

/// QDIMACS variable index, 1-based.
using Variable = std::uint32_t;

using VariableSet = std::set<Variable>;

enum class Quantifier : std::uint8_t { Exists, Forall };

char quantifier_letter(Quantifier q) noexcept;

/**
 * \brief Signed variable reference.
 *
 * Encoded densely: the positive literal of v has code 2v, the negative
 * literal has code 2v+1, so literal codes index arrays directly.
 */
class Literal
{
public:
    constexpr Literal() noexcept = default;
    constexpr Literal(Variable var, bool positive) noexcept
        : code_(2 * var + (positive ? 0u : 1u))
    {}

    static constexpr Literal from_code(std::uint32_t code) noexcept
    {
        Literal l;
        l.code_ = code;
        return l;
    }

    /// Converts a nonzero DIMACS integer (e.g. -3 for the negation of 3).
    static Literal from_dimacs(std::int64_t value);

    constexpr Variable var() const noexcept { return code_ >> 1; }
    constexpr bool positive() const noexcept { return (code_ & 1u) == 0; }
    constexpr std::uint32_t code() const noexcept { return code_; }
    constexpr Literal operator~() const noexcept { return from_code(code_ ^ 1u); }

    std::int64_t to_dimacs() const noexcept
    {
        return positive() ? static_cast<std::int64_t>(var()) : -static_cast<std::int64_t>(var());
    }

    constexpr auto operator<=>(const Literal&) const noexcept = default;

private:
    std::uint32_t code_ = 0;
};

constexpr Literal pos(Variable v) noexcept { return Literal(v, true); }
constexpr Literal neg(Variable v) noexcept { return Literal(v, false); }

/// Literals in stored (input) order.
using Clause = std::vector<Literal>;

struct PrefixEntry
{
    Variable var;
    Quantifier quantifier;

    bool operator==(const PrefixEntry&) const = default;
};

struct QuantifierBlock
{
    Quantifier quantifier;
    std::vector<Variable> variables;

    bool operator==(const QuantifierBlock&) const = default;
};

/**
 * \brief Unchecked prefix and matrix, as read from input.
 *
 * May contain tautologies, repeated literals, unbound variables and prefix
 * variables that never occur. `normalize` turns it into a QcnfFormula.
 */
struct RawFormula
{
    std::vector<PrefixEntry> prefix;
    std::vector<Clause> clauses;
};

/**
 * \brief A normalized QCNF formula. Immutable after construction.
 *
 * Invariants checked by the constructor: prefix variables are positive and
 * pairwise distinct, every matrix variable is bound by the prefix, and no
 * clause repeats a literal or contains a complementary pair. Clause order is
 * preserved; the clause ordinal is its identity.
 */
class QcnfFormula
{
public:
    QcnfFormula() = default;
    QcnfFormula(std::vector<PrefixEntry> prefix, std::vector<Clause> clauses);

    const std::vector<PrefixEntry>& prefix() const noexcept { return prefix_; }
    const std::vector<Clause>& clauses() const noexcept { return clauses_; }

    /// Sum of clause lengths.
    std::size_t size() const noexcept { return size_; }
    std::size_t num_vars() const noexcept { return prefix_.size(); }
    /// Largest variable index in the prefix (0 for an empty prefix).
    Variable max_var() const noexcept { return max_var_; }
    /// Exclusive upper bound on literal codes of this formula.
    std::size_t literal_code_bound() const noexcept { return 2 * (static_cast<std::size_t>(max_var_) + 1); }

    bool in_prefix(Variable v) const noexcept { return v < depth_.size() && depth_[v] != 0; }
    /// True iff v occurs (in either polarity) in some clause.
    bool occurs(Variable v) const noexcept { return v < occurs_.size() && occurs_[v] != 0; }
    /// Membership in lit(F): both polarities of every occurring variable.
    bool occurs(Literal l) const noexcept;

    /// 1-based position in the prefix. Throws std::out_of_range for unknown variables.
    std::size_t depth(Variable v) const;
    Quantifier quantifier(Variable v) const;
    bool is_existential(Variable v) const { return quantifier(v) == Quantifier::Exists; }
    bool is_universal(Variable v) const { return quantifier(v) == Quantifier::Forall; }
    /// Index into blocks() of the block holding v.
    std::size_t block_index(Variable v) const;

    /// Variables strictly to the right of v in the prefix, in prefix order.
    std::vector<Variable> right_of(Variable v) const;
    std::vector<QuantifierBlock> blocks() const;

    /// Prefix variables in prefix order.
    std::vector<Variable> variables() const;
    std::vector<Variable> existentials() const;
    std::vector<Variable> universals() const;
    /// Both polarities of every occurring variable, ascending by code.
    std::vector<Literal> literals() const;

    bool is_ternary() const noexcept;

    bool operator==(const QcnfFormula& other) const
    {
        return prefix_ == other.prefix_ && clauses_ == other.clauses_;
    }

private:
    std::vector<PrefixEntry> prefix_;
    std::vector<Clause> clauses_;
    std::vector<std::uint32_t> depth_;
    std::vector<std::uint32_t> block_;
    std::vector<std::uint8_t> occurs_;
    std::size_t size_ = 0;
    Variable max_var_ = 0;
};

struct NormalizeDiagnostics
{
    std::size_t tautological_clauses = 0;
    std::size_t duplicate_literals = 0;
    std::size_t duplicate_quantifications = 0;
    /// Matrix variables missing from the prefix; bound existentially outermost.
    std::vector<Variable> free_variables;
    /// Prefix variables that occur in no clause; kept in the prefix.
    std::vector<Variable> unused_variables;
};

struct NormalizedFormula
{
    QcnfFormula formula;
    NormalizeDiagnostics diagnostics;
};

/// Total: never throws for well-formed variable indices (>= 1).
NormalizedFormula normalize(const RawFormula& raw);

/// Truth values by variable.
using Assignment = std::map<Variable, bool>;

/**
 * Removes satisfied clauses and falsified literals, and drops the assigned
 * variables from the prefix. Throws std::invalid_argument when the
 * assignment mentions a variable outside the prefix.
 */
QcnfFormula restrict(const QcnfFormula& f, const Assignment& tau);

/**
 * Moves X to the rightmost |X| prefix positions, keeping the relative order
 * inside X and inside its complement. The matrix is unchanged.
 */
QcnfFormula shift_down(const QcnfFormula& f, const VariableSet& x);

/// Same matrix, prefix in the given order (which must be a permutation of the prefix variables).
QcnfFormula reorder(const QcnfFormula& f, const std::vector<Variable>& order);

/// Exchanges the prefix entries at 0-based positions r and r+1.
QcnfFormula transpose_adjacent(const QcnfFormula& f, std::size_t r);

std::string to_string(Literal l);

} // namespace rpdep

#endif
