#include "rpdep/evaluator.hpp"

#include <algorithm>
#include <span>

namespace rpdep {

namespace {

/// Words of a truth table in which bit i of the assignment index is set (i < 6).
constexpr std::uint64_t kBitPattern[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

class Recursion
{
public:
    Recursion(std::span<const PrefixEntry> prefix, std::span<const Clause> clauses, Variable max_var)
        : prefix_(prefix), clauses_(clauses), value_(static_cast<std::size_t>(max_var) + 1, -1),
          live_(static_cast<std::size_t>(max_var) + 1, 0)
    {}

    bool run(std::size_t from)
    {
        // Status of the restricted matrix; live_ marks variables still occurring in it.
        std::fill(live_.begin(), live_.end(), 0);
        bool any_open = false;
        bool any_nonempty_open = false;
        for (const auto& clause : clauses_) {
            bool satisfied = false;
            bool has_unassigned = false;
            for (const Literal l : clause) {
                const auto val = value_[l.var()];
                if (val < 0) {
                    has_unassigned = true;
                } else if ((val == 1) == l.positive()) {
                    satisfied = true;
                    break;
                }
            }
            if (satisfied) {
                continue;
            }
            any_open = true;
            if (has_unassigned) {
                any_nonempty_open = true;
                for (const Literal l : clause) {
                    if (value_[l.var()] < 0) {
                        live_[l.var()] = 1;
                    }
                }
            }
        }
        if (!any_open) {
            return true;
        }
        if (!any_nonempty_open) {
            return false;
        }

        std::size_t next = from;
        while (next < prefix_.size() && !live_[prefix_[next].var]) {
            ++next;
        }
        // Unreachable for closed formulas: an open nonempty clause has a live prefix variable.
        if (next == prefix_.size()) {
            throw std::logic_error("matrix variable not bound by the prefix");
        }

        const auto& entry = prefix_[next];
        const bool exists = entry.quantifier == Quantifier::Exists;
        bool result = false;
        for (const std::int8_t val : {std::int8_t{0}, std::int8_t{1}}) {
            value_[entry.var] = val;
            const bool branch = run(next + 1);
            value_[entry.var] = -1;
            if (exists && branch) {
                return true;
            }
            if (!exists && !branch) {
                return false;
            }
            result = branch;
        }
        return result;
    }

private:
    std::span<const PrefixEntry> prefix_;
    std::span<const Clause> clauses_;
    std::vector<std::int8_t> value_;
    std::vector<std::uint8_t> live_;
};

void check_variable_budget(std::size_t count, const EvalBudget& budget)
{
    if (count > budget.max_variables) {
        throw BudgetExceeded("max_variables", budget.max_variables, count);
    }
}

} // namespace

bool evaluate(const QcnfFormula& f, const EvalBudget& budget)
{
    check_variable_budget(f.num_vars(), budget);
    Recursion rec(f.prefix(), f.clauses(), f.max_var());
    return rec.run(0);
}

bool evaluate(const RawFormula& f, const EvalBudget& budget)
{
    Variable max_var = 0;
    for (const auto& entry : f.prefix) {
        max_var = std::max(max_var, entry.var);
    }
    for (const auto& clause : f.clauses) {
        for (const Literal l : clause) {
            max_var = std::max(max_var, l.var());
        }
    }
    std::vector<std::uint8_t> bound(static_cast<std::size_t>(max_var) + 1, 0);
    for (const auto& entry : f.prefix) {
        if (bound[entry.var]) {
            throw std::invalid_argument("variable " + std::to_string(entry.var) + " quantified twice");
        }
        bound[entry.var] = 1;
    }
    for (const auto& clause : f.clauses) {
        for (const Literal l : clause) {
            if (!bound[l.var()]) {
                throw std::invalid_argument("variable " + std::to_string(l.var()) + " is free");
            }
        }
    }
    check_variable_budget(f.prefix.size(), budget);
    Recursion rec(f.prefix, f.clauses, max_var);
    return rec.run(0);
}

MatrixTruthTable::MatrixTruthTable(const QcnfFormula& f, const EvalBudget& budget)
    : variables_(f.variables()), bit_(static_cast<std::size_t>(f.max_var()) + 1, 0)
{
    check_variable_budget(f.num_vars(), budget);
    const std::size_t n = variables_.size();
    for (std::size_t i = 0; i < n; ++i) {
        bit_[variables_[i]] = static_cast<std::uint32_t>(i);
    }
    const std::size_t words = n <= 6 ? 1 : (std::size_t{1} << (n - 6));
    table_.assign(words, ~std::uint64_t{0});

    std::vector<std::uint64_t> clause_table(words);
    for (const auto& clause : f.clauses()) {
        std::fill(clause_table.begin(), clause_table.end(), 0);
        for (const Literal l : clause) {
            const auto i = bit_[l.var()];
            for (std::size_t w = 0; w < words; ++w) {
                std::uint64_t pattern;
                if (i < 6) {
                    pattern = kBitPattern[i];
                } else {
                    pattern = (w >> (i - 6)) & 1u ? ~std::uint64_t{0} : 0;
                }
                clause_table[w] |= l.positive() ? pattern : ~pattern;
            }
        }
        for (std::size_t w = 0; w < words; ++w) {
            table_[w] &= clause_table[w];
        }
    }
}

std::size_t MatrixTruthTable::bit_of(Variable v) const
{
    if (v >= bit_.size() || std::find(variables_.begin(), variables_.end(), v) == variables_.end()) {
        throw std::invalid_argument("variable " + std::to_string(v) + " not in the truth table");
    }
    return bit_[v];
}

bool MatrixTruthTable::value(const std::vector<PrefixEntry>& prefix) const
{
    if (prefix.size() != variables_.size()) {
        throw std::invalid_argument("prefix does not match the truth table variables");
    }
    auto t = table_;
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
        const auto i = bit_of(it->var);
        const bool exists = it->quantifier == Quantifier::Exists;
        if (i < 6) {
            const auto shift = 1u << i;
            const auto low_mask = ~kBitPattern[i];
            for (auto& word : t) {
                const auto lo = word & low_mask;
                const auto hi = (word >> shift) & low_mask;
                const auto r = exists ? (lo | hi) : (lo & hi);
                word = r | (r << shift);
            }
        } else {
            const std::size_t stride = std::size_t{1} << (i - 6);
            for (std::size_t w = 0; w < t.size(); ++w) {
                if (w & stride) {
                    continue;
                }
                const auto r = exists ? (t[w] | t[w | stride]) : (t[w] & t[w | stride]);
                t[w] = r;
                t[w | stride] = r;
            }
        }
    }
    return (t[0] & 1u) != 0;
}

} // namespace rpdep
