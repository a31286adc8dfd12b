#include "rpdep/formula.hpp"

#include <algorithm>
#include <stdexcept>

namespace rpdep {

namespace {

constexpr std::int64_t kMaxVariable = (std::int64_t{1} << 30);

std::string var_name(Variable v)
{
    return "variable " + std::to_string(v);
}

} // namespace

char quantifier_letter(Quantifier q) noexcept
{
    return q == Quantifier::Exists ? 'e' : 'a';
}

Literal Literal::from_dimacs(std::int64_t value)
{
    if (value == 0 || value >= kMaxVariable || value <= -kMaxVariable) {
        throw std::invalid_argument("literal out of range: " + std::to_string(value));
    }
    return value > 0 ? pos(static_cast<Variable>(value)) : neg(static_cast<Variable>(-value));
}

std::string to_string(Literal l)
{
    return std::to_string(l.to_dimacs());
}

QcnfFormula::QcnfFormula(std::vector<PrefixEntry> prefix, std::vector<Clause> clauses)
    : prefix_(std::move(prefix)), clauses_(std::move(clauses))
{
    for (const auto& entry : prefix_) {
        if (entry.var == 0 || entry.var >= kMaxVariable) {
            throw std::invalid_argument("invalid prefix variable " + std::to_string(entry.var));
        }
        max_var_ = std::max(max_var_, entry.var);
    }

    depth_.assign(static_cast<std::size_t>(max_var_) + 1, 0);
    block_.assign(static_cast<std::size_t>(max_var_) + 1, 0);
    occurs_.assign(static_cast<std::size_t>(max_var_) + 1, 0);

    std::uint32_t block = 0;
    for (std::size_t i = 0; i < prefix_.size(); ++i) {
        const auto v = prefix_[i].var;
        if (depth_[v] != 0) {
            throw std::invalid_argument(var_name(v) + " quantified twice");
        }
        if (i > 0 && prefix_[i].quantifier != prefix_[i - 1].quantifier) {
            ++block;
        }
        depth_[v] = static_cast<std::uint32_t>(i + 1);
        block_[v] = block;
    }

    // Marker per literal code, stamped with the clause ordinal + 1.
    std::vector<std::size_t> seen(literal_code_bound(), 0);
    for (std::size_t ci = 0; ci < clauses_.size(); ++ci) {
        for (const Literal l : clauses_[ci]) {
            if (!in_prefix(l.var())) {
                throw std::invalid_argument(var_name(l.var()) + " in clause " + std::to_string(ci + 1) +
                                            " is not bound by the prefix");
            }
            if (seen[l.code()] == ci + 1) {
                throw std::invalid_argument("clause " + std::to_string(ci + 1) + " repeats literal " +
                                            to_string(l));
            }
            if (seen[(~l).code()] == ci + 1) {
                throw std::invalid_argument("clause " + std::to_string(ci + 1) + " is tautological");
            }
            seen[l.code()] = ci + 1;
            occurs_[l.var()] = 1;
        }
        size_ += clauses_[ci].size();
    }
}

bool QcnfFormula::occurs(Literal l) const noexcept
{
    return occurs(l.var());
}

std::size_t QcnfFormula::depth(Variable v) const
{
    if (!in_prefix(v)) {
        throw std::out_of_range("unknown " + var_name(v));
    }
    return depth_[v];
}

Quantifier QcnfFormula::quantifier(Variable v) const
{
    return prefix_[depth(v) - 1].quantifier;
}

std::size_t QcnfFormula::block_index(Variable v) const
{
    depth(v);
    return block_[v];
}

std::vector<Variable> QcnfFormula::right_of(Variable v) const
{
    std::vector<Variable> result;
    for (std::size_t i = depth(v); i < prefix_.size(); ++i) {
        result.push_back(prefix_[i].var);
    }
    return result;
}

std::vector<QuantifierBlock> QcnfFormula::blocks() const
{
    std::vector<QuantifierBlock> result;
    for (const auto& entry : prefix_) {
        if (result.empty() || result.back().quantifier != entry.quantifier) {
            result.push_back({entry.quantifier, {}});
        }
        result.back().variables.push_back(entry.var);
    }
    return result;
}

std::vector<Variable> QcnfFormula::variables() const
{
    std::vector<Variable> result;
    result.reserve(prefix_.size());
    for (const auto& entry : prefix_) {
        result.push_back(entry.var);
    }
    return result;
}

std::vector<Variable> QcnfFormula::existentials() const
{
    std::vector<Variable> result;
    for (const auto& entry : prefix_) {
        if (entry.quantifier == Quantifier::Exists) {
            result.push_back(entry.var);
        }
    }
    return result;
}

std::vector<Variable> QcnfFormula::universals() const
{
    std::vector<Variable> result;
    for (const auto& entry : prefix_) {
        if (entry.quantifier == Quantifier::Forall) {
            result.push_back(entry.var);
        }
    }
    return result;
}

std::vector<Literal> QcnfFormula::literals() const
{
    std::vector<Literal> result;
    for (Variable v = 1; v <= max_var_; ++v) {
        if (occurs(v)) {
            result.push_back(pos(v));
            result.push_back(neg(v));
        }
    }
    return result;
}

bool QcnfFormula::is_ternary() const noexcept
{
    return std::all_of(clauses_.begin(), clauses_.end(), [](const Clause& c) { return c.size() <= 3; });
}

NormalizedFormula normalize(const RawFormula& raw)
{
    NormalizeDiagnostics diag;

    Variable max_var = 0;
    for (const auto& entry : raw.prefix) {
        max_var = std::max(max_var, entry.var);
    }
    for (const auto& clause : raw.clauses) {
        for (const Literal l : clause) {
            max_var = std::max(max_var, l.var());
        }
    }

    std::vector<std::uint8_t> bound(static_cast<std::size_t>(max_var) + 1, 0);
    std::vector<PrefixEntry> prefix;
    prefix.reserve(raw.prefix.size());
    for (const auto& entry : raw.prefix) {
        if (bound[entry.var]) {
            ++diag.duplicate_quantifications;
            continue;
        }
        bound[entry.var] = 1;
        prefix.push_back(entry);
    }

    std::vector<std::size_t> seen(2 * (static_cast<std::size_t>(max_var) + 1), 0);
    std::vector<std::uint8_t> occurs(static_cast<std::size_t>(max_var) + 1, 0);
    std::vector<Clause> clauses;
    clauses.reserve(raw.clauses.size());
    for (std::size_t ci = 0; ci < raw.clauses.size(); ++ci) {
        const auto stamp = ci + 1;
        Clause clause;
        bool tautological = false;
        for (const Literal l : raw.clauses[ci]) {
            if (seen[l.code()] == stamp) {
                ++diag.duplicate_literals;
                continue;
            }
            if (seen[(~l).code()] == stamp) {
                tautological = true;
            }
            seen[l.code()] = stamp;
            clause.push_back(l);
        }
        if (tautological) {
            ++diag.tautological_clauses;
            continue;
        }
        for (const Literal l : clause) {
            occurs[l.var()] = 1;
        }
        clauses.push_back(std::move(clause));
    }

    for (Variable v = 1; v <= max_var; ++v) {
        if (occurs[v] && !bound[v]) {
            diag.free_variables.push_back(v);
        }
    }
    if (!diag.free_variables.empty()) {
        std::vector<PrefixEntry> bound_prefix;
        bound_prefix.reserve(prefix.size() + diag.free_variables.size());
        for (const Variable v : diag.free_variables) {
            bound_prefix.push_back({v, Quantifier::Exists});
        }
        bound_prefix.insert(bound_prefix.end(), prefix.begin(), prefix.end());
        prefix = std::move(bound_prefix);
    }
    for (const auto& entry : prefix) {
        if (!occurs[entry.var]) {
            diag.unused_variables.push_back(entry.var);
        }
    }

    return {QcnfFormula(std::move(prefix), std::move(clauses)), std::move(diag)};
}

QcnfFormula restrict(const QcnfFormula& f, const Assignment& tau)
{
    // 0 = unassigned, 1 = false, 2 = true
    std::vector<std::uint8_t> value(static_cast<std::size_t>(f.max_var()) + 1, 0);
    for (const auto& [v, b] : tau) {
        if (!f.in_prefix(v)) {
            throw std::invalid_argument("assignment to unknown " + var_name(v));
        }
        value[v] = b ? 2 : 1;
    }

    std::vector<Clause> clauses;
    for (const auto& clause : f.clauses()) {
        Clause reduced;
        bool satisfied = false;
        for (const Literal l : clause) {
            const auto val = value[l.var()];
            if (val == 0) {
                reduced.push_back(l);
            } else if ((val == 2) == l.positive()) {
                satisfied = true;
                break;
            }
        }
        if (!satisfied) {
            clauses.push_back(std::move(reduced));
        }
    }

    std::vector<PrefixEntry> prefix;
    for (const auto& entry : f.prefix()) {
        if (value[entry.var] == 0) {
            prefix.push_back(entry);
        }
    }
    return QcnfFormula(std::move(prefix), std::move(clauses));
}

QcnfFormula shift_down(const QcnfFormula& f, const VariableSet& x)
{
    for (const Variable v : x) {
        if (!f.in_prefix(v)) {
            throw std::invalid_argument("cannot shift unknown " + var_name(v));
        }
    }
    std::vector<PrefixEntry> prefix;
    prefix.reserve(f.num_vars());
    for (const auto& entry : f.prefix()) {
        if (!x.contains(entry.var)) {
            prefix.push_back(entry);
        }
    }
    for (const auto& entry : f.prefix()) {
        if (x.contains(entry.var)) {
            prefix.push_back(entry);
        }
    }
    return QcnfFormula(std::move(prefix), f.clauses());
}

QcnfFormula reorder(const QcnfFormula& f, const std::vector<Variable>& order)
{
    if (order.size() != f.num_vars()) {
        throw std::invalid_argument("reordering must list every prefix variable once");
    }
    std::vector<PrefixEntry> prefix;
    prefix.reserve(order.size());
    for (const Variable v : order) {
        prefix.push_back({v, f.quantifier(v)});
    }
    // The constructor rejects repeated variables.
    return QcnfFormula(std::move(prefix), f.clauses());
}

QcnfFormula transpose_adjacent(const QcnfFormula& f, std::size_t r)
{
    if (r + 1 >= f.num_vars()) {
        throw std::out_of_range("no adjacent prefix pair at position " + std::to_string(r));
    }
    auto prefix = f.prefix();
    std::swap(prefix[r], prefix[r + 1]);
    return QcnfFormula(std::move(prefix), f.clauses());
}

} // namespace rpdep
