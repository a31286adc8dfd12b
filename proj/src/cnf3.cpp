#include "rpdep/cnf3.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

#include "rpdep/qdimacs.hpp"

namespace rpdep {

namespace {

template <typename IsFresh>
ResolutionPath collapse(const std::vector<std::size_t>& provenance, IsFresh is_fresh, const ResolutionPath& path)
{
    ResolutionPath out;
    std::size_t i = 0;
    while (i < path.steps.size()) {
        const auto entry = path.steps[i].entry;
        const auto clause = provenance[path.steps[i].clause];
        while (is_fresh(path.steps[i].exit.var())) {
            ++i;
            if (i == path.steps.size()) {
                throw std::invalid_argument("path ends on a fresh variable");
            }
        }
        out.steps.push_back({entry, clause, path.steps[i].exit});
        ++i;
    }
    return out;
}

} // namespace

TernarySplit split_to_ternary(const QcnfFormula& f)
{
    TernarySplit split;
    split.first_fresh = f.max_var() + 1;

    std::size_t fresh = 0;
    std::size_t produced = 0;
    for (const auto& c : f.clauses()) {
        if (c.size() > 3) {
            fresh += c.size() - 3;
            produced += c.size() - 2;
        } else {
            ++produced;
        }
    }
    split.fresh_count = fresh;

    std::vector<Clause> clauses;
    clauses.reserve(produced);
    split.provenance.reserve(produced);
    auto next = split.first_fresh;
    for (std::size_t ci = 0; ci < f.clauses().size(); ++ci) {
        const auto& c = f.clauses()[ci];
        if (c.size() <= 3) {
            clauses.push_back(c);
            split.provenance.push_back(ci);
            continue;
        }
        clauses.push_back({c[0], c[1], pos(next)});
        split.provenance.push_back(ci);
        std::size_t k = 2;
        // Remaining piece is (-z, c[k], ..., c[n-1]); split while it is wider than 3.
        while (c.size() - k + 1 > 3) {
            clauses.push_back({neg(next), c[k], pos(next + 1)});
            split.provenance.push_back(ci);
            ++next;
            ++k;
        }
        Clause tail{neg(next)};
        tail.insert(tail.end(), c.begin() + static_cast<std::ptrdiff_t>(k), c.end());
        clauses.push_back(std::move(tail));
        split.provenance.push_back(ci);
        ++next;
    }

    std::vector<PrefixEntry> prefix;
    prefix.reserve(f.num_vars() + fresh);
    for (std::size_t i = 0; i < fresh; ++i) {
        prefix.push_back({static_cast<Variable>(split.first_fresh + i), Quantifier::Exists});
    }
    prefix.insert(prefix.end(), f.prefix().begin(), f.prefix().end());
    split.formula = QcnfFormula(std::move(prefix), std::move(clauses));
    return split;
}

TransformResult to_q3cnf(const QcnfFormula& f, const VariableSet& x)
{
    for (const Variable v : x) {
        if (!f.in_prefix(v)) {
            throw std::invalid_argument("connecting set contains unknown variable " + std::to_string(v));
        }
        if (!f.is_existential(v)) {
            throw std::invalid_argument("connecting set contains universal variable " + std::to_string(v));
        }
    }
    auto split = split_to_ternary(f);
    TransformResult result;
    result.first_fresh = split.first_fresh;
    result.connection_set = x;
    for (std::size_t i = 0; i < split.fresh_count; ++i) {
        const auto z = static_cast<Variable>(split.first_fresh + i);
        result.fresh_variables.insert(result.fresh_variables.end(), z);
        result.connection_set.insert(result.connection_set.end(), z);
    }
    result.formula = std::move(split.formula);
    result.provenance = std::move(split.provenance);
    return result;
}

ResolutionPath map_path_back(const QcnfFormula& original, const TransformResult& result, const ResolutionPath& path)
{
    std::string why;
    if (!is_resolution_path(result.formula, result.connection_set, path, &why)) {
        throw std::invalid_argument("not a resolution path of the split formula: " + why);
    }
    if (result.is_fresh(path.from().var()) || result.is_fresh(path.to().var())) {
        throw std::invalid_argument("path endpoints must be literals of the original formula");
    }
    const auto mapped =
        collapse(result.provenance, [&](Variable v) { return result.is_fresh(v); }, path);

    VariableSet x;
    for (const Variable v : result.connection_set) {
        if (!result.is_fresh(v)) {
            x.insert(v);
        }
    }
    if (!is_resolution_path(original, x, mapped, &why)) {
        throw std::logic_error("collapsed path is invalid in the original formula: " + why);
    }
    return mapped;
}

ResolutionPath collapse_fresh_links(const TernarySplit& split, const ResolutionPath& path)
{
    return collapse(split.provenance, [&](Variable v) { return split.is_fresh(v); }, path);
}

void write_transform_qdimacs(std::ostream& out, const TransformResult& result)
{
    for (std::size_t i = 0; i < result.provenance.size(); ++i) {
        out << "c provenance " << i + 1 << ' ' << result.provenance[i] + 1 << '\n';
    }
    write_qdimacs(out, result.formula);
}

} // namespace rpdep
