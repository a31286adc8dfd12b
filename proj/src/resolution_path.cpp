#include "rpdep/resolution_path.hpp"

#include <algorithm>

namespace rpdep {

namespace {

bool fail(std::string* why, std::string reason)
{
    if (why != nullptr) {
        *why = std::move(reason);
    }
    return false;
}

bool contains(const Clause& c, Literal l)
{
    return std::find(c.begin(), c.end(), l) != c.end();
}

} // namespace

bool is_resolution_path(const QcnfFormula& f, const VariableSet& x, const ResolutionPath& path, std::string* why)
{
    if (path.steps.empty()) {
        return fail(why, "empty path");
    }
    for (std::size_t i = 0; i < path.steps.size(); ++i) {
        const auto& step = path.steps[i];
        const auto label = "step " + std::to_string(i + 1);
        if (step.clause >= f.clauses().size()) {
            return fail(why, label + ": no such clause");
        }
        if (!f.occurs(step.entry) || !f.occurs(step.exit)) {
            return fail(why, label + ": literal not in the formula");
        }
        const auto& clause = f.clauses()[step.clause];
        if (!contains(clause, step.entry) || !contains(clause, step.exit)) {
            return fail(why, label + ": literal not in clause C" + std::to_string(step.clause + 1));
        }
        if (step.entry.var() == step.exit.var()) {
            return fail(why, label + ": enters and leaves on the same variable");
        }
        if (i + 1 < path.steps.size()) {
            const auto next = path.steps[i + 1].entry;
            if (next != ~step.exit) {
                return fail(why, label + ": next step does not start with the complement");
            }
            if (!x.contains(step.exit.var())) {
                return fail(why, label + ": link variable " + std::to_string(step.exit.var()) +
                                     " is not a connecting variable");
            }
        }
    }
    if (path.from() == path.to()) {
        return fail(why, "path starts and ends with the same literal");
    }
    return true;
}

std::string to_string(const ResolutionPath& path)
{
    std::string out;
    for (std::size_t i = 0; i < path.steps.size(); ++i) {
        const auto& step = path.steps[i];
        if (i > 0) {
            out += ',';
        }
        out += to_string(step.entry) + ",C" + std::to_string(step.clause + 1) + "," + to_string(step.exit);
    }
    return out;
}

std::vector<std::size_t> clause_sequence(const ResolutionPath& path)
{
    std::vector<std::size_t> result;
    result.reserve(path.steps.size());
    for (const auto& step : path.steps) {
        result.push_back(step.clause);
    }
    return result;
}

} // namespace rpdep
