#include "rpdep/chain_family.hpp"

#include <algorithm>

namespace rpdep {

namespace {

constexpr Variable kPadding = 64;

} // namespace

ChainFormula make_chain_formula(std::size_t target_size)
{
    // Each chain has links + 1 clauses of width 5; two chains in total.
    const std::size_t links = std::max<std::size_t>(1, target_size / 10) - 1;

    const Variable y = kPadding + 1;
    const Variable u = kPadding + 2;
    const Variable first_e = kPadding + 3;
    const auto first_f = static_cast<Variable>(first_e + links);

    std::vector<PrefixEntry> prefix;
    for (Variable p = 1; p <= kPadding; ++p) {
        prefix.push_back({p, Quantifier::Exists});
    }
    prefix.push_back({y, Quantifier::Exists});
    prefix.push_back({u, Quantifier::Forall});
    for (std::size_t i = 0; i < 2 * links; ++i) {
        prefix.push_back({static_cast<Variable>(first_e + i), Quantifier::Exists});
    }

    std::vector<Clause> clauses;
    clauses.reserve(2 * (links + 1));
    std::size_t cursor = 0;
    auto padded = [&](Literal head, Literal tail) {
        Clause c{head};
        for (int k = 0; k < 3; ++k) {
            const auto p = static_cast<Variable>(cursor % kPadding + 1);
            c.push_back(Literal(p, (cursor / kPadding) % 2 == 0));
            ++cursor;
        }
        c.push_back(tail);
        clauses.push_back(std::move(c));
    };
    auto chain = [&](Literal start, Variable first, Literal end) {
        if (links == 0) {
            padded(start, end);
            return;
        }
        padded(start, pos(first));
        for (std::size_t i = 0; i + 1 < links; ++i) {
            padded(neg(static_cast<Variable>(first + i)), pos(static_cast<Variable>(first + i + 1)));
        }
        padded(neg(static_cast<Variable>(first + links - 1)), end);
    };
    chain(pos(y), first_e, pos(u));
    chain(neg(y), first_f, neg(u));

    return {QcnfFormula(std::move(prefix), std::move(clauses)), y, u};
}

} // namespace rpdep
