#include <doctest.h>

#include "rpdep/oracles.hpp"
#include "rpdep/qdimacs.hpp"
#include "rpdep/resdep.hpp"
#include "support/generators.hpp"

using namespace rpdep;
using rpdep::testing::Rng;

namespace {

QcnfFormula instance(const std::string& file)
{
    return parse_qdimacs_file(std::string(RPDEP_INSTANCE_DIR) + "/" + file).formula;
}

bool oracle_connected(const QcnfFormula& f, const VariableSet& x, Literal a, Literal b)
{
    return resolution_path_exists(f, x, a, b, complete_path_length(f));
}

bool oracle_pair(const QcnfFormula& f, const VariableSet& x, Variable a, Variable b)
{
    if (!f.occurs(a) || !f.occurs(b)) {
        return false;
    }
    auto c = [&](Literal l1, Literal l2) { return f.occurs(l1) && f.occurs(l2) && oracle_connected(f, x, l1, l2); };
    return (c(pos(a), pos(b)) && c(neg(a), neg(b))) || (c(pos(a), neg(b)) && c(neg(a), pos(b)));
}

/// The resolution-path relation computed pair by pair with the path search oracle.
DependencyRelation oracle_dres(const QcnfFormula& f)
{
    DependencyRelation r;
    for (const auto& [x, y] : prefix_order(f)) {
        if (f.quantifier(x) == f.quantifier(y)) {
            continue;
        }
        VariableSet connect;
        for (const Variable v : f.right_of(x)) {
            if (v != y && f.is_existential(v)) {
                connect.insert(v);
            }
        }
        if (oracle_pair(f, connect, x, y)) {
            r.insert(x, y);
        }
    }
    return r;
}

VariableSet random_subset(Rng& rng, const std::vector<Variable>& vars)
{
    VariableSet s;
    for (const Variable v : vars) {
        if (testing::coin(rng)) {
            s.insert(v);
        }
    }
    return s;
}

} // namespace

TEST_CASE("connectedness in the wide-clause formula")
{
    const auto f = instance("wide_clause.qdimacs");
    const auto r = resolution_connected(f, {1}, pos(3), pos(4), true);
    CHECK(r.connected);
    REQUIRE(r.witness);
    CHECK(is_resolution_path(f, {1}, *r.witness));
    CHECK(r.witness->from() == pos(3));
    CHECK(r.witness->to() == pos(4));
    // x1 reaches y3 in both polarities through y1.
    CHECK(resolution_connected(f, {1}, pos(3), neg(4)).connected);
    CHECK_FALSE(resolution_connected(f, {}, pos(3), pos(4)).connected);
    CHECK_FALSE(resolution_connected(f, {1}, pos(3), pos(4)).witness);
}

TEST_CASE("dependency pairs in the wide-clause formula")
{
    const auto f = instance("wide_clause.qdimacs");
    CHECK_FALSE(is_dependency_pair(f, {}, 3, 4));
    CHECK_FALSE(is_dependency_pair(f, {1}, 3, 4));
    CHECK(dres_full(f) == DependencyRelation{{1, 3}, {2, 3}});
    CHECK_FALSE(dres_contains(f, 3, 4).dependent);
}

TEST_CASE("the long chain has a long witness pair")
{
    const auto f = instance("long_chain.qdimacs");
    const auto q = dres_contains(f, 1, 2, true);
    CHECK(q.dependent);
    REQUIRE(q.witness_pair);
    const VariableSet x{3, 5, 6};
    CHECK(is_resolution_path(f, x, q.witness_pair->first));
    CHECK(is_resolution_path(f, x, q.witness_pair->second));
    CHECK(to_string(q.witness_pair->first) == "1,C1,5,-5,C2,3,-3,C3,6,-6,C4,2");
    CHECK(to_string(q.witness_pair->second) == "-1,C5,-2");
    CHECK(dres_full(f) == oracle_dres(f));
}

TEST_CASE("resolution-path pair that is not a matrix dependency")
{
    const auto f = instance("strict_containment.qdimacs");
    CHECK(dres_contains(f, 2, 3).dependent);
    CHECK_FALSE(dres_contains(f, 1, 3).dependent);
    CHECK(dres_full(f) == DependencyRelation{{2, 3}});
    CHECK_FALSE(dmat_contains(f, 2, 3));
}

TEST_CASE("two-variable formula")
{
    const auto f = instance("two_variable.qdimacs");
    CHECK(dres_full(f) == DependencyRelation{{1, 2}});
    CHECK(dtriv_full(f) == DependencyRelation{{1, 2}});
    CHECK(dres_of_existential(f, 2).empty());
}

TEST_CASE("query preconditions")
{
    const auto f = instance("wide_clause.qdimacs");
    CHECK_THROWS_AS(resolution_connected(f, {}, pos(3), pos(3)), std::invalid_argument);
    CHECK_THROWS_AS(resolution_connected(f, {3}, pos(1), pos(4)), std::invalid_argument);
    CHECK_THROWS_AS(resolution_connected(f, {9}, pos(1), pos(4)), std::invalid_argument);
    const auto unused = parse_qdimacs("p cnf 3 1\ne 1 2 3 0\n1 2 0\n").formula;
    CHECK_THROWS_AS(resolution_connected(unused, {}, neg(3), pos(1)), std::invalid_argument);
    // lit(F) holds both polarities of an occurring variable, even the absent -x2.
    CHECK_FALSE(resolution_connected(f, {}, neg(5), pos(4)).connected);
    CHECK_THROWS_AS(is_dependency_pair(f, {}, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(dres_contains(f, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(dres_contains(f, 3, 42), std::out_of_range);
    // Wrong order and equal quantifiers are simply not in the relation.
    CHECK_FALSE(dres_contains(f, 3, 1).dependent);
    CHECK_FALSE(dres_contains(f, 1, 2).dependent);
    CHECK_THROWS_AS(dres_of_existential(f, 3), std::invalid_argument);
}

TEST_CASE("unused variables get no pairs")
{
    const auto f = parse_qdimacs("p cnf 3 1\na 1 2 0\ne 3 0\n1 3 0\n").formula;
    CHECK(dres_full(f).empty());
    CHECK(dtriv_full(f) == DependencyRelation{{1, 3}});
}

TEST_CASE("engine statistics")
{
    EngineStats stats;
    const auto f = instance("long_chain.qdimacs");
    dres_full(f, 1, &stats);
    CHECK(stats.walks > 0);
    CHECK(stats.vertices > 0);
    CHECK(stats.push_bound_held);
}

TEST_CASE("property: connectedness agrees with the path oracle, is symmetric and monotone")
{
    Rng rng(71);
    std::size_t positives = 0;
    for (int round = 0; round < 400; ++round) {
        const auto f = testing::random_formula(rng, {1, 6, 6, 5});
        const auto exist = f.existentials();
        const auto small = random_subset(rng, exist);
        auto large = small;
        for (const Variable v : random_subset(rng, exist)) {
            large.insert(v);
        }
        const auto lits = f.literals();
        for (const Literal a : lits) {
            for (const Literal b : lits) {
                if (a == b) {
                    continue;
                }
                const auto r = resolution_connected(f, small, a, b, true);
                REQUIRE(r.connected == oracle_connected(f, small, a, b));
                CHECK(r.connected == resolution_connected(f, small, b, a).connected);
                if (r.connected) {
                    ++positives;
                    REQUIRE(r.witness);
                    CHECK(is_resolution_path(f, small, *r.witness));
                    CHECK(r.witness->from() == a);
                    CHECK(r.witness->to() == b);
                    CHECK(resolution_connected(f, large, a, b).connected);
                }
            }
        }
    }
    CHECK(positives > 500);
}

TEST_CASE("property: dependency relation equals the pairwise definition")
{
    Rng rng(72);
    std::size_t nonempty = 0;
    for (int round = 0; round < 600; ++round) {
        const auto f = testing::random_formula(rng, {2, 7, 7, 4});
        const auto expected = oracle_dres(f);
        const auto full = dres_full(f);
        REQUIRE(full == expected);
        nonempty += !full.empty();
        CHECK(dres_full(f, 4) == full);
        CHECK(full.within(f));

        for (const auto& [x, y] : prefix_order(f)) {
            const auto q = dres_contains(f, x, y, true);
            CHECK(q.dependent == full.contains(x, y));
            if (q.dependent) {
                REQUIRE(q.witness_pair);
                VariableSet connect;
                for (const Variable v : f.right_of(x)) {
                    if (v != y && f.is_existential(v)) {
                        connect.insert(v);
                    }
                }
                CHECK(is_resolution_path(f, connect, q.witness_pair->first));
                CHECK(is_resolution_path(f, connect, q.witness_pair->second));
            }
        }
        for (const Variable y : f.existentials()) {
            VariableSet universals;
            for (const auto& [e, u] : full) {
                if (e == y) {
                    universals.insert(u);
                }
            }
            CHECK(dres_of_existential(f, y) == universals);
        }
    }
    CHECK(nonempty > 100);
}

TEST_CASE("property: matrix, resolution-path and trivial relations are nested")
{
    Rng rng(73);
    for (int round = 0; round < 300; ++round) {
        const auto f = testing::random_formula(rng, {2, 6, 6, 4});
        const auto triv = dtriv_full(f);
        const auto res = dres_full(f);
        CHECK(dmat_full(f).is_subset_of(res));
        CHECK(res.is_subset_of(triv));
        for (const auto& [x, y] : prefix_order(f)) {
            const bool expected = f.block_index(x) != f.block_index(y) && f.occurs(x) && f.occurs(y);
            CHECK(triv.contains(x, y) == expected);
        }
    }
}

TEST_CASE("property: results do not depend on the thread count")
{
    Rng rng(74);
    for (int round = 0; round < 50; ++round) {
        const auto f = testing::random_formula(rng, {10, 40, 60, 5});
        const auto one = dres_full(f, 1);
        for (const unsigned jobs : {2u, 3u, 8u}) {
            CHECK(dres_full(f, jobs) == one);
        }
    }
}
