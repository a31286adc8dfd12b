#include <doctest.h>

#include <sstream>

#include "rpdep/qdimacs.hpp"
#include "support/generators.hpp"

using namespace rpdep;

namespace {

std::size_t error_line(const std::string& text)
{
    try {
        parse_qdimacs(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

} // namespace

TEST_CASE("comments, merged quantifier lines and multi-line clauses")
{
    const auto p = parse_qdimacs("c hello\np cnf 3 1\ne 1 0\ne 2 0\na 3 0\nc inside\n1 2\n-3 0\n");
    CHECK(p.declared_vars == 3);
    CHECK(p.declared_clauses == 1);
    CHECK(p.formula.blocks().size() == 2);
    REQUIRE(p.formula.clauses().size() == 1);
    CHECK(p.formula.clauses()[0] == Clause{pos(1), pos(2), neg(3)});
}

TEST_CASE("parse errors carry line numbers")
{
    CHECK(error_line("p cnf x 1\n") == 1);
    CHECK(error_line("p dnf 1 1\n") == 1);
    CHECK(error_line("e 1 0\n") == 1);
    CHECK(error_line("1 0\n") == 1);
    CHECK(error_line("p cnf 2 1\np cnf 2 1\n") == 2);
    CHECK(error_line("p cnf 2 1\ne 1 0\n3 0\n") == 3);
    CHECK(error_line("p cnf 2 2\ne 1 0\n1 0\na 2 0\n") == 4);
    CHECK(error_line("p cnf 2 1\ne 1 0\na 1 0\n") == 3);
    CHECK(error_line("p cnf 2 1\ne 1\n") == 2);
    CHECK(error_line("p cnf 2 1\ne 0 0\n") == 2);
    CHECK(error_line("p cnf 2 1\ne 1 0\n1 2\n") == 3);
    CHECK_THROWS_AS(parse_qdimacs_file("/nonexistent/file.qdimacs"), ParseError);
}

TEST_CASE("serialization format")
{
    const auto f = parse_qdimacs("p cnf 3 2\ne 1 2 0\na 3 0\n1 -3 0\n2 0\n").formula;
    CHECK(to_qdimacs(f) == "p cnf 3 2\ne 1 2 0\na 3 0\n1 -3 0\n2 0\n");
    CHECK(formula_digest(f).size() == 16);
}

TEST_CASE("property: serialization round-trips")
{
    testing::Rng rng(5);
    for (int round = 0; round < 500; ++round) {
        const auto f = testing::random_formula(rng, {1, 9, 8, 6});
        const auto text = to_qdimacs(f);
        const auto again = parse_qdimacs(text).formula;
        CHECK(to_qdimacs(again) == text);
        CHECK(formula_digest(again) == formula_digest(f));
    }
}
