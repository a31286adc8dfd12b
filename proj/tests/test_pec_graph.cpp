#include <doctest.h>

#include <set>
#include <sstream>

#include "rpdep/cnf3.hpp"
#include "rpdep/oracles.hpp"
#include "rpdep/pec_graph.hpp"
#include "rpdep/qdimacs.hpp"
#include "support/generators.hpp"
#include "support/walks.hpp"

using namespace rpdep;
using rpdep::testing::Rng;

namespace {

constexpr auto R = Color::Red;
constexpr auto B = Color::Blue;

QcnfFormula wide_clause()
{
    return parse_qdimacs_file(std::string(RPDEP_INSTANCE_DIR) + "/wide_clause.qdimacs").formula;
}

// s=0 u=1 v=2 w=3 t=4
ColoredGraph counterexample_graph()
{
    const std::vector<ColoredEdge> edges{{0, 1, B}, {1, 4, B}, {2, 3, B}, {1, 2, R}, {1, 3, R}};
    return ColoredGraph::from_edges(5, edges);
}

/// Walk check written against the edge list rather than the adjacency lists.
bool valid_walk(const ColoredGraph& g, const std::vector<std::uint32_t>& walk, std::uint32_t s, std::uint32_t t,
                Color last)
{
    std::map<std::pair<std::uint32_t, std::uint32_t>, Color> color;
    for (const auto& e : g.edges()) {
        color[{e.u, e.v}] = e.color;
        color[{e.v, e.u}] = e.color;
    }
    if (walk.size() < 2 || walk.front() != s || walk.back() != t) {
        return false;
    }
    std::vector<Color> colors;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
        const auto it = color.find({walk[i], walk[i + 1]});
        if (it == color.end()) {
            return false;
        }
        colors.push_back(it->second);
    }
    for (std::size_t i = 0; i + 1 < colors.size(); ++i) {
        if (colors[i] == colors[i + 1]) {
            return false;
        }
    }
    return colors.front() == B && colors.back() == last;
}

} // namespace

TEST_CASE("connection graph of the wide-clause formula")
{
    const auto split = to_q3cnf(wide_clause(), {1, 4});
    const auto g = build_connection_graph(split.formula, split.connection_set);
    CHECK(g.vertex_count() == split.formula.literal_code_bound());
    // y1, y3 and the fresh link variable.
    CHECK(g.red_edge_count() == 3);
    CHECK(g.color_between(pos(1).code(), neg(1).code()) == R);
    CHECK(g.color_between(pos(4).code(), neg(4).code()) == R);
    // Clause C2 = (-x1 -y2 -y1).
    CHECK(g.color_between(neg(3).code(), neg(2).code()) == B);
    CHECK(g.color_between(neg(3).code(), neg(1).code()) == B);
    CHECK(g.color_between(neg(2).code(), neg(1).code()) == B);
    CHECK_FALSE(g.color_between(pos(3).code(), pos(4).code()));
}

TEST_CASE("connection graph edge cases")
{
    const auto f = parse_qdimacs("p cnf 3 2\na 1 0\ne 2 3 0\n1 2 -3 0\n2 0\n").formula;
    CHECK(build_connection_graph(f, {}).red_edge_count() == 0);
    CHECK(build_connection_graph(f, {}).edge_count() == 3);
    const auto unit = parse_qdimacs("p cnf 1 1\ne 1 0\n1 0\n").formula;
    CHECK(build_connection_graph(unit, {}).edge_count() == 0);
    CHECK_THROWS_AS(build_connection_graph(wide_clause(), {}), std::invalid_argument);
    CHECK_THROWS_AS(build_connection_graph(f, {1}), std::invalid_argument);
    CHECK_THROWS_AS(build_incidence_graph(f, {1}), std::invalid_argument);
}

TEST_CASE("incidence graph of the wide-clause formula")
{
    const auto f = wide_clause();
    const auto g = build_incidence_graph(f, {1, 4});
    const auto c1 = g.adjacency[g.clause_vertex(0)];
    CHECK(std::set<std::uint32_t>(c1.begin(), c1.end()) ==
          std::set<std::uint32_t>{pos(3).code(), pos(5).code(), pos(2).code(), pos(1).code()});
    const auto& y1 = g.adjacency[pos(1).code()];
    CHECK(std::find(y1.begin(), y1.end(), neg(1).code()) != y1.end());
    CHECK(g.edge_count() == 11 + 2);

    const auto empty = parse_qdimacs("p cnf 2 0\ne 1 2 0\n").formula;
    CHECK(build_incidence_graph(empty, {}).edge_count() == 0);
    CHECK(build_incidence_graph(f, {1}).edge_count() == 11 + 1);
}

TEST_CASE("simple graph invariants are enforced")
{
    const std::vector<ColoredEdge> loop{{1, 1, B}};
    CHECK_THROWS_AS(ColoredGraph::from_edges(2, loop), std::invalid_argument);
    const std::vector<ColoredEdge> mixed{{0, 1, B}, {1, 0, R}};
    CHECK_THROWS_AS(ColoredGraph::from_edges(2, mixed, ColoredGraph::Duplicates::Merge), std::invalid_argument);
    const std::vector<ColoredEdge> twice{{0, 1, B}, {1, 0, B}};
    CHECK_THROWS_AS(ColoredGraph::from_edges(2, twice), std::invalid_argument);
    CHECK(ColoredGraph::from_edges(2, twice, ColoredGraph::Duplicates::Merge).edge_count() == 1);
    const std::vector<ColoredEdge> outside{{0, 5, B}};
    CHECK_THROWS_AS(ColoredGraph::from_edges(2, outside), std::invalid_argument);
}

TEST_CASE("labels on the walk-versus-path graph")
{
    const auto g = counterexample_graph();
    const auto lab = pec_walk(g, 0);
    CHECK(reachable_with_last_color(lab, 4, B));
    CHECK(lab.colors(2) == lab.colors(3));
    CHECK(lab.colors(3).contains(R));
    CHECK(lab.colors(3).contains(B));
    CHECK_THROWS_AS(reachable_with_last_color(lab, 0, B), std::invalid_argument);
    CHECK_THROWS_AS(pec_walk(g, 9), std::out_of_range);

    const auto walk = extract_walk(g, lab, 4, B);
    CHECK(valid_walk(g, walk, 0, 4, B));
    CHECK(walk.size() <= 2 * g.vertex_count() + 1);
    CHECK(walk == std::vector<std::uint32_t>{0, 1, 2, 3, 1, 4});

    // The walk must revisit u; no vertex-simple alternative exists.
    CHECK_FALSE(testing::pec_simple_path_exists(g, 0, 4));
}

TEST_CASE("stars, isolated sources and a forced chain")
{
    const std::vector<ColoredEdge> star{{0, 1, B}, {0, 2, B}, {0, 3, B}};
    const auto g = ColoredGraph::from_edges(4, star);
    const auto lab = pec_walk(g, 0);
    for (std::uint32_t v = 1; v < 4; ++v) {
        CHECK(lab.colors(v).contains(B));
        CHECK_FALSE(lab.colors(v).contains(R));
    }
    CHECK(lab.colors(0).empty());

    const std::vector<ColoredEdge> far{{1, 2, B}};
    const auto isolated = pec_walk(ColoredGraph::from_edges(3, far), 0);
    for (std::uint32_t v = 0; v < 3; ++v) {
        CHECK(isolated.colors(v).empty());
    }

    const std::vector<ColoredEdge> chain{{0, 1, B}, {1, 2, R}, {2, 3, B}};
    const auto cg = ColoredGraph::from_edges(4, chain);
    const auto cl = pec_walk(cg, 0);
    CHECK(extract_walk(cg, cl, 3, B) == std::vector<std::uint32_t>{0, 1, 2, 3});
    CHECK_THROWS_AS(extract_walk(cg, cl, 3, R), std::invalid_argument);

    const std::vector<ColoredEdge> single{{0, 1, B}};
    const auto sg = ColoredGraph::from_edges(2, single);
    CHECK(extract_walk(sg, pec_walk(sg, 0), 1, B) == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("text export")
{
    const std::vector<ColoredEdge> chain{{2, 1, R}, {0, 1, B}};
    std::ostringstream out;
    write_graph_text(out, ColoredGraph::from_edges(3, chain));
    CHECK(out.str() == "v 3\ne 0 1 b\ne 1 2 r\n");
}

TEST_CASE("property: labels match the product-state oracle, any queue order, bounded pushes")
{
    Rng rng(61);
    for (int round = 0; round < 2000; ++round) {
        const auto n = testing::uniform(rng, 1, 12);
        const double density = 0.1 + 0.8 * std::uniform_real_distribution<double>(0, 1)(rng);
        const auto g = testing::random_colored_graph(rng, n, density);
        for (std::uint32_t s = 0; s < n; ++s) {
            const auto fifo = pec_walk(g, s);
            const auto lifo = pec_walk(g, s, QueueDiscipline::Lifo);
            const auto oracle = pec_reachable_oracle(g, s);
            CHECK(fifo.pushes() <= 2 * g.edge_count());
            CHECK(lifo.pushes() <= 2 * g.edge_count());
            for (std::uint32_t t = 0; t < n; ++t) {
                REQUIRE(fifo.colors(t) == oracle.colors[t]);
                REQUIRE(lifo.colors(t) == fifo.colors(t));
                for (const Color c : {R, B}) {
                    if (t != s && fifo.colors(t).contains(c)) {
                        const auto walk = extract_walk(g, fifo, t, c);
                        REQUIRE(valid_walk(g, walk, s, t, c));
                        CHECK(walk.size() <= 2 * n + 1);
                    }
                }
            }
        }
    }
}

TEST_CASE("property: paths, retracting-free walks and colored walks agree")
{
    Rng rng(62);
    for (int round = 0; round < 500; ++round) {
        const auto f = testing::random_formula(rng, {1, 6, 6, 3});
        VariableSet x;
        for (const Variable v : f.existentials()) {
            if (testing::coin(rng)) {
                x.insert(v);
            }
        }
        const auto incidence = build_incidence_graph(f, x);
        const auto colored = build_connection_graph(f, x);
        for (const Literal a : f.literals()) {
            const auto lab = pec_walk(colored, a.code());
            for (const Literal b : f.literals()) {
                if (a == b) {
                    continue;
                }
                const bool paths = resolution_path_exists(f, x, a, b, complete_path_length(f));
                const bool walks = testing::retracting_free_walk_exists(incidence, a.code(), b.code());
                const bool pec = reachable_with_last_color(lab, b.code(), B);
                REQUIRE(paths == walks);
                REQUIRE(walks == pec);
            }
        }
    }
}
