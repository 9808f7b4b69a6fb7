#include "cacti/graph.hpp"

#include <doctest.h>

using namespace cacti;

TEST_CASE("cycles of small graphs")
{
    const RibbonGraph loop({{0, {0, 1}}}, {{0, 1}});
    CHECK(loop.cycles() == std::vector<std::vector<int>>{{0}, {1}});
    CHECK(loop.genus() == 0);
    const RibbonGraph interval({{0, {0}}, {1, {1}}}, {{0, 1}});
    CHECK(interval.cycles() == std::vector<std::vector<int>>{{0, 1}});
    CHECK(interval.genus() == 0);
    const RibbonGraph path({{0, {0}}, {1, {1, 2}}, {2, {3}}}, {{0, 1}, {2, 3}});
    CHECK(path.cycles().size() == 1);
    CHECK(path.genus() == 0);
}

TEST_CASE("genus of an interleaved double loop is one")
{
    const RibbonGraph torus({{0, {0, 1, 2, 3}}}, {{0, 2}, {1, 3}});
    CHECK(torus.cycles().size() == 1);
    CHECK(torus.genus() == 1);
    CHECK(!torus.is_treelike());
}

TEST_CASE("malformed graphs are rejected")
{
    CHECK_THROWS_AS(RibbonGraph({{0, {0, 1}}}, {{0, 2}}), GraphError);
    CHECK_THROWS_AS(RibbonGraph({{0, {0, 1}}}, {}), GraphError);
    CHECK_THROWS_AS(RibbonGraph({{0, {0}}, {1, {1}}, {2, {2, 3}}}, {{0, 1}, {2, 3}}), GraphError);
    CHECK_THROWS_AS(parse_graph("vertex 0 0 1\nedge 0\n"), GraphError);
}

TEST_CASE("contracting edges")
{
    const RibbonGraph interval({{0, {0}}, {1, {1}}}, {{0, 1}});
    const RibbonGraph point = contract_edge(interval, 0);
    CHECK(point.vertex_count() == 1);
    CHECK(point.edge_count() == 0);

    const RibbonGraph path({{0, {0}}, {1, {1, 2}}, {2, {3}}}, {{0, 1}, {2, 3}});
    const RibbonGraph p2 = contract_edge(path, 3);
    CHECK(p2.edge_count() == 1);
    CHECK(p2.flags_at(p2.vertex(1)) == std::vector<int>{1});

    const RibbonGraph loop({{0, {0, 1}}}, {{0, 1}});
    CHECK_THROWS_AS(contract_edge(loop, 0), GraphError);

    // a mark on a deleted flag moves to the next flag of its cycle
    const RibbonGraph marked({{0, {0}}, {1, {1, 2}}, {2, {3}}}, {{0, 1}, {2, 3}}, {{1, 0}});
    const RibbonGraph m2 = contract_edge(marked, 0);
    REQUIRE(m2.marks().size() == 1);
    const int f = m2.marks().begin()->first;
    CHECK(m2.cycle_of(f) == m2.cycle_of(2));
}

TEST_CASE("dual trees of small cacti")
{
    CHECK(serialize(dual_tree(parse_graph("vertex 0 0 1\nedge 0 1\nmark 0 0\nmark 1 1\n"))) == "root(w<1;0;0>())");
    CHECK(serialize(dual_tree(parse_graph("vertex 0 0 1 2 3\nedge 0 1\nedge 2 3\nmark 0 0\nmark 1 1\nmark 3 2\n"))) ==
          "root(w<1;0;0>()w<2;0;0>())");
    const RibbonGraph g = parse_graph("vertex 0 0 1\nvertex 1 2 3 4 5\nedge 0 3\nedge 1 2\nedge 4 5\nmark 0 0\nmark 1 1\nmark 5 2\n");
    CHECK(serialize(dual_tree(g)) == "root(w<1;0;0>(b(w<2;0;0>())))");
    CHECK_THROWS_AS(dual_tree(RibbonGraph({{0, {0, 1, 2, 3}}}, {{0, 2}, {1, 3}})), GraphError);
}

TEST_CASE("cactus graph round trip")
{
    for (int n = 1; n <= 3; ++n)
        for (const Tree& t : enumerate_cells(n, 3)) {
            const RibbonGraph g = cactus_graph(t);
            CHECK(g.genus() == 0);
            CHECK(g.is_treelike());
            CHECK(g.is_marked());
            std::size_t total = 0;
            for (const auto& c : g.cycles()) total += c.size();
            CHECK(total == g.flags().size());
            CHECK(static_cast<int>(g.cycles().size()) == n + 1);
            CHECK(dual_tree(g) == t);
            CHECK(dual_tree(parse_graph(format_graph(g))) == t);
            bool plain = true;
            for (const auto* w : whites_dfs(t)) plain = plain && w->dec == 0 && w->mark == 0;
            CHECK(is_spineless(g) == plain);
        }
}

TEST_CASE("contraction preserves the genus")
{
    const RibbonGraph g = cactus_graph(parse_tree("root(w<1;0;1>(b(w<2;1;0>()w<3;0;0>())))"));
    for (int f : g.flags()) {
        if (g.vertex(f) == g.vertex(g.inv(f))) continue;
        CHECK(contract_edge(g, f).genus() == g.genus());
    }
}
