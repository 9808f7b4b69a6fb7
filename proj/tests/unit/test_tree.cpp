#include "cacti/tree.hpp"

#include <doctest.h>

#include <set>

using namespace cacti;

TEST_CASE("parse and serialize round trip")
{
    for (const char* s : {"root(w<1;0;0>())", "root(w<1;1;0>())", "root(w<1;0;0>(b(w<2;0;0>())))",
                          "root(w<2;0;1>(b(w<1;1;0>()w<3;0;0>())))"}) {
        const Tree t = parse_tree(s);
        CHECK(serialize(t) == s);
    }
    CHECK(serialize(parse_tree(" root ( w<1; 0 ;0>( ) ) ")) == "root(w<1;0;0>())");
}

TEST_CASE("parse errors carry a position")
{
    CHECK_THROWS_AS(parse_tree("root(w<1;0;0>()"), ParseError);
    CHECK_THROWS_AS(parse_tree("root(x)"), ParseError);
    CHECK_THROWS_AS(parse_tree(""), ParseError);
}

TEST_CASE("validate rejects bad decorations and labels")
{
    CHECK_THROWS_AS(validate(parse_tree("root(w<1;0;1>())")), InvariantError);
    CHECK_THROWS_AS(validate(parse_tree("root(w<1;2;0>())")), InvariantError);
    CHECK_THROWS_AS(validate(parse_tree("root(w<1;0;0>()w<1;0;0>())")), InvariantError);
    CHECK_THROWS_AS(validate(parse_tree("root(w<1;0;0>()w<3;0;0>())")), InvariantError);
    CHECK_NOTHROW(validate(parse_tree("root(w<1;1;1>(b(w<2;0;0>())))")));
}

TEST_CASE("degree counts black children and decorations")
{
    CHECK(degree(point_cell()) == 0);
    CHECK(degree(delta_cell()) == 1);
    CHECK(degree(parse_tree("root(w<1;0;0>(b(w<2;0;0>())))")) == 1);
    CHECK(degree(parse_tree("root(w<1;1;0>(b(w<2;0;0>())))")) == 2);
    CHECK(degree(product_cell(3)) == 0);
}

TEST_CASE("enumerate_cells counts")
{
    CHECK(enumerate_cells(1, 0).size() == 1);
    CHECK(enumerate_cells(1, 1).size() == 2);
    CHECK(enumerate_cells(2, 3).size() == 24);
    auto k2 = enumerate_cells(2, 3, true);
    int d0 = 0, d1 = 0;
    for (const auto& t : k2) (degree(t) == 0 ? d0 : d1)++;
    CHECK(d0 == 2);
    CHECK(d1 == 2);
}

TEST_CASE("serialize is injective on the enumeration")
{
    std::set<std::string> seen;
    std::size_t total = 0;
    for (int n = 1; n <= 3; ++n)
        for (const auto& t : enumerate_cells(n, 4)) {
            CHECK_NOTHROW(validate(t));
            CHECK(degree(t) <= 4);
            seen.insert(serialize(t));
            ++total;
        }
    CHECK(seen.size() == total);
}

TEST_CASE("relabel keeps the shape and composes")
{
    const Tree t = parse_tree("root(w<1;0;0>(b(w<2;0;0>())))");
    CHECK(relabel(t, std::vector<int>{1, 2}) == t);
    CHECK(serialize(relabel(t, std::vector<int>{2, 1})) == "root(w<2;0;0>(b(w<1;0;0>())))");
    const Tree u = parse_tree("root(w<1;0;0>(b(w<2;0;0>()w<3;1;0>())))");
    const std::vector<int> s{2, 3, 1}, r{3, 1, 2};
    std::vector<int> rs(3);
    for (int l = 1; l <= 3; ++l) rs[l - 1] = r[s[l - 1] - 1];
    CHECK(relabel(relabel(u, s), r) == relabel(u, rs));
}

TEST_CASE("named cells")
{
    CHECK(serialize(point_cell()) == "root(w<1;0;0>())");
    CHECK(serialize(delta_cell()) == "root(w<1;1;0>())");
    CHECK(serialize(product_cell(2)) == "root(w<1;0;0>()w<2;0;0>())");
    CHECK(serialize(cyclic_brace_cell(2, 1)) == "root(w<1;1;1>(b(w<2;0;0>())b(w<3;0;0>())))");
}
