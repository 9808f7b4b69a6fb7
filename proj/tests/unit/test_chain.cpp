#include "cacti/chain.hpp"
#include "cacti/homology.hpp"

#include <doctest.h>

#include <algorithm>

using namespace cacti;

TEST_CASE("boundary of O' vanishes")
{
    CHECK(boundary(delta_cell()).empty());
    CHECK(spine_flip(delta_cell(), 1).empty());
}

TEST_CASE("spineless 1-cells of K(2) bound the two 0-cells with opposite signs")
{
    const Tree a = parse_tree("root(w<1;0;0>(b(w<2;0;0>())))");
    const Tree b = parse_tree("root(w<2;0;0>(b(w<1;0;0>())))");
    const Chain da = boundary(a), db = boundary(b);
    CHECK(da.size() == 2);
    CHECK(db.size() == 2);
    CHECK(da + db == Chain(2, 0));
    for (const auto& [t, c] : da.terms()) CHECK(degree(t) == 0);
}

TEST_CASE("spine flip on a two-flag vertex")
{
    const Tree t = parse_tree("root(w<1;1;1>(b(w<2;0;0>())))");
    const Chain s = spine_flip(t, 1);
    CHECK(s.size() == 2);
    Z total = 0;
    for (const auto& [u, c] : s.terms()) total += c;
    CHECK(total == 0);
}

TEST_CASE("boundary squares to zero up to three lobes")
{
    for (int n = 1; n <= 3; ++n)
        for (const Tree& t : enumerate_cells(n, 4)) {
            const Chain d = boundary(t);
            for (const auto& [u, c] : d.terms()) CHECK(degree(u) == degree(t) - 1);
            CHECK(boundary(d).empty());
        }
}

TEST_CASE("boundary faces are enumerated cells")
{
    const auto cells = enumerate_cells(3, 4);
    for (const Tree& t : cells) {
        const Chain d = boundary(t);
        for (const auto& [u, c] : d.terms()) CHECK(std::binary_search(cells.begin(), cells.end(), u, CanonicalLess{}));
    }
}

TEST_CASE("chain JSON round trip")
{
    const Chain d = boundary(parse_tree("root(w<1;1;1>(b(w<2;0;0>())))"));
    const auto j = to_json(d);
    CHECK(j.at("degree") == 1);
    CHECK(j.at("n") == 2);
    CHECK(chain_from_json(j) == d);
    CHECK(to_json(boundary(delta_cell())).at("terms").empty());
}

TEST_CASE("chains reject mixed degrees")
{
    Chain c = Chain::of(point_cell());
    CHECK_THROWS_AS(c.add(delta_cell(), 1), std::invalid_argument);
}

TEST_CASE("relabel_chain carries the odd-factor Koszul sign")
{
    // two odd factors (one angle each) swap order
    const Tree t = parse_tree("root(w<1;1;0>()w<2;1;0>())");
    const Chain c = relabel_chain(Chain::of(t), {2, 1});
    CHECK(c.coeff(parse_tree("root(w<2;1;0>()w<1;1;0>())")) == -1);
}

TEST_CASE("cellular homology")
{
    CHECK(cellular_homology(1).betti == std::vector<int>{1, 1});
    CHECK(cellular_homology(2).betti == std::vector<int>{1, 3, 3, 1});
    CHECK(cellular_homology(2, true).betti == std::vector<int>{1, 1});
    const auto h3 = cellular_homology(3);
    CHECK(h3.betti == std::vector<int>{1, 6, 14, 16, 9, 2});
    CHECK(h3.euler() == 0);
    CHECK(cellular_homology(3, true).betti == std::vector<int>{1, 3, 2});
}
