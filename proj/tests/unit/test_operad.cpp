#include "cacti/operad.hpp"

#include <doctest.h>

#include <thread>

using namespace cacti;

TEST_CASE("t0 is a unit")
{
    CHECK(compose(point_cell(), 1, point_cell()) == Chain::of(point_cell()));
    for (const Tree& t : enumerate_cells(2, 2)) {
        CHECK(compose(point_cell(), 1, t) == Chain::of(t));
        for (int i = 1; i <= 2; ++i) CHECK(compose(t, i, point_cell()) == Chain::of(t));
    }
}

TEST_CASE("O' composed with itself vanishes")
{
    CHECK(compose(delta_cell(), 1, delta_cell()).empty());
}

TEST_CASE("products compose to the three-lobe product")
{
    const Chain three = Chain::of(product_cell(3));
    CHECK(compose(product_cell(2), 1, product_cell(2)) == three);
    CHECK(compose(product_cell(2), 2, product_cell(2)) == three);
}

TEST_CASE("degree and labels add")
{
    for (const Tree& a : enumerate_cells(2, 1))
        for (const Tree& b : enumerate_cells(2, 1))
            for (int i = 1; i <= 2; ++i) {
                const Chain c = compose(a, i, b);
                for (const auto& [t, x] : c.terms()) {
                    CHECK(label_count(t) == 3);
                    CHECK(degree(t) == degree(a) + degree(b));
                }
            }
}

TEST_CASE("compose is a chain map")
{
    for (const Tree& a : enumerate_cells(2, 2))
        for (const Tree& b : enumerate_cells(1, 1))
            for (int i = 1; i <= 2; ++i) {
                const Chain lhs = boundary(compose(a, i, b));
                const Chain rhs = compose(boundary(Chain::of(a)), i, Chain::of(b)) +
                                  compose(Chain::of(a), i, boundary(Chain::of(b))) * Z(degree(a) % 2 ? -1 : 1);
                CHECK(lhs == rhs);
            }
}

TEST_CASE("gamma")
{
    const Tree t = parse_tree("root(w<1;0;0>(b(w<2;0;0>())))");
    CHECK(gamma(point_cell(), {t}) == Chain::of(t));
    CHECK(gamma(product_cell(2), {point_cell(), point_cell()}) == Chain::of(product_cell(2)));
    const Chain g = gamma(product_cell(2), {delta_cell(), point_cell()});
    CHECK(g.degree() == 1);
    CHECK(g == compose(product_cell(2), 1, delta_cell()));
}

TEST_CASE("composition table is thread safe and memoizes")
{
    CompositionTable table;
    const auto cells = enumerate_cells(2, 1);
    std::vector<std::thread> pool;
    for (int w = 0; w < 4; ++w)
        pool.emplace_back([&] {
            for (const Tree& a : cells)
                for (const Tree& b : cells) table.get(a, 1, b);
        });
    for (auto& th : pool) th.join();
    CHECK(table.size() == cells.size() * cells.size());
    CHECK(table.get(cells[0], 1, cells[1]) == compose(cells[0], 1, cells[1]));
}
