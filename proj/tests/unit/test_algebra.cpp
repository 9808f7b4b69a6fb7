#include "cacti/frobenius.hpp"
#include "cacti/linalg.hpp"

#include <doctest.h>

using namespace cacti;

TEST_CASE("rank, nullspace, inverse and solve")
{
    Matrix m(2, 3);
    m(0, 0) = 1, m(0, 1) = 2, m(0, 2) = 3;
    m(1, 0) = 2, m(1, 1) = 4, m(1, 2) = 6;
    CHECK(rank(m) == 1);
    const auto ns = nullspace(m);
    CHECK(ns.size() == 2);
    for (const Vec& v : ns) CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);
    Matrix a(2, 2);
    a(0, 0) = 0, a(0, 1) = 1, a(1, 0) = 1, a(1, 1) = 0;
    auto inv = inverse(a);
    REQUIRE(inv);
    CHECK((*inv)(0, 1) == 1);
    CHECK(!inverse(m.rows() == 2 ? Matrix(2, 2) : m));
    auto x = solve(a, {Q(3), Q(5)});
    REQUIRE(x);
    CHECK((*x)[0] == 5);
    CHECK(!solve(m, {Q(1), Q(1)}));
}

TEST_CASE("builtins pass the axioms and the snake identity")
{
    for (const char* n : {"dual", "z2", "z3", "m2"}) {
        const AlgebraPtr a = builtin_algebra(n);
        CHECK(snake_identity(*a));
        const Vec u = a->unit();
        for (int i = 0; i < a->dim(); ++i) CHECK(a->prod(u, a->basis(i)) == a->basis(i));
    }
    CHECK_THROWS_AS(builtin_algebra("z4"), std::invalid_argument);
}

TEST_CASE("Casimir elements")
{
    const Matrix cz = casimir(*builtin_algebra("z2"));
    CHECK(cz(0, 0) == 1);
    CHECK(cz(1, 1) == 1);
    CHECK(cz(0, 1) == 0);
    const Matrix cd = casimir(*builtin_algebra("dual"));
    CHECK(cd(0, 1) == 1);
    CHECK(cd(1, 0) == 1);
    CHECK(cd(0, 0) == 0);
    CHECK(cd(1, 1) == 0);
    // m2: sum E_ij (x) E_ji, basis E11 E12 E21 E22
    const Matrix cm = casimir(*builtin_algebra("m2"));
    CHECK(cm(0, 0) == 1);
    CHECK(cm(1, 2) == 1);
    CHECK(cm(2, 1) == 1);
    CHECK(cm(3, 3) == 1);
    CHECK(cm(1, 1) == 0);
}

TEST_CASE("axiom failures name the axiom and a witness")
{
    const std::vector<std::vector<Vec>> mul{{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}};
    try {
        make_algebra("bad", 2, mul, {1, 0}, {{1, 0}, {0, 1}});
        FAIL("accepted a non-invariant pairing");
    } catch (const AxiomError& e) {
        CHECK(e.axiom == "invariance");
        CHECK(e.witness[0] >= 0);
    }
    CHECK_THROWS_AS(make_algebra("bad", 2, mul, {1, 0}, {{0, 0}, {0, 0}}), AxiomError);
    CHECK_THROWS_AS(make_algebra("bad", 2, mul, {1, 0}, {{0, 1}, {2, 0}}), AxiomError);
    CHECK_NOTHROW(make_algebra("ok", 2, mul, {1, 0}, {{0, 1}, {1, 0}}));
}

TEST_CASE("algebra JSON round trip")
{
    for (const char* n : {"dual", "z3", "m2"}) {
        const AlgebraPtr a = builtin_algebra(n);
        const auto j = to_json(*a);
        CHECK(j.at("dim") == a->dim());
        CHECK(j.at("unit")[0].is_string());
        const FrobeniusAlgebra b = algebra_from_json(j);
        for (int i = 0; i < a->dim(); ++i)
            for (int k = 0; k < a->dim(); ++k) {
                CHECK(b.mul(i, k) == a->mul(i, k));
                CHECK(b.eta(i, k) == a->eta(i, k));
            }
    }
}

TEST_CASE("dual_elem inverts the pairing")
{
    const AlgebraPtr a = builtin_algebra("m2");
    const Vec x{1, 2, -3, Q(1, 2)};
    Vec phi;
    for (int k = 0; k < a->dim(); ++k) phi.push_back(a->pair(x, a->basis(k)));
    CHECK(a->dual_elem(phi) == x);
    const Vec p = a->project(x);
    CHECK(p[a->unit_pivot()] == 0);
}
