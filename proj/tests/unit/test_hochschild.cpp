#include "cacti/hochschild.hpp"

#include <doctest.h>

using namespace cacti;

namespace {

Cochain identity_like(const AlgebraPtr& a)
{
    // f(1) = 0, f(x) = x
    return cochain_from_json(nlohmann::json::parse(R"({"algebra":"dual","arity":1,"coeffs":[["0","0"],["0","1"]]})"), a);
}

Cochain element(const AlgebraPtr& a, const Vec& v)
{
    Cochain f(a, 0);
    f.set_value(0, v);
    return f;
}

} // namespace

TEST_CASE("cochain JSON")
{
    const AlgebraPtr a = builtin_algebra("dual");
    const Cochain f = identity_like(a);
    CHECK(to_json(f).dump() == R"({"algebra":"dual","arity":1,"coeffs":[["0","0"],["0","1"]]})");
    CHECK(is_normalized(f));
    CHECK_THROWS(cochain_from_json(nlohmann::json::parse(R"({"algebra":"dual","arity":1,"coeffs":[["0","0"]]})")));
}

TEST_CASE("Hochschild differential examples")
{
    const AlgebraPtr a = builtin_algebra("dual");
    CHECK(hdiff(element(a, {0, 1})).is_zero());
    CHECK(hdiff(element(a, {1, 0})).is_zero());
    CHECK(hdiff(identity_like(a)).is_zero()); // a derivation of a commutative algebra
}

TEST_CASE("cup, brace and bracket examples")
{
    const AlgebraPtr a = builtin_algebra("dual");
    const Cochain x = element(a, {0, 1});
    CHECK(cup(x, x).is_zero());
    CHECK(cup(element(a, {1, 0}), x) == x);
    const Cochain f = identity_like(a);
    CHECK(brace(f, {f}) == f);
    CHECK(bracket(f, f).is_zero());
}

TEST_CASE("Connes' operator example")
{
    const AlgebraPtr a = builtin_algebra("dual");
    const Cochain d = cdelta(identity_like(a));
    CHECK(d.arity() == 0);
    CHECK(d.value(0) == Vec{1, 0});
    CHECK_THROWS(cdelta(element(a, {0, 1})));
}

TEST_CASE("dualize")
{
    const AlgebraPtr a = builtin_algebra("dual");
    const DualTensor t = dualize(element(a, {0, 1}));
    CHECK(t.data == std::vector<Q>{1, 0});
    std::mt19937_64 rng(3);
    for (const char* n : {"dual", "z2", "z3", "m2"}) {
        const AlgebraPtr b = builtin_algebra(n);
        for (int k = 0; k <= 3; ++k) {
            const Cochain f = random_cochain(b, k, rng), g = random_cochain(b, k, rng);
            CHECK(undualize(dualize(f)) == f);
            const DualTensor s = dualize(f + g), tf = dualize(f), tg = dualize(g);
            for (std::size_t i = 0; i < s.data.size(); ++i) CHECK(s.data[i] == tf.data[i] + tg.data[i]);
        }
    }
}

TEST_CASE("random identities on every builtin")
{
    std::mt19937_64 rng(7);
    for (const char* n : {"dual", "z2", "z3", "m2"}) {
        const AlgebraPtr b = builtin_algebra(n);
        for (int k = 0; k <= 3; ++k) {
            const Cochain f = random_cochain(b, k, rng);
            CHECK(is_normalized(f));
            CHECK(hdiff(hdiff(f)).is_zero());
            CHECK(is_normalized(hdiff(f)));
            if (k >= 2) CHECK(cdelta(cdelta(f)).is_zero());
            if (k >= 1) CHECK(cdelta(hdiff(f)) + hdiff(cdelta(f)) == Cochain(b, k));
        }
    }
}

TEST_CASE("cup is graded commutative up to coboundaries")
{
    const AlgebraPtr a = builtin_algebra("dual");
    std::vector<Cohomology> H;
    for (int p = 0; p <= 3; ++p) H.emplace_back(a, p);
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; p + q <= 3; ++q)
            for (const auto& f : H[p].representatives())
                for (const auto& g : H[q].representatives())
                    CHECK(H[p + q].is_coboundary(cup(f, g) - cup(g, f) * Q((p * q) % 2 ? -1 : 1)));
}

TEST_CASE("Hochschild cohomology dimensions")
{
    const AlgebraPtr d = builtin_algebra("dual"), z = builtin_algebra("z2"), m = builtin_algebra("m2");
    CHECK(Cohomology(d, 0).dimension() == 2);
    CHECK(Cohomology(d, 1).dimension() == 1);
    CHECK(Cohomology(d, 2).dimension() == 1);
    CHECK(Cohomology(z, 1).dimension() == 0);
    CHECK(Cohomology(m, 0).dimension() == 1);
    CHECK(Cohomology(m, 1).dimension() == 0);
    const Cohomology H1(d, 1);
    const Cochain f = identity_like(d);
    const Vec c = H1.reduce(f);
    CHECK(c.size() == 1);
    CHECK(c[0] != 0);
    CHECK(!H1.is_coboundary(f));
    // f(x) = 1 is not a cocycle: (df)(x,x) = 2x
    const Cochain g =
        cochain_from_json(nlohmann::json::parse(R"({"algebra":"dual","arity":1,"coeffs":[["0","0"],["1","0"]]})"));
    CHECK_THROWS(H1.reduce(g));
}
