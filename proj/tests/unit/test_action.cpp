#include "cacti/action.hpp"
#include "cacti/operad.hpp"

#include <doctest.h>

#include <set>

using namespace cacti;

namespace {

Cochain identity_like(const AlgebraPtr& a)
{
    return cochain_from_json(nlohmann::json::parse(R"({"algebra":"dual","arity":1,"coeffs":[["0","0"],["0","1"]]})"), a);
}

} // namespace

TEST_CASE("realizations of small cells")
{
    const auto r0 = realize(point_cell(), {{1, {1}}});
    CHECK(r0.tail_count() == 1);
    CHECK(underlying(r0) == point_cell());
    CHECK(weight_sign(r0) == 1);

    const auto r1 = realize(delta_cell(), {{1, {0, 0}}});
    CHECK(r1.tail_count() == 0);
    const RealVertex& v = r1.vertices.at(1);
    CHECK(v.items.size() == 2);
    CHECK(v.items[v.p0].kind == Item::Spine);

    CHECK_THROWS(realize(point_cell(), {{1, {1, 1}}}));
    // tails are unlabelled: two tails in one angle give one realization
    CHECK(realizations(point_cell(), {2}).size() == 1);
    CHECK(realizations(delta_cell(), {2}).size() == 2);
    CHECK(realizations(point_cell(), {0}).size() == 1);
    CHECK(realizations(parse_tree("root(w<1;0;0>(b(w<2;0;0>())))"), {0, 0}).empty());
}

TEST_CASE("realize then forget recovers the tree")
{
    for (const Tree& t : enumerate_cells(2, 2))
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 2; ++b)
                for (const auto& r : realizations(t, {a, b})) CHECK(underlying(r) == t);
}

TEST_CASE("correlator of t0 over the dual numbers")
{
    const AlgebraPtr a = builtin_algebra("dual");
    const auto fs = std::vector<Cochain>{identity_like(a)};
    const auto r = realize(point_cell(), {{1, {1}}});
    const Vec one{1, 0}, x{0, 1};
    CHECK(correlate(r, fs, one, {x}) == 1);
    CHECK(correlate(r, fs, x, {x}) == 0);
    CHECK(correlate(r, fs, x, {one}) == 0);
    CHECK(correlate(realize(point_cell(), {{1, {2}}}), fs, one, {x, x}) == 0);
}

TEST_CASE("named actions")
{
    std::mt19937_64 rng(11);
    for (const char* n : {"dual", "z2", "z3"}) {
        const AlgebraPtr a = builtin_algebra(n);
        for (int k = 0; k <= 3; ++k) {
            const Cochain f = random_cochain(a, k, rng), g = random_cochain(a, 3 - k, rng);
            CHECK(act(point_cell(), {f}) == f);
            if (k >= 1) CHECK(act(delta_cell(), {f}) == cdelta(f));
            CHECK(act(product_cell(2), {f, g}) == cup(f, g));
        }
    }
}

TEST_CASE("the one-child brace tree acts as the brace up to the decalage sign")
{
    std::mt19937_64 rng(5);
    const AlgebraPtr a = builtin_algebra("z2");
    const Tree t = parse_tree("root(w<1;0;0>(b(w<2;0;0>())))");
    for (int p = 1; p <= 3; ++p)
        for (int q = 0; q <= 2; ++q) {
            const Cochain f = random_cochain(a, p, rng), g = random_cochain(a, q, rng);
            CHECK(act(t, {f, g}) == brace(f, {g}) * Q(sign_of(decalage({p, q}))));
        }
}

TEST_CASE("cyclic brace cells")
{
    std::mt19937_64 rng(13);
    const AlgebraPtr a = builtin_algebra("dual");
    for (int i = 0; i <= 2; ++i) {
        const Cochain f = random_cochain(a, 3, rng), g = random_cochain(a, 1, rng), h = random_cochain(a, 2, rng);
        CHECK(act(cyclic_brace_cell(2, i), {f, g, h}) == cyclic_brace(f, {g, h}, i));
    }
}

TEST_CASE("arity bookkeeping")
{
    CHECK(action_arity(delta_cell(), {0}) == -1);
    CHECK(action_arity(product_cell(2), {1, 2}) == 3);
    const AlgebraPtr a = builtin_algebra("dual");
    CHECK(act(delta_cell(), {Cochain(a, 0)}).is_zero());
    CHECK_THROWS(act(product_cell(2), {Cochain(a, 1)}));
    const Chain c = boundary(parse_tree("root(w<1;0;0>(b(w<2;0;0>())))"));
    std::mt19937_64 rng(1);
    const Cochain f = random_cochain(a, 1, rng), g = random_cochain(a, 1, rng);
    Cochain sum(a, 2);
    for (const auto& [t, x] : c.terms()) sum += act(t, {f, g}) * Q(x);
    CHECK(act_chain(c, {f, g}) == sum);
}

TEST_CASE("foliage substitution")
{
    // a one-tail realization into a vertex with one tail
    const auto r = realize(point_cell(), {{1, {1}}});
    const auto s = foliage_substitute(r, 1, r);
    REQUIRE(s);
    CHECK(*s == r);
    // tail-count mismatch gives zero
    CHECK(!foliage_substitute(r, 1, realize(point_cell(), {{1, {2}}})));
}

TEST_CASE("foliage substitution is compatible with composition")
{
    // Every substitution lands in F(t o_i t'); equality holds when vertex i has no spine
    // or t' has a single lobe at its root.
    const auto cells = [] {
        std::vector<Tree> v;
        for (int k = 1; k <= 2; ++k)
            for (auto& t : enumerate_cells(k, 1)) v.push_back(t);
        return v;
    }();
    for (const Tree& t : cells)
        for (const Tree& t2 : cells)
            for (int i = 1; i <= label_count(t); ++i) {
                const int n = label_count(t), m = label_count(t2);
                const Chain c = compose(t, i, t2);
                const bool exact = whites_by_label(t).at(i)->dec == 0 || t2.whites.size() == 1;
                std::vector<int> ar(n + m - 1, 0);
                while (true) {
                    std::set<RealizedTree> lhs, rhs;
                    for (const auto& [u, x] : c.terms())
                        for (auto& r : realizations(u, ar)) lhs.insert(r);
                    const std::vector<int> in(ar.begin() + i - 1, ar.begin() + i - 1 + m);
                    const int N2 = action_arity(t2, in);
                    if (N2 >= 0) {
                        std::vector<int> out(ar.begin(), ar.begin() + i - 1);
                        out.push_back(N2);
                        out.insert(out.end(), ar.begin() + i - 1 + m, ar.end());
                        for (const auto& r : realizations(t, out))
                            for (const auto& r2 : realizations(t2, in))
                                if (auto s = foliage_substitute(r, i, r2)) rhs.insert(*s);
                    }
                    for (const auto& x : rhs) CHECK(lhs.count(x) == 1);
                    if (exact) CHECK(lhs == rhs);
                    int j = n + m - 2;
                    while (j >= 0 && ++ar[j] > 2) ar[j--] = 0;
                    if (j < 0) break;
                }
            }
}
