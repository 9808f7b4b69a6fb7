#include "cacti/suites.hpp"

#include "cacti/action.hpp"
#include "cacti/homology.hpp"
#include "cacti/operad.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

namespace cacti {

namespace {

using Witness = std::optional<std::string>;

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn)
{
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(thread_count()), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) fn(i);
        });
    for (auto& th : pool) th.join();
}

// Runs every case; the witness is the first failure in case order, so reports do not
// depend on scheduling.
CheckResult run_cases(const std::string& name, std::size_t count, const std::function<Witness(std::size_t)>& fn)
{
    std::vector<Witness> out(count);
    parallel_for(count, [&](std::size_t i) {
        try {
            out[i] = fn(i);
        } catch (const std::exception& e) {
            out[i] = std::string("exception: ") + e.what();
        }
    });
    CheckResult r;
    r.name = name;
    r.cases = static_cast<long>(count);
    for (auto& w : out)
        if (w && r.failures++ == 0) r.witness = *w;
    return r;
}

CheckResult single(const std::string& name, const std::function<Witness()>& fn)
{
    return run_cases(name, 1, [&](std::size_t) { return fn(); });
}

std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t salt, std::uint64_t idx)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(salt), static_cast<std::uint32_t>(idx),
                      static_cast<std::uint32_t>(idx >> 32)};
    return std::mt19937_64(seq);
}

// Zero cochains compare equal whatever their arity; a negative arity is represented by a zero.
bool same(const Cochain& x, const Cochain& y)
{
    if (x.is_zero() && y.is_zero()) return true;
    return x.arity() == y.arity() && x == y;
}

std::vector<Tree> cells_upto(int n, int max_degree, bool spineless = false)
{
    std::vector<Tree> out;
    for (int k = 1; k <= n; ++k)
        for (auto& t : enumerate_cells(k, max_degree, spineless)) out.push_back(std::move(t));
    return out;
}

std::vector<std::vector<int>> arity_tuples(int len, int max_arity)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur(len, 0);
    while (true) {
        out.push_back(cur);
        int i = len - 1;
        while (i >= 0 && ++cur[i] > max_arity) cur[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

std::string str(const std::vector<int>& v)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

std::string seed_note(const std::string& alg, std::uint64_t seed, std::size_t idx)
{
    return " algebra=" + alg + " seed=" + std::to_string(seed) + " case=" + std::to_string(idx);
}

std::vector<Cochain> random_list(const AlgebraPtr& a, const std::vector<int>& ar, std::mt19937_64& rng)
{
    std::vector<Cochain> fs;
    for (int x : ar) fs.push_back(random_cochain(a, x, rng));
    return fs;
}

std::vector<std::string> algebras_or(const SuiteConfig& c, std::vector<std::string> def)
{
    if (c.algebra.empty()) return def;
    return {c.algebra};
}

AlgebraPtr algebra_named(const std::string& s)
{
    try {
        return load_algebra(s);
    } catch (const std::exception& e) {
        throw SuiteError("invalid algebra '" + s + "': " + e.what());
    }
}

int pick(int value, int def) { return value > 0 ? value : def; }

// ---- cell complex ----

SuiteReport suite_d2(const SuiteConfig& c)
{
    const int n = pick(c.n, 3), md = c.max_degree >= 0 ? c.max_degree : 4;
    auto cells = cells_upto(n, md);
    SuiteReport r;
    r.checks.push_back(run_cases("boundary squares to zero", cells.size(), [&](std::size_t i) -> Witness {
        if (boundary(boundary(cells[i])).empty()) return std::nullopt;
        return "tree=" + serialize(cells[i]);
    }));
    return r;
}

std::vector<long> counts_by_degree(int n, bool spineless)
{
    std::vector<long> out;
    for (const Tree& t : enumerate_cells(n, 2 * n - 1, spineless)) {
        const int d = degree(t);
        if (static_cast<int>(out.size()) <= d) out.resize(d + 1, 0);
        ++out[d];
    }
    return out;
}

std::string str(const std::vector<long>& v)
{
    std::vector<int> w(v.begin(), v.end());
    return str(w);
}

SuiteReport suite_euler(const SuiteConfig& c)
{
    const int n = pick(c.n, 3);
    SuiteReport r;
    auto expect = [](const std::string& name, std::vector<long> got, std::vector<long> want) {
        CheckResult x = single(name, [&]() -> Witness {
            if (got == want) return std::nullopt;
            return "counts=" + str(got) + " expected=" + str(want);
        });
        x.info = str(got);
        return x;
    };
    r.checks.push_back(expect("K'(1) cell counts", counts_by_degree(1, false), {1, 1}));
    r.checks.push_back(expect("K(2) cell counts", counts_by_degree(2, true), {2, 2}));
    for (int k = 1; k <= n; ++k) {
        auto counts = counts_by_degree(k, false);
        long chi = 0;
        for (std::size_t d = 0; d < counts.size(); ++d) chi += (d % 2 ? -1 : 1) * counts[d];
        CheckResult x = single("Euler characteristic of K'(" + std::to_string(k) + ")", [&]() -> Witness {
            if (chi == 0) return std::nullopt;
            return "counts=" + str(counts) + " chi=" + std::to_string(chi);
        });
        x.info = "chi=" + std::to_string(chi);
        r.checks.push_back(x);
    }
    return r;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b)
{
    std::vector<int> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// Poincare polynomial of the configuration space of k points in the plane, times (1+t)^k if framed.
std::vector<int> expected_betti(int k, bool framed)
{
    std::vector<int> p{1};
    for (int j = 1; j < k; ++j) p = poly_mul(p, {1, j});
    if (framed)
        for (int j = 0; j < k; ++j) p = poly_mul(p, {1, 1});
    return p;
}

SuiteReport suite_homology(const SuiteConfig& c)
{
    const int n = pick(c.n, 2);
    SuiteReport r;
    for (int k = 1; k <= n; ++k)
        for (bool spineless : {false, true}) {
            const std::string name = std::string(spineless ? "K(" : "K'(") + std::to_string(k) + ") Betti numbers";
            HomologyReport h;
            CheckResult x = single(name, [&]() -> Witness {
                h = cellular_homology(k, spineless);
                auto want = expected_betti(k, !spineless);
                if (h.betti == want) return std::nullopt;
                return "betti=" + str(h.betti) + " expected=" + str(want);
            });
            x.info = str(h.betti);
            r.checks.push_back(x);
        }
    return r;
}

// ---- operad ----

struct AssocCase {
    const Tree *a, *b, *c;
    int i, j;
};

Witness check_assoc(const AssocCase& x)
{
    const int nb = label_count(*x.b), nc = label_count(*x.c);
    const Chain ab = compose(*x.a, x.i, *x.b);
    const Chain lhs = compose(ab, x.j, Chain::of(*x.c));
    Chain rhs;
    if (x.i <= x.j && x.j < x.i + nb) {
        rhs = compose(Chain::of(*x.a), x.i, compose(*x.b, x.j - x.i + 1, *x.c));
    } else {
        const int jj = x.j < x.i ? x.j : x.j - nb + 1;
        const int ii = x.j < x.i ? x.i + nc - 1 : x.i;
        rhs = compose(compose(*x.a, jj, *x.c), ii, Chain::of(*x.b)) * Z(sign_of(degree(*x.b) * degree(*x.c)));
    }
    if (lhs == rhs) return std::nullopt;
    return "a=" + serialize(*x.a) + " i=" + std::to_string(x.i) + " b=" + serialize(*x.b) +
           " j=" + std::to_string(x.j) + " c=" + serialize(*x.c);
}

struct EquivCase {
    const Tree *a, *b;
    int i;
    bool outer; // permute a's labels, else b's
    std::vector<int> sigma;
};

Witness check_equiv(const EquivCase& x)
{
    const int na = label_count(*x.a), m = label_count(*x.b);
    const Chain base = compose(*x.a, x.i, *x.b);
    const auto s = [&](int l) { return x.sigma.at(l - 1); };
    Chain lhs, rhs;
    std::vector<int> big(na + m - 1);
    if (x.outer) {
        lhs = compose(relabel(*x.a, x.sigma), s(x.i), *x.b) * Z(relabel_sign(*x.a, s));
        for (int l = 1; l <= na + m - 1; ++l) {
            if (x.i <= l && l < x.i + m) {
                big[l - 1] = s(x.i) + l - x.i;
                continue;
            }
            const int lp = l < x.i ? l : l - m + 1;
            big[l - 1] = s(lp) < s(x.i) ? s(lp) : s(lp) + m - 1;
        }
    } else {
        lhs = compose(*x.a, x.i, relabel(*x.b, x.sigma)) * Z(relabel_sign(*x.b, s));
        for (int l = 1; l <= na + m - 1; ++l)
            big[l - 1] = (x.i <= l && l < x.i + m) ? x.i + s(l - x.i + 1) - 1 : l;
    }
    rhs = relabel_chain(base, big);
    if (lhs == rhs) return std::nullopt;
    return std::string(x.outer ? "outer" : "inner") + " a=" + serialize(*x.a) + " i=" + std::to_string(x.i) +
           " b=" + serialize(*x.b) + " sigma=" + str(x.sigma);
}

std::vector<std::vector<int>> permutations(int n)
{
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i + 1;
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

SuiteReport suite_operad(const SuiteConfig& c)
{
    const int n = pick(c.n, 2), md = c.max_degree >= 0 ? c.max_degree : 1, trials = pick(c.trials, 100);
    const auto cells = cells_upto(n, md);
    SuiteReport r;

    std::vector<AssocCase> assoc;
    for (const Tree& a : cells)
        for (const Tree& b : cells)
            for (const Tree& cc : cells) {
                const int na = label_count(a), nb = label_count(b);
                for (int i = 1; i <= na; ++i)
                    for (int j = 1; j <= na + nb - 1; ++j) assoc.push_back({&a, &b, &cc, i, j});
            }
    r.checks.push_back(run_cases("associativity", assoc.size(), [&](std::size_t k) { return check_assoc(assoc[k]); }));

    const Tree t0 = point_cell();
    r.checks.push_back(run_cases("unit", cells.size(), [&](std::size_t k) -> Witness {
        const Tree& t = cells[k];
        if (!(compose(t0, 1, t) == Chain::of(t))) return "left unit fails at " + serialize(t);
        for (int i = 1; i <= label_count(t); ++i)
            if (!(compose(t, i, t0) == Chain::of(t))) return "right unit fails at " + serialize(t) + " i=" + std::to_string(i);
        return std::nullopt;
    }));

    std::vector<EquivCase> equiv;
    for (const Tree& a : cells)
        for (const Tree& b : cells)
            for (int i = 1; i <= label_count(a); ++i) {
                for (auto& s : permutations(label_count(a))) equiv.push_back({&a, &b, i, true, s});
                for (auto& s : permutations(label_count(b))) equiv.push_back({&a, &b, i, false, s});
            }
    r.checks.push_back(run_cases("equivariance", equiv.size(), [&](std::size_t k) { return check_equiv(equiv[k]); }));

    // Larger random instances: up to three lobes per operand and degree up to 3.
    const auto big = cells_upto(3, std::max(md, 3));
    r.checks.push_back(run_cases("random associativity and equivariance", static_cast<std::size_t>(trials),
                                 [&](std::size_t k) -> Witness {
        auto rng = case_rng(c.seed, 11, k);
        auto any = [&](const std::vector<Tree>& v) -> const Tree& { return v[rng() % v.size()]; };
        const Tree &a = any(big), &b = any(big), &cc = any(big);
        const int na = label_count(a), nb = label_count(b);
        const int i = 1 + static_cast<int>(rng() % na), j = 1 + static_cast<int>(rng() % (na + nb - 1));
        if (auto w = check_assoc({&a, &b, &cc, i, j})) return w;
        std::vector<int> sa(na), sb(nb);
        for (int l = 0; l < na; ++l) sa[l] = l + 1;
        for (int l = 0; l < nb; ++l) sb[l] = l + 1;
        std::shuffle(sa.begin(), sa.end(), rng);
        std::shuffle(sb.begin(), sb.end(), rng);
        if (auto w = check_equiv({&a, &b, i, true, sa})) return w;
        return check_equiv({&a, &b, i, false, sb});
    }));
    return r;
}

// ---- algebra ----

SuiteReport suite_frobenius(const SuiteConfig& c)
{
    SuiteReport r;
    for (const auto& name : algebras_or(c, {"dual", "z2", "z3", "m2"})) {
        r.checks.push_back(single("axioms " + name, [&]() -> Witness {
            try {
                algebra_named(name);
            } catch (const std::exception& e) {
                return std::string(e.what());
            }
            return std::nullopt;
        }));
        r.checks.push_back(single("snake identity " + name, [&]() -> Witness {
            if (snake_identity(*algebra_named(name))) return std::nullopt;
            return "algebra=" + name;
        }));
    }
    r.checks.push_back(single("rejects a non-invariant pairing", [&]() -> Witness {
        const std::vector<std::vector<Vec>> mul{{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}};
        try {
            make_algebra("bad", 2, mul, {1, 0}, {{1, 0}, {0, 1}});
        } catch (const AxiomError& e) {
            if (e.axiom == "invariance") return std::nullopt;
            return "rejected for " + e.axiom + " instead of invariance";
        }
        return std::string("accepted");
    }));
    r.checks.push_back(single("rejects a non-associative product", [&]() -> Witness {
        // unit e0; e1 e1 = e2, e1 e2 = e0, everything else zero: (e1 e1) e1 = 0 but e1 (e1 e1) = e0
        std::vector<std::vector<Vec>> mul(3, std::vector<Vec>(3, Vec{0, 0, 0}));
        for (int i = 0; i < 3; ++i) {
            mul[0][i][i] = 1;
            mul[i][0][i] = 1;
        }
        mul[1][1] = {0, 0, 1};
        mul[1][2] = {1, 0, 0};
        try {
            make_algebra("bad", 3, mul, {1, 0, 0}, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
        } catch (const AxiomError& e) {
            if (e.axiom == "associativity") return std::nullopt;
            return "rejected for " + e.axiom + " instead of associativity";
        }
        return std::string("accepted");
    }));
    return r;
}

SuiteReport suite_hochschild(const SuiteConfig& c)
{
    const int trials = pick(c.trials, 50);
    SuiteReport r;
    for (const auto& name : algebras_or(c, {"dual", "z2", "z3", "m2"})) {
        const AlgebraPtr A = algebra_named(name);
        const int maxar = c.max_degree >= 0 ? c.max_degree : (A->dim() >= 4 ? 3 : 4);
        const std::size_t per = static_cast<std::size_t>(maxar + 1);
        auto checks = [&](const std::string& what, int salt, const std::function<Witness(int, std::mt19937_64&)>& fn) {
            r.checks.push_back(run_cases(what + " " + name, static_cast<std::size_t>(trials) * per, [&](std::size_t k) -> Witness {
                const int arity = static_cast<int>(k % per);
                auto rng = case_rng(c.seed, salt, k);
                if (auto w = fn(arity, rng)) return *w + " arity=" + std::to_string(arity) + seed_note(name, c.seed, k);
                return std::nullopt;
            }));
        };
        checks("d^2 = 0", 1, [&](int n, std::mt19937_64& rng) -> Witness {
            if (hdiff(hdiff(random_cochain(A, n, rng))).is_zero()) return std::nullopt;
            return std::string("d^2 f != 0");
        });
        checks("Delta^2 = 0", 2, [&](int n, std::mt19937_64& rng) -> Witness {
            const Cochain f = random_cochain(A, n, rng);
            if (n < 2 || cdelta(cdelta(f)).is_zero()) return std::nullopt;
            return std::string("Delta^2 f != 0");
        });
        checks("Delta d + d Delta = 0", 3, [&](int n, std::mt19937_64& rng) -> Witness {
            const Cochain f = random_cochain(A, n, rng);
            const Cochain dd = cdelta(hdiff(f));
            if (n == 0 ? dd.is_zero() : same(dd, hdiff(cdelta(f)) * Q(-1))) return std::nullopt;
            return std::string("Delta d f != -d Delta f");
        });
        checks("cup Leibniz", 4, [&](int n, std::mt19937_64& rng) -> Witness {
            // split the arity budget between the two factors
            const int p = static_cast<int>(rng() % (n + 1)), q = n - p;
            const Cochain f = random_cochain(A, p, rng), g = random_cochain(A, q, rng);
            const Cochain lhs = hdiff(cup(f, g));
            const Cochain rhs = cup(hdiff(f), g) + cup(f, hdiff(g)) * Q(sign_of(p));
            if (same(lhs, rhs)) return std::nullopt;
            return "p=" + std::to_string(p) + " q=" + std::to_string(q);
        });
    }
    return r;
}

// ---- action ----

SuiteReport suite_action(const SuiteConfig& c)
{
    const int n = pick(c.n, 2), md = c.max_degree >= 0 ? c.max_degree : 1, trials = pick(c.trials, 3);
    constexpr int kMaxArity = 2;
    SuiteReport r;
    for (const auto& name : algebras_or(c, {"dual", "z2"})) {
        const AlgebraPtr A = algebra_named(name);
        const std::size_t T = static_cast<std::size_t>(trials);

        r.checks.push_back(run_cases("act(t0,f) = f " + name, T * 5, [&](std::size_t k) -> Witness {
            auto rng = case_rng(c.seed, 21, k);
            const Cochain f = random_cochain(A, static_cast<int>(k % 5), rng);
            if (same(act(point_cell(), {f}), f)) return std::nullopt;
            return "arity=" + std::to_string(f.arity()) + seed_note(name, c.seed, k);
        }));
        r.checks.push_back(run_cases("act(O',f) = Delta f " + name, T * 4, [&](std::size_t k) -> Witness {
            auto rng = case_rng(c.seed, 22, k);
            const Cochain f = random_cochain(A, 1 + static_cast<int>(k % 4), rng);
            if (same(act(delta_cell(), {f}), cdelta(f))) return std::nullopt;
            return "arity=" + std::to_string(f.arity()) + seed_note(name, c.seed, k);
        }));
        const auto pairs = arity_tuples(2, 3);
        r.checks.push_back(run_cases("act(tau2,f,g) = f cup g " + name, T * pairs.size(), [&](std::size_t k) -> Witness {
            auto rng = case_rng(c.seed, 23, k);
            const auto& ar = pairs[k % pairs.size()];
            const auto fs = random_list(A, ar, rng);
            if (same(act(product_cell(2), fs), cup(fs[0], fs[1]))) return std::nullopt;
            return "arities=" + str(ar) + seed_note(name, c.seed, k);
        }));
        struct Cb {
            int n, i;
            std::vector<int> ar;
        };
        std::vector<Cb> cbs;
        for (int m = 1; m <= std::min(n, 2); ++m)
            for (int i = 0; i <= m; ++i)
                for (auto& ar : arity_tuples(m + 1, 3))
                    if (std::all_of(ar.begin() + 1, ar.end(), [](int x) { return x <= kMaxArity; })) cbs.push_back({m, i, ar});
        r.checks.push_back(run_cases("cyclic brace " + name, cbs.size() * T, [&](std::size_t k) -> Witness {
            auto rng = case_rng(c.seed, 24, k);
            const Cb& x = cbs[k % cbs.size()];
            const auto fs = random_list(A, x.ar, rng);
            const std::vector<Cochain> gs(fs.begin() + 1, fs.end());
            if (same(act(cyclic_brace_cell(x.n, x.i), fs), cyclic_brace(fs[0], gs, x.i))) return std::nullopt;
            return "tree=" + serialize(cyclic_brace_cell(x.n, x.i)) + " arities=" + str(x.ar) + seed_note(name, c.seed, k);
        }));

        const auto cells = cells_upto(n, md);
        struct Op {
            const Tree *t, *t2;
            int i;
            std::vector<int> ar;
        };
        std::vector<Op> ops;
        for (const Tree& t : cells)
            for (const Tree& t2 : cells)
                for (int i = 1; i <= label_count(t); ++i)
                    for (auto& ar : arity_tuples(label_count(t) + label_count(t2) - 1, kMaxArity)) ops.push_back({&t, &t2, i, ar});
        r.checks.push_back(run_cases("operadicity " + name, ops.size(), [&](std::size_t k) -> Witness {
            auto rng = case_rng(c.seed, 25, k);
            const Op& x = ops[k];
            const auto fs = random_list(A, x.ar, rng);
            const int m = label_count(*x.t2);
            const Cochain lhs = act_chain(compose(*x.t, x.i, *x.t2), fs);
            const std::vector<Cochain> inner(fs.begin() + (x.i - 1), fs.begin() + (x.i - 1 + m));
            const Cochain mid = act(*x.t2, inner);
            Cochain rhs(A, 0);
            long pre = 0;
            for (int j = 0; j < x.i - 1; ++j) pre += x.ar[j];
            if (action_arity(*x.t2, {x.ar.begin() + (x.i - 1), x.ar.begin() + (x.i - 1 + m)}) >= 0) {
                std::vector<Cochain> outer(fs.begin(), fs.begin() + (x.i - 1));
                outer.push_back(mid);
                outer.insert(outer.end(), fs.begin() + (x.i - 1 + m), fs.end());
                rhs = act(*x.t, outer) * Q(sign_of(degree(*x.t2) * pre));
            }
            if (same(lhs, rhs)) return std::nullopt;
            return "t=" + serialize(*x.t) + " i=" + std::to_string(x.i) + " t2=" + serialize(*x.t2) + " arities=" + str(x.ar) +
                   seed_note(name, c.seed, k);
        }));

        struct Cm {
            const Tree* t;
            std::vector<int> ar;
        };
        std::vector<Cm> cms;
        for (const Tree& t : cells)
            for (auto& ar : arity_tuples(label_count(t), kMaxArity)) cms.push_back({&t, ar});
        r.checks.push_back(run_cases("chain map " + name, cms.size() * T, [&](std::size_t k) -> Witness {
            auto rng = case_rng(c.seed, 26, k);
            const Cm& x = cms[k % cms.size()];
            const auto fs = random_list(A, x.ar, rng);
            const int deg = degree(*x.t);
            const Cochain base = act(*x.t, fs);
            const Cochain lhs = action_arity(*x.t, x.ar) >= 0 ? hdiff(base) : Cochain(A, 0);
            Cochain rhs = act_chain(boundary(*x.t), fs);
            long pre = 0;
            for (std::size_t i = 0; i < fs.size(); ++i) {
                auto gs = fs;
                gs[i] = hdiff(fs[i]);
                const Cochain term = act(*x.t, gs) * Q(sign_of(deg + pre));
                if (!term.is_zero()) rhs = rhs.is_zero() ? term : rhs + term;
                pre += x.ar[i];
            }
            if (same(lhs, rhs)) return std::nullopt;
            return "t=" + serialize(*x.t) + " arities=" + str(x.ar) + seed_note(name, c.seed, k);
        }));
    }
    return r;
}

// ---- BV ----

SuiteReport suite_bv(const SuiteConfig& c)
{
    const int D = c.max_degree >= 0 ? c.max_degree : 3;
    SuiteReport r;
    for (const auto& name : algebras_or(c, {"dual", "z2"})) {
        const AlgebraPtr A = algebra_named(name);
        std::vector<Cohomology> H;
        for (int p = 0; p <= D + 1; ++p) H.emplace_back(A, p);
        std::string dims;
        for (int p = 0; p <= D; ++p) dims += (p ? "," : "") + std::to_string(H[p].dimension());

        // Delta induced by O'; a nullopt stands for zero in negative arity.
        auto Delta = [&](const std::optional<Cochain>& f) -> std::optional<Cochain> {
            if (!f || f->arity() == 0) return std::nullopt;
            return act(delta_cell(), {*f});
        };
        auto Cup = [&](const std::optional<Cochain>& f, const std::optional<Cochain>& g) -> std::optional<Cochain> {
            if (!f || !g) return std::nullopt;
            return cup(*f, *g);
        };
        auto sum = [&](int arity, const std::vector<std::pair<int, std::optional<Cochain>>>& terms) {
            Cochain s(A, arity);
            for (const auto& [sg, t] : terms)
                if (t) s += *t * Q(sg);
            return s;
        };
        struct Rep {
            int p;
            int idx;
        };
        std::vector<Rep> reps;
        for (int p = 0; p <= D; ++p)
            for (int i = 0; i < H[p].dimension(); ++i) reps.push_back({p, i});
        auto rep = [&](const Rep& x) -> const Cochain& { return H[x.p].representatives()[x.idx]; };
        auto tag = [&](const Rep& x) { return "HH^" + std::to_string(x.p) + "[" + std::to_string(x.idx) + "]"; };

        CheckResult sq = run_cases("Delta^2 = 0 on HH " + name, reps.size(), [&](std::size_t k) -> Witness {
            const auto d = Delta(rep(reps[k]));
            if (d) H[d->arity()].reduce(*d); // throws unless Delta f is a cocycle
            const auto dd = Delta(d);
            if (!dd || H[dd->arity()].is_coboundary(*dd)) return std::nullopt;
            return tag(reps[k]) + " algebra=" + name;
        });
        sq.info = "HH dims " + dims;
        r.checks.push_back(sq);

        std::vector<std::pair<Rep, Rep>> pairs;
        for (const Rep& a : reps)
            for (const Rep& b : reps)
                if (a.p + b.p >= 1 && a.p + b.p <= D + 1) pairs.push_back({a, b});
        r.checks.push_back(run_cases("induced bracket = Gerstenhaber bracket " + name, pairs.size(), [&](std::size_t k) -> Witness {
            const auto& [x, y] = pairs[k];
            const Cochain &a = rep(x), &b = rep(y);
            const int p = x.p, N = x.p + y.p - 1;
            // (-1)^p (Delta(ab) - Delta(a) b - (-1)^p a Delta(b)) against [a,b]
            const Cochain induced =
                sum(N, {{1, Delta(cup(a, b))}, {-1, Cup(Delta(a), b)}, {-sign_of(p), Cup(a, Delta(b))}}) * Q(sign_of(p));
            if (H[N].is_coboundary(induced - bracket(a, b))) return std::nullopt;
            return tag(x) + " " + tag(y) + " algebra=" + name;
        }));

        std::vector<std::array<Rep, 3>> triples;
        for (const Rep& a : reps)
            for (const Rep& b : reps)
                for (const Rep& cc : reps)
                    if (a.p + b.p + cc.p >= 1 && a.p + b.p + cc.p <= D + 1) triples.push_back({a, b, cc});
        r.checks.push_back(run_cases("seven-term identity " + name, triples.size(), [&](std::size_t k) -> Witness {
            const auto& [x, y, z] = triples[k];
            const Cochain &a = rep(x), &b = rep(y), &cc = rep(z);
            const int p = x.p, q = y.p, N = x.p + y.p + z.p - 1;
            const Cochain lhs = *Delta(cup(cup(a, b), cc));
            const Cochain rhs = sum(N, {{1, Cup(Delta(cup(a, b)), cc)},
                                        {sign_of(p), Cup(a, Delta(cup(b, cc)))},
                                        {sign_of((p + 1) * q), Cup(b, Delta(cup(a, cc)))},
                                        {-1, Cup(Cup(Delta(a), b), cc)},
                                        {-sign_of(p), Cup(Cup(a, Delta(b)), cc)},
                                        {-sign_of(p + q), Cup(cup(a, b), Delta(cc))}});
            if (H[N].is_coboundary(lhs - rhs)) return std::nullopt;
            return tag(x) + " " + tag(y) + " " + tag(z) + " algebra=" + name;
        }));
    }
    return r;
}

} // namespace

int thread_count()
{
    if (const char* s = std::getenv("CACTI_THREADS")) {
        const int v = std::atoi(s);
        if (v > 0) return v;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"d2", "euler", "homology", "operad", "frobenius", "hochschild", "action", "bv"};
    return names;
}

bool SuiteReport::pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass(); });
}

long SuiteReport::cases() const
{
    long s = 0;
    for (const auto& c : checks) s += c.cases;
    return s;
}

long SuiteReport::failures() const
{
    long s = 0;
    for (const auto& c : checks) s += c.failures;
    return s;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& config)
{
    if (config.n < 0 || config.trials < 0) throw SuiteError("invalid config: negative n or trials");
    if (config.n > 4) throw SuiteError("invalid config: n > 4 is out of range");
    static const std::map<std::string, SuiteReport (*)(const SuiteConfig&)> table{
        {"d2", suite_d2},         {"euler", suite_euler},           {"homology", suite_homology}, {"operad", suite_operad},
        {"frobenius", suite_frobenius}, {"hochschild", suite_hochschild}, {"action", suite_action}, {"bv", suite_bv}};
    auto it = table.find(name);
    if (it == table.end()) throw SuiteError("unknown suite '" + name + "'");
    const auto start = std::chrono::steady_clock::now();
    SuiteReport r = it->second(config);
    r.suite = name;
    r.config = config;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

nlohmann::json to_json(const SuiteReport& r)
{
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) {
        nlohmann::json j{{"name", c.name}, {"pass", c.pass()}, {"cases", c.cases}, {"failures", c.failures}};
        if (!c.witness.empty()) j["witness"] = c.witness;
        if (!c.info.empty()) j["info"] = c.info;
        checks.push_back(j);
    }
    nlohmann::json cfg{{"seed", r.config.seed}};
    if (r.config.n > 0) cfg["n"] = r.config.n;
    if (r.config.max_degree >= 0) cfg["max_degree"] = r.config.max_degree;
    if (!r.config.algebra.empty()) cfg["algebra"] = r.config.algebra;
    if (r.config.trials > 0) cfg["trials"] = r.config.trials;
    return {{"suite", r.suite}, {"config", cfg},         {"pass", r.pass()},         {"cases", r.cases()},
            {"failures", r.failures()}, {"checks", checks}, {"seconds", r.seconds}};
}

std::string format_report(const SuiteReport& r)
{
    std::ostringstream os;
    os << "suite " << r.suite << ": " << (r.pass() ? "pass" : "FAIL") << " (" << r.cases() << " cases, " << r.failures()
       << " failures, " << r.seconds << " s)\n";
    for (const auto& c : r.checks) {
        os << "  " << (c.pass() ? "ok  " : "FAIL") << " " << c.name << " [" << c.cases << " cases";
        if (c.failures) os << ", " << c.failures << " failures";
        os << "]";
        if (!c.info.empty()) os << " " << c.info;
        os << "\n";
        if (!c.witness.empty()) os << "       witness: " << c.witness << "\n";
    }
    return os.str();
}

} // namespace cacti
