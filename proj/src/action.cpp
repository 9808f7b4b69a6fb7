#include "cacti/action.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace cacti {

namespace {

struct Symbol {
    int kind; // 0 f, 1 mu, 2 spine, 3 tail
    int id;
    int deg;
};

} // namespace

int koszul_sign(const RealizedTree& r, const std::vector<int>& ar)
{
    std::vector<Symbol> word;
    int mu = 0, edge = 0;
    std::function<void(const White&)> walk = [&](const White& w) {
        const RealVertex& v = r.vertices.at(w.label);
        word.push_back({0, w.label, ar.at(w.label - 1) - 1});
        for (std::size_t i = 1; i < v.items.size(); ++i) {
            const RealItem& it = v.items[i];
            ++edge;
            if (it.kind == Item::Tail) {
                word.push_back({3, edge, 1});
            } else if (it.kind == Item::Spine) {
                word.push_back({2, w.label, 1});
            } else if (it.kind == Item::Child) {
                const Black& b = w.blacks[it.child];
                ++mu;
                if (b.whites.size() >= 2) word.push_back({1, mu, static_cast<int>(b.whites.size()) - 1});
                for (const White& c : b.whites) walk(c);
            }
        }
    };
    if (r.tree.whites.size() >= 2) word.push_back({1, 0, static_cast<int>(r.tree.whites.size()) - 1});
    for (const White& w : r.tree.whites) walk(w);

    std::vector<std::size_t> canon(word.size());
    for (std::size_t i = 0; i < canon.size(); ++i) canon[i] = i;
    std::sort(canon.begin(), canon.end(), [&](std::size_t a, std::size_t b) {
        return std::pair(word[a].kind, word[a].id) < std::pair(word[b].kind, word[b].id);
    });
    std::vector<std::size_t> rank(word.size());
    for (std::size_t i = 0; i < canon.size(); ++i) rank[canon[i]] = i;
    long e = 0;
    for (std::size_t a = 0; a < word.size(); ++a) {
        if (word[a].deg % 2 == 0) continue;
        for (std::size_t b = a + 1; b < word.size(); ++b)
            if (word[b].deg % 2 != 0 && rank[a] > rank[b]) ++e;
    }
    for (const auto& [l, v] : r.vertices) e += static_cast<long>(v.p0) * ar.at(l - 1);
    return sign_of(e);
}

int cell_epsilon(const Tree& t)
{
    struct V {
        int label, b, d, idx;
    };
    std::vector<V> dfs;
    for (const White* w : whites_dfs(t))
        dfs.push_back({w->label, static_cast<int>(w->blacks.size()), w->dec, static_cast<int>(dfs.size())});
    long e = 0;
    for (std::size_t i = 0; i < dfs.size(); ++i)
        for (std::size_t j = i + 1; j < dfs.size(); ++j)
            if (dfs[i].label > dfs[j].label) e += 1 + (dfs[i].b % 2) * (dfs[j].b % 2);
    for (const V& v : dfs) {
        const int k = v.b + v.d;
        e += static_cast<long>(v.b) * v.idx + k * (k - 1) / 2 + v.d;
        if (v.d)
            for (const V& u : dfs)
                if (u.label < v.label) e += u.b + u.d;
    }
    return static_cast<int>(e % 2);
}

int action_sign(const RealizedTree& r, const std::vector<int>& ar)
{
    return koszul_sign(r, ar) * sign_of(decalage(ar) + cell_epsilon(r.tree));
}

Vec evaluate(const RealizedTree& r, const std::vector<Cochain>& fs, const std::vector<Vec>& tails)
{
    const FrobeniusAlgebra& A = *fs.at(0).algebra();
    std::size_t next_tail = 0;
    std::function<Vec(const Black&)> black;
    std::function<Vec(const White&)> white = [&](const White& w) -> Vec {
        const RealVertex& v = r.vertices.at(w.label);
        const Cochain& f = fs.at(w.label - 1);
        const int n = static_cast<int>(v.items.size());
        std::vector<Vec> vals(n);
        for (int i = 0; i < n; ++i) {
            switch (v.items[i].kind) {
            case Item::Out: break;
            case Item::Tail: vals[i] = tails.at(next_tail++); break;
            case Item::Spine: vals[i] = A.unit(); break;
            case Item::Child: vals[i] = black(w.blacks[v.items[i].child]); break;
            }
        }
        if (v.p0 == 0) {
            std::vector<Vec> args(vals.begin() + 1, vals.end());
            return f.ev(args);
        }
        // The first flag in spine order is not the outgoing one: dualize through eta.
        Vec phi(A.dim());
        for (int k = 0; k < A.dim(); ++k) {
            vals[0] = A.basis(k);
            std::vector<Vec> args;
            for (int i = 1; i < n; ++i) args.push_back(vals[(v.p0 + i) % n]);
            phi[k] = A.pair(vals[v.p0], f.ev(args));
        }
        return A.dual_elem(phi);
    };
    black = [&](const Black& b) {
        Vec acc = A.unit();
        for (const White& w : b.whites) acc = A.prod(acc, white(w));
        return acc;
    };
    Vec acc = A.unit();
    for (const White& w : r.tree.whites) acc = A.prod(acc, white(w));
    return acc;
}

namespace {

std::vector<int> arities_of(const std::vector<Cochain>& fs)
{
    std::vector<int> ar;
    for (const auto& f : fs) ar.push_back(f.arity());
    return ar;
}

bool arities_match(const RealizedTree& r, const std::vector<Cochain>& fs)
{
    for (const auto& [l, v] : r.vertices)
        if (l < 1 || l > static_cast<int>(fs.size()) || v.arity() != fs[l - 1].arity()) return false;
    return true;
}

} // namespace

Q correlate(const RealizedTree& r, const std::vector<Cochain>& fs, const Vec& a0, const std::vector<Vec>& tails)
{
    if (static_cast<int>(fs.size()) != label_count(r.tree)) throw std::invalid_argument("one cochain per label expected");
    if (!arities_match(r, fs)) return 0;
    if (static_cast<int>(tails.size()) != r.tail_count()) throw std::invalid_argument("one input per free tail expected");
    const FrobeniusAlgebra& A = *fs[0].algebra();
    for (const auto& f : fs)
        if (f.algebra()->name() != A.name()) throw std::invalid_argument("cochains over different algebras");
    return action_sign(r, arities_of(fs)) * A.pair(a0, evaluate(r, fs, tails));
}

int action_arity(const Tree& t, const std::vector<int>& ar)
{
    int n = -degree(t);
    for (int a : ar) n += a;
    return n;
}

Cochain act(const Tree& t, const std::vector<Cochain>& fs)
{
    if (static_cast<int>(fs.size()) != label_count(t)) throw std::invalid_argument("one cochain per label expected");
    const AlgebraPtr& a = fs.at(0).algebra();
    const auto ar = arities_of(fs);
    const int N = action_arity(t, ar);
    if (N < 0) return Cochain(a, 0);
    Cochain out(a, N);
    const int d = a->dim();
    for (const RealizedTree& r : realizations(t, ar)) {
        const int s = action_sign(r, ar);
        for (std::size_t k = 0; k < out.keys(); ++k) {
            std::vector<Vec> tails;
            for (int x : out.key_tuple(k)) tails.push_back(a->basis(x));
            Vec v = evaluate(r, fs, tails);
            for (int j = 0; j < d; ++j)
                if (v[j] != 0) out.at(k, j) += s * v[j];
        }
    }
    return out;
}

Cochain act_chain(const Chain& c, const std::vector<Cochain>& fs)
{
    int N = -c.degree();
    for (const auto& f : fs) N += f.arity();
    Cochain out(fs.at(0).algebra(), std::max(N, 0));
    if (N < 0) return out;
    for (const auto& [t, x] : c.terms()) out += act(t, fs) * Q(x);
    return out;
}

namespace {

// Planar graph used for substitution: cyclic half-edge lists per node.
struct Graph {
    enum Kind { W, B, T, S, R };
    struct Node {
        Kind kind;
        int label = 0;
        std::vector<int> hes;
        int p0 = -1;
        bool dead = false;
    };
    std::vector<Node> nodes;
    std::vector<int> mate, owner;

    int node(Kind k, int label = 0)
    {
        nodes.push_back({k, label, {}, -1, false});
        return static_cast<int>(nodes.size()) - 1;
    }
    int he(int n)
    {
        mate.push_back(-1);
        owner.push_back(n);
        nodes[n].hes.push_back(static_cast<int>(mate.size()) - 1);
        return static_cast<int>(mate.size()) - 1;
    }
    void link(int a, int b)
    {
        mate[a] = b;
        mate[b] = a;
    }

    struct Built {
        int root_leaf;
        std::map<int, int> white_of; // label -> node
        std::vector<int> tail_leaves; // planar order
    };

    Built add(const RealizedTree& r, const std::function<int(int)>& lab)
    {
        Built out;
        out.root_leaf = node(R);
        const int b0 = node(B);
        link(he(out.root_leaf), he(b0));
        std::function<void(const White&, int)> white = [&](const White& w, int parent) {
            const RealVertex& v = r.vertices.at(w.label);
            const int x = node(W, lab(w.label));
            out.white_of[lab(w.label)] = x;
            for (std::size_t i = 0; i < v.items.size(); ++i) {
                const int h = he(x);
                if (static_cast<int>(i) == v.p0) nodes[x].p0 = h;
                switch (v.items[i].kind) {
                case Item::Out: link(h, he(parent)); break;
                case Item::Tail: {
                    const int t = node(T);
                    link(h, he(t));
                    out.tail_leaves.push_back(t);
                    break;
                }
                case Item::Spine: link(h, he(node(S))); break;
                case Item::Child: {
                    const int b = node(B);
                    link(h, he(b));
                    for (const White& c : w.blacks[v.items[i].child].whites) white(c, b);
                    break;
                }
                }
            }
        };
        for (const White& w : r.tree.whites) white(w, b0);
        return out;
    }

    // Reads the rooted realized tree hanging off the root leaf.
    std::optional<RealizedTree> extract(int root_leaf)
    {
        RealizedTree r;
        bool ok = true;
        std::function<White(int, int)> white = [&](int x, int in) {
            const Node& nd = nodes[x];
            const auto& hs = nd.hes;
            const int n = static_cast<int>(hs.size());
            const int s0 = static_cast<int>(std::find(hs.begin(), hs.end(), in) - hs.begin());
            White w;
            w.label = nd.label;
            RealVertex v;
            v.label = nd.label;
            int spines = 0, children = 0, spine_angle = 0;
            for (int i = 0; i < n; ++i) {
                const int h = hs[(s0 + i) % n];
                if (h == nd.p0) v.p0 = i;
                if (i == 0) {
                    v.items.push_back({Item::Out, -1});
                    continue;
                }
                const Node& other = nodes[owner[mate[h]]];
                if (other.kind == T) {
                    v.items.push_back({Item::Tail, -1});
                } else if (other.kind == S) {
                    v.items.push_back({Item::Spine, -1});
                    ++spines;
                    spine_angle = children;
                } else if (other.kind == B) {
                    Black b;
                    const auto& bh = other.hes;
                    const int m = static_cast<int>(bh.size());
                    const int t0 = static_cast<int>(std::find(bh.begin(), bh.end(), mate[h]) - bh.begin());
                    for (int j = 1; j < m; ++j) {
                        const int g = bh[(t0 + j) % m];
                        b.whites.push_back(white(owner[mate[g]], mate[g]));
                    }
                    v.items.push_back({Item::Child, children++});
                    w.blacks.push_back(std::move(b));
                } else {
                    ok = false;
                }
            }
            if (spines > 1 || v.p0 < 0) ok = false;
            const RealItem& first = v.items[std::max(v.p0, 0)];
            if (spines == 1) {
                if (first.kind != Item::Spine) ok = false;
                w.dec = 1;
                w.mark = spine_angle;
            } else {
                if (first.kind == Item::Tail) ok = false;
                w.dec = 0;
                w.mark = first.kind == Item::Child ? first.child + 1 : 0;
            }
            r.vertices[w.label] = std::move(v);
            return w;
        };
        const int b0 = owner[mate[nodes[root_leaf].hes[0]]];
        const auto& bh = nodes[b0].hes;
        const int m = static_cast<int>(bh.size());
        const int t0 = static_cast<int>(std::find(bh.begin(), bh.end(), mate[nodes[root_leaf].hes[0]]) - bh.begin());
        for (int j = 1; j < m; ++j) {
            const int g = bh[(t0 + j) % m];
            if (nodes[owner[mate[g]]].kind != W) return std::nullopt;
            r.tree.whites.push_back(white(owner[mate[g]], mate[g]));
        }
        if (!ok) return std::nullopt;
        return r;
    }
};

} // namespace

std::optional<RealizedTree> foliage_substitute(const RealizedTree& r, int i, const RealizedTree& r2)
{
    auto vit = r.vertices.find(i);
    if (vit == r.vertices.end()) throw std::invalid_argument("no vertex with label " + std::to_string(i));
    const RealVertex& vi = vit->second;
    if (r2.tail_count() != vi.arity()) return std::nullopt;
    const int m = label_count(r2.tree);
    Graph g;
    // vertex i gets the placeholder label 0 until r2 replaces it
    auto b1 = g.add(r, [&](int l) { return l < i ? l : l == i ? 0 : l + m - 1; });
    auto b2 = g.add(r2, [&](int l) { return l + i - 1; });
    const int v = b1.white_of.at(0);
    const std::vector<int> L = g.nodes[v].hes;
    const int n = static_cast<int>(L.size());
    const int p = static_cast<int>(std::find(L.begin(), L.end(), g.nodes[v].p0) - L.begin());
    g.nodes[v].dead = true;
    const int root2_he = g.mate[g.nodes[b2.root_leaf].hes[0]];
    for (int j = 0; j < n; ++j) {
        const int h = g.mate[L[(p + j) % n]];
        if (j == 0) {
            const int B2 = g.owner[root2_he];
            const int X = g.owner[h];
            auto& b2h = g.nodes[B2].hes;
            const int at = static_cast<int>(std::find(b2h.begin(), b2h.end(), root2_he) - b2h.begin());
            std::vector<int> rest;
            for (std::size_t k = 1; k < b2h.size(); ++k) rest.push_back(b2h[(at + k) % b2h.size()]);
            if (g.nodes[X].kind == Graph::S) {
                // the spine of vertex i lands on the root point of r2
                if (rest.size() != 1) return std::nullopt;
                g.link(h, g.mate[rest[0]]);
            } else if (g.nodes[X].kind == Graph::B) {
                auto& xh = g.nodes[X].hes;
                auto pos = std::find(xh.begin(), xh.end(), h);
                pos = xh.erase(pos);
                xh.insert(pos, rest.begin(), rest.end());
                for (int e : rest) g.owner[e] = X;
            } else {
                return std::nullopt;
            }
            g.nodes[B2].dead = true;
        } else {
            const int leaf = b2.tail_leaves.at(j - 1);
            g.link(h, g.mate[g.nodes[leaf].hes[0]]);
            g.nodes[leaf].dead = true;
        }
    }
    return g.extract(b1.root_leaf);
}

} // namespace cacti
