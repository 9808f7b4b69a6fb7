#include "cacti/operad.hpp"

#include "cacti/cactus.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace cacti {

namespace {

// Arc lengths keyed by (lobe, arc start point); spine offsets from the marked point.
struct Geometry {
    std::map<int, std::map<int, Q>> arc;
    std::map<int, Q> sp;
};

struct Slot {
    int lobe;
    int start;
    int part; // -1: arc without spine, 0/1: before/after the spine
};

void lobe_coords(const Cactus& c, const std::map<int, int>& par, const Geometry& g, int lobe, std::vector<Q>& out)
{
    const Lobe& L = c.lobes.at(lobe);
    auto pts = rotate_to(L.pts, par.at(lobe));
    for (std::size_t a = 1; a < pts.size(); ++a) out.push_back(g.arc.at(lobe).at(pts[a]));
    if (L.dec == 1) out.push_back(g.sp.at(lobe));
}

void lobe_from_coords(const Cactus& c, const std::map<int, int>& par, int lobe, const std::vector<Q>& z,
                      std::size_t& i, Geometry& g)
{
    const Lobe& L = c.lobes.at(lobe);
    auto pts = rotate_to(L.pts, par.at(lobe));
    auto& arc = g.arc[lobe];
    Q rest = 1;
    for (std::size_t a = 1; a < pts.size(); ++a) {
        arc[pts[a]] = z.at(i++);
        rest -= arc[pts[a]];
    }
    arc[pts[0]] = rest;
    if (L.dec == 1) g.sp[lobe] = z.at(i++);
}

// Chart of the target cell: lobes in label order.
std::vector<Q> chart(const Cactus& c, const Geometry& g)
{
    auto par = lobe_parents(c);
    std::vector<Q> v;
    for (const auto& [label, L] : c.lobes) lobe_coords(c, par, g, label, v);
    return v;
}

std::vector<std::pair<int, int>> perimeter(const Cactus& c)
{
    std::vector<std::pair<int, int>> out;
    std::function<void(int, int)> lobe = [&](int id, int parent) {
        auto pts = rotate_to(c.lobes.at(id).pts, parent);
        for (std::size_t a = 0; a < pts.size(); ++a) {
            out.push_back({id, pts[a]});
            if (a + 1 < pts.size()) {
                int q = pts[a + 1];
                auto ls = rotate_to(c.points.at(q), id);
                for (std::size_t j = 1; j < ls.size(); ++j) lobe(ls[j], q);
            }
        }
    };
    auto ls = rotate_to(c.points.at(c.root), kRootMark);
    for (std::size_t j = 1; j < ls.size(); ++j) lobe(ls[j], c.root);
    return out;
}

std::vector<Slot> slots(const Cactus& d)
{
    std::vector<Slot> out;
    for (auto [id, p] : perimeter(d)) {
        const Lobe& L = d.lobes.at(id);
        if (L.dec == 1 && L.mark == p) {
            out.push_back({id, p, 0});
            out.push_back({id, p, 1});
        } else {
            out.push_back({id, p, -1});
        }
    }
    return out;
}

// Points of lobe v read from its mark (dec=0) or from just after its spine (dec=1).
std::vector<int> vseq(const Cactus& c, int v)
{
    const Lobe& L = c.lobes.at(v);
    if (L.dec == 0) {
        auto r = rotate_to(L.pts, L.mark);
        return {r.begin() + 1, r.end()};
    }
    return rotate_to(L.pts, cyc_next(L.pts, L.mark));
}

std::optional<std::pair<Cactus, Geometry>> geo_compose(const Cactus& c, int v, const Cactus& d, const Geometry& gc,
                                                       const Geometry& gd)
{
    const Q m = static_cast<long>(d.lobes.size());
    const Lobe& L = c.lobes.at(v);
    const auto S = vseq(c, v);
    std::vector<Q> pos;
    const auto& av = gc.arc.at(v);
    if (L.dec == 0) {
        Q x = 0;
        int prev = L.mark;
        for (int p : S) {
            x += av.at(prev);
            pos.push_back(x * m);
            prev = p;
        }
    } else {
        Q x = av.at(L.mark) - gc.sp.at(v);
        pos.push_back(x * m);
        int prev = S[0];
        for (std::size_t a = 1; a < S.size(); ++a) {
            x += av.at(prev);
            pos.push_back(x * m);
            prev = S[a];
        }
    }
    struct Seg {
        int lobe, start;
        Q off, len;
    };
    std::vector<Seg> segs;
    Q s = 0;
    for (auto [id, p] : perimeter(d)) {
        const Q& ln = gd.arc.at(id).at(p);
        segs.push_back({id, p, s, ln});
        s += ln;
    }
    std::map<std::pair<int, int>, std::vector<std::pair<Q, int>>> land;
    for (std::size_t j = 0; j < S.size(); ++j) {
        const Q& p = pos[j];
        bool placed = false;
        for (const auto& sg : segs) {
            if (sg.off < p && p < sg.off + sg.len) {
                land[{sg.lobe, sg.start}].push_back({p - sg.off, S[j]});
                placed = true;
                break;
            }
            if (p == sg.off || p == sg.off + sg.len) return std::nullopt;
        }
        if (!placed) return std::nullopt;
    }

    Cactus e;
    e.lobes = c.lobes;
    e.lobes.erase(v);
    for (const auto& [id, U] : d.lobes) e.lobes[id] = U;
    e.points = c.points;
    for (const auto& [id, P] : d.points) e.points[id] = P;
    e.root = c.root;
    e.next_point = std::max(c.next_point, d.next_point);
    Geometry g;
    g.arc = gc.arc;
    g.arc.erase(v);
    for (const auto& [id, a] : gd.arc) g.arc[id] = a;
    g.sp = gc.sp;
    g.sp.erase(v);
    for (const auto& [id, y] : gd.sp) g.sp[id] = y;

    for (const auto& [key, lst] : land) {
        const auto [id, q] = key;
        Lobe& U = e.lobes.at(id);
        const Q ln = g.arc[id][q];
        int prevpt = q;
        Q prevoff = 0;
        auto idx = std::find(U.pts.begin(), U.pts.end(), q) - U.pts.begin();
        std::optional<std::pair<int, Q>> spmoved;
        const bool spine_here = U.dec == 1 && U.mark == q;
        for (const auto& [off, p] : lst) {
            std::replace(e.points[p].begin(), e.points[p].end(), v, id);
            ++idx;
            U.pts.insert(U.pts.begin() + idx, p);
            g.arc[id][prevpt] = off - prevoff;
            if (spine_here && !spmoved) {
                if (off > g.sp[id]) spmoved = {prevpt, g.sp[id] - prevoff};
                else if (off == g.sp[id]) return std::nullopt;
            }
            prevpt = p;
            prevoff = off;
        }
        g.arc[id][prevpt] = ln - prevoff;
        if (spine_here) {
            if (!spmoved) spmoved = {prevpt, g.sp[id] - prevoff};
            U.mark = spmoved->first;
            g.sp[id] = spmoved->second;
        }
    }

    const int b0 = d.root;
    auto rl = rotate_to(e.points.at(b0), kRootMark);
    std::vector<int> rootlobes(rl.begin() + 1, rl.end());
    if (L.dec == 0) {
        const int mpt = L.mark;
        auto& lst = e.points.at(mpt);
        auto it = std::find(lst.begin(), lst.end(), v);
        it = lst.erase(it);
        lst.insert(it, rootlobes.begin(), rootlobes.end());
        e.points.erase(b0);
        for (int k : rootlobes) {
            Lobe& U = e.lobes.at(k);
            std::replace(U.pts.begin(), U.pts.end(), b0, mpt);
            if (U.mark == b0) U.mark = mpt;
            auto& arc = g.arc.at(k);
            if (auto f = arc.find(b0); f != arc.end()) {
                Q val = f->second;
                arc.erase(f);
                arc[mpt] = val;
            }
        }
    } else if (rootlobes.size() == 1) {
        const int u = rootlobes[0];
        Lobe& U = e.lobes.at(u);
        if (U.dec != 0 || U.mark != b0) return std::nullopt;
        const int pp = cyc_prev(U.pts, b0);
        auto& arc = g.arc.at(u);
        const Q y = arc.at(pp);
        arc[pp] = arc.at(pp) + arc.at(b0);
        arc.erase(b0);
        U.pts.erase(std::find(U.pts.begin(), U.pts.end(), b0));
        U.dec = 1;
        U.mark = pp;
        g.sp[u] = y;
        e.points.erase(b0);
    } else {
        e.points[b0] = rootlobes;
    }
    return std::make_pair(std::move(e), std::move(g));
}

std::pair<Geometry, Geometry> base_geometry(const Cactus& c, const Cactus& d, int v, const std::vector<int>& dist)
{
    Geometry gd;
    for (const auto& [id, U] : d.lobes) {
        const long k = static_cast<long>(U.pts.size());
        for (int p : U.pts) gd.arc[id][p] = Q(1, k);
        if (U.dec == 1) gd.sp[id] = Q(1, 2 * k);
    }
    std::vector<std::pair<Q, Q>> ivs;
    Q s = 0;
    for (const auto& sl : slots(d)) {
        const Q& ln = gd.arc[sl.lobe][sl.start];
        if (sl.part == -1) {
            ivs.push_back({s, s + ln});
            s += ln;
        } else if (sl.part == 0) {
            ivs.push_back({s, s + gd.sp[sl.lobe]});
        } else {
            ivs.push_back({s + gd.sp[sl.lobe], s + ln});
            s += ln;
        }
    }
    const Q m = static_cast<long>(d.lobes.size());
    std::map<int, long> cnt, seen;
    for (int j : dist) ++cnt[j];
    std::vector<Q> pts;
    for (int j : dist) {
        auto [a, b] = ivs[j];
        ++seen[j];
        pts.push_back((a + (b - a) * Q(seen[j], cnt[j] + 1)) / m);
    }
    Geometry gc;
    for (const auto& [id, U] : c.lobes) {
        const long k = static_cast<long>(U.pts.size());
        for (int p : U.pts) gc.arc[id][p] = Q(1, k);
        if (U.dec == 1) gc.sp[id] = Q(1, 2 * k);
    }
    const Lobe& L = c.lobes.at(v);
    const auto S = vseq(c, v);
    auto& av = gc.arc[v];
    if (L.dec == 0) {
        Q prev = 0;
        int pp = L.mark;
        for (std::size_t a = 0; a < S.size(); ++a) {
            av[pp] = pts[a] - prev;
            prev = pts[a];
            pp = S[a];
        }
        av[pp] = 1 - prev;
    } else {
        const Q y = 1 - pts.back();
        av[L.mark] = y + pts[0];
        gc.sp[v] = y;
        for (std::size_t a = 0; a + 1 < S.size(); ++a) av[S[a]] = pts[a + 1] - pts[a];
    }
    return {gc, gd};
}

int det_sign(std::vector<std::vector<Q>> M)
{
    const std::size_t n = M.size();
    int s = 1;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t p = i;
        while (p < n && M[p][i] == 0) ++p;
        if (p == n) return 0;
        if (p != i) {
            std::swap(M[i], M[p]);
            s = -s;
        }
        if (M[i][i] < 0) s = -s;
        for (std::size_t r = i + 1; r < n; ++r) {
            if (M[r][i] == 0) continue;
            Q f = M[r][i] / M[i][i];
            for (std::size_t c = i; c < n; ++c) M[r][c] -= f * M[i][c];
        }
    }
    return s;
}

// Nondecreasing sequences of length len over [0, k).
template <class F>
void each_multiset(int k, int len, F&& f)
{
    std::vector<int> cur(len, 0);
    if (len == 0) {
        f(cur);
        return;
    }
    if (k == 0) return;
    while (true) {
        f(cur);
        int j = len - 1;
        while (j >= 0 && cur[j] == k - 1) --j;
        if (j < 0) return;
        ++cur[j];
        for (int r = j + 1; r < len; ++r) cur[r] = cur[j];
    }
}

} // namespace

Chain compose(const Tree& t, int i, const Tree& t2)
{
    const int n1 = label_count(t), m = label_count(t2);
    if (i < 1 || i > n1) throw std::invalid_argument("invalid slot " + std::to_string(i));
    const Tree ta = relabel(t, [&](int l) { return l < i ? l : (l > i ? l + m - 1 : 0); });
    const Tree tb = relabel(t2, [&](int l) { return l + i - 1; });
    const Cactus c = to_cactus(ta, 0);
    const Cactus d = to_cactus(tb, c.next_point);
    const int v = 0;
    const auto S = vseq(c, v);
    const auto sl = slots(d);
    const auto parc = lobe_parents(c), pard = lobe_parents(d);

    // t's lobes in their original label order (v sits at position i), then t''s lobes.
    std::vector<int> corder;
    for (const auto& [label, L] : c.lobes) corder.push_back(label);
    auto key = [&](int l) { return l == 0 ? i : (l < i ? l : l - m + 1); };
    std::sort(corder.begin(), corder.end(), [&](int a, int b) { return key(a) < key(b); });

    auto src_chart = [&](const Geometry& gc, const Geometry& gd) {
        std::vector<Q> z;
        for (int l : corder) lobe_coords(c, parc, gc, l, z);
        for (const auto& [l, U] : d.lobes) lobe_coords(d, pard, gd, l, z);
        return z;
    };
    auto from_src = [&](const std::vector<Q>& z) {
        Geometry gc, gd;
        std::size_t k = 0;
        for (int l : corder) lobe_from_coords(c, parc, l, z, k, gc);
        for (const auto& [l, U] : d.lobes) lobe_from_coords(d, pard, l, z, k, gd);
        return std::make_pair(gc, gd);
    };

    Chain out(n1 + m - 1, degree(t) + degree(t2));
    const Q eps(1, 1000000);
    each_multiset(static_cast<int>(sl.size()), static_cast<int>(S.size()), [&](const std::vector<int>& dist) {
        auto [gc, gd] = base_geometry(c, d, v, dist);
        auto r = geo_compose(c, v, d, gc, gd);
        if (!r) return;
        const Tree tree = to_tree(r->first);
        const auto z0 = src_chart(gc, gd);
        const auto w0 = chart(r->first, r->second);
        if (z0.size() != w0.size()) throw std::logic_error("composition changed the cell dimension");
        std::vector<std::vector<Q>> J;
        for (std::size_t j = 0; j < z0.size(); ++j) {
            auto z = z0;
            z[j] += eps;
            auto [hc, hd] = from_src(z);
            auto r2 = geo_compose(c, v, d, hc, hd);
            if (!r2 || to_tree(r2->first) != tree) throw std::logic_error("perturbation left the open cell");
            const auto w = chart(r2->first, r2->second);
            std::vector<Q> row;
            for (std::size_t a = 0; a < w.size(); ++a) row.push_back((w[a] - w0[a]) / eps);
            J.push_back(std::move(row));
        }
        const int sg = J.empty() ? 1 : det_sign(J);
        if (sg == 0) throw std::logic_error("singular gluing map");
        out.add(tree, sg);
    });
    return out;
}

Chain compose(const Chain& a, int i, const Chain& b)
{
    Chain out(a.n() + b.n() - 1, a.degree() + b.degree());
    for (const auto& [t, x] : a.terms())
        for (const auto& [u, y] : b.terms()) out.add(compose(t, i, u), x * y);
    return out;
}

Chain gamma(const Tree& t, const std::vector<Tree>& args)
{
    std::vector<Chain> cs;
    for (const auto& a : args) cs.push_back(Chain::of(a));
    return gamma(Chain::of(t), cs);
}

Chain gamma(const Chain& t, const std::vector<Chain>& args)
{
    if (static_cast<int>(args.size()) != t.n()) throw std::invalid_argument("gamma: arity mismatch");
    Chain cur = t;
    for (int i = t.n(); i >= 1; --i) cur = compose(cur, i, args[i - 1]);
    return cur;
}

Chain CompositionTable::get(const Tree& t, int i, const Tree& t2)
{
    const std::string key = serialize(t) + "|" + std::to_string(i) + "|" + serialize(t2);
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    Chain r = compose(t, i, t2);
    std::lock_guard<std::mutex> lock(mu_);
    return memo_.emplace(key, std::move(r)).first->second;
}

std::size_t CompositionTable::size() const
{
    std::lock_guard<std::mutex> lock(mu_);
    return memo_.size();
}

} // namespace cacti
