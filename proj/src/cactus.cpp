#include "cacti/cactus.hpp"

#include <algorithm>

namespace cacti {

namespace {

int build(Cactus& c, const White& w, int parent)
{
    Lobe L;
    L.label = w.label;
    L.dec = w.dec;
    L.pts.push_back(parent);
    for (const auto& b : w.blacks) {
        int p = c.new_point();
        c.points[p] = {w.label};
        L.pts.push_back(p);
        for (const auto& ch : b.whites) c.points[p].push_back(build(c, ch, p));
    }
    L.mark = L.pts[w.mark];
    c.lobes[w.label] = std::move(L);
    return w.label;
}

White read(const Cactus& c, int lobe, int parent)
{
    const Lobe& L = c.lobes.at(lobe);
    auto pts = rotate_to(L.pts, parent);
    White w{L.label, L.dec, 0, {}};
    for (std::size_t a = 0; a < pts.size(); ++a)
        if (pts[a] == L.mark) w.mark = static_cast<int>(a);
    for (std::size_t a = 1; a < pts.size(); ++a) {
        Black b;
        auto ls = rotate_to(c.points.at(pts[a]), lobe);
        for (std::size_t j = 1; j < ls.size(); ++j) b.whites.push_back(read(c, ls[j], pts[a]));
        w.blacks.push_back(std::move(b));
    }
    return w;
}

} // namespace

Cactus to_cactus(const Tree& t, int point_base)
{
    Cactus c;
    c.next_point = point_base;
    c.root = c.new_point();
    c.points[c.root] = {kRootMark};
    for (const auto& w : t.whites) {
        int id = build(c, w, c.root);
        c.points[c.root].push_back(id);
    }
    return c;
}

Tree to_tree(const Cactus& c)
{
    Tree t;
    auto ls = rotate_to(c.points.at(c.root), kRootMark);
    for (std::size_t j = 1; j < ls.size(); ++j) t.whites.push_back(read(c, ls[j], c.root));
    return t;
}

bool collapse_arc(Cactus& c, int lobe, int p)
{
    Lobe& L = c.lobes.at(lobe);
    if (L.pts.size() < 2) return false;
    if (L.dec == 1 && L.mark == p) return false;
    const int q = cyc_next(L.pts, p);
    auto x = rotate_to(c.points.at(p), lobe);
    auto y = rotate_to(c.points.at(q), lobe);
    std::vector<int> merged{lobe};
    merged.insert(merged.end(), x.begin() + 1, x.end());
    merged.insert(merged.end(), y.begin() + 1, y.end());
    c.points[p] = merged;
    c.points.erase(q);
    L.pts.erase(std::find(L.pts.begin(), L.pts.end(), q));
    if (c.root == q) c.root = p;
    for (auto& [id, M] : c.lobes) {
        if (M.mark == q) M.mark = p;
        if (id == lobe) continue;
        std::replace(M.pts.begin(), M.pts.end(), q, p);
    }
    return true;
}

std::map<int, int> lobe_parents(const Cactus& c)
{
    std::map<int, int> par;
    std::vector<int> stack{c.root};
    std::map<int, bool> seen{{c.root, true}};
    while (!stack.empty()) {
        int p = stack.back();
        stack.pop_back();
        for (int x : c.points.at(p)) {
            if (x == kRootMark || par.count(x)) continue;
            par[x] = p;
            for (int q : c.lobes.at(x).pts)
                if (!seen[q]) {
                    seen[q] = true;
                    stack.push_back(q);
                }
        }
    }
    return par;
}

} // namespace cacti
