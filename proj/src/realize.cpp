#include "cacti/realize.hpp"

#include "cacti/rational.hpp"

#include <functional>
#include <stdexcept>

namespace cacti {

int RealizedTree::tail_count() const
{
    int c = 0;
    for (const auto& [l, v] : vertices)
        for (const auto& it : v.items) c += it.kind == Item::Tail;
    return c;
}

int slot_count(const White& w) { return static_cast<int>(w.blacks.size()) + 1 + w.dec; }

namespace {

RealVertex build_vertex(const White& w, const std::vector<int>& slots)
{
    const int k = static_cast<int>(w.blacks.size());
    if (static_cast<int>(slots.size()) != slot_count(w))
        throw std::invalid_argument("tail plan for vertex " + std::to_string(w.label) + " has the wrong number of slots");
    RealVertex v;
    v.label = w.label;
    v.items.push_back({Item::Out, -1});
    int si = 0, spine_pos = -1, mark_pos = 0;
    auto tails = [&](int c) {
        if (c < 0) throw std::invalid_argument("negative tail count");
        for (int x = 0; x < c; ++x) v.items.push_back({Item::Tail, -1});
    };
    for (int a = 0; a <= k; ++a) {
        tails(slots[si++]);
        if (w.dec == 1 && a == w.mark) {
            spine_pos = static_cast<int>(v.items.size());
            v.items.push_back({Item::Spine, -1});
            tails(slots[si++]);
        }
        if (a < k) {
            if (w.dec == 0 && w.mark == a + 1) mark_pos = static_cast<int>(v.items.size());
            v.items.push_back({Item::Child, a});
        }
    }
    v.p0 = w.dec == 1 ? spine_pos : mark_pos;
    return v;
}

void each_composition(int total, int parts, const std::function<void(const std::vector<int>&)>& fn)
{
    std::vector<int> c(parts, 0);
    std::function<void(int, int)> rec = [&](int i, int rest) {
        if (i == parts - 1) {
            c[i] = rest;
            fn(c);
            return;
        }
        for (int x = 0; x <= rest; ++x) {
            c[i] = x;
            rec(i + 1, rest - x);
        }
    };
    if (parts == 0) {
        if (total == 0) fn(c);
        return;
    }
    rec(0, total);
}

} // namespace

RealizedTree realize(const Tree& t, const TailPlan& plan)
{
    RealizedTree r;
    r.tree = t;
    for (const White* w : whites_dfs(t)) {
        auto it = plan.find(w->label);
        std::vector<int> slots = it == plan.end() ? std::vector<int>(slot_count(*w), 0) : it->second;
        r.vertices[w->label] = build_vertex(*w, slots);
    }
    return r;
}

const Tree& underlying(const RealizedTree& r) { return r.tree; }

std::vector<RealizedTree> realizations(const Tree& t, const std::vector<int>& arities)
{
    auto ws = whites_dfs(t);
    if (static_cast<int>(arities.size()) != static_cast<int>(ws.size()))
        throw std::invalid_argument("one arity per white vertex expected");
    std::vector<std::vector<RealVertex>> per;
    for (const White* w : ws) {
        const int free = arities.at(w->label - 1) - static_cast<int>(w->blacks.size()) - w->dec;
        if (free < 0) return {};
        std::vector<RealVertex> opts;
        each_composition(free, slot_count(*w), [&](const std::vector<int>& c) { opts.push_back(build_vertex(*w, c)); });
        per.push_back(std::move(opts));
    }
    std::vector<RealizedTree> out;
    std::vector<std::size_t> pos(per.size(), 0);
    while (true) {
        RealizedTree r;
        r.tree = t;
        for (std::size_t i = 0; i < per.size(); ++i) r.vertices[ws[i]->label] = per[i][pos[i]];
        out.push_back(std::move(r));
        int i = static_cast<int>(per.size()) - 1;
        while (i >= 0 && ++pos[i] == per[i].size()) pos[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

int weight_sign(const RealizedTree& r)
{
    // Edge ids in planar traversal order; 0 is the root edge.
    std::vector<int> prec{0}, blocked{0};
    int ctr = 0;
    std::map<int, std::vector<int>> ids;
    std::function<void(const White&)> walk = [&](const White& w) {
        const RealVertex& v = r.vertices.at(w.label);
        auto& mine = ids[w.label];
        for (const auto& it : v.items) {
            if (it.kind == Item::Out) {
                mine.push_back(-1);
                continue;
            }
            mine.push_back(++ctr);
            prec.push_back(ctr);
            if (it.kind == Item::Child)
                for (const White& c : w.blacks[it.child].whites) walk(c);
        }
    };
    for (const White& w : r.tree.whites) walk(w);
    for (const White* w : whites_dfs(r.tree)) {
        const RealVertex& v = r.vertices.at(w->label);
        const int n = static_cast<int>(v.items.size());
        for (Item kind : {Item::Child, Item::Tail, Item::Spine})
            for (int i = 0; i < n; ++i) {
                const int p = (v.p0 + i) % n;
                if (v.items[p].kind == kind) blocked.push_back(ids[w->label][p]);
            }
    }
    std::vector<int> pos(prec.size());
    for (std::size_t i = 0; i < blocked.size(); ++i) pos[blocked[i]] = static_cast<int>(i);
    long inv = 0;
    for (std::size_t i = 0; i < prec.size(); ++i)
        for (std::size_t j = i + 1; j < prec.size(); ++j) inv += pos[prec[i]] > pos[prec[j]];
    return sign_of(inv);
}

std::string describe(const RealizedTree& r)
{
    std::string s = serialize(r.tree) + " |";
    for (const auto& [l, v] : r.vertices) {
        s += " " + std::to_string(l) + ":";
        for (std::size_t i = 0; i < v.items.size(); ++i) {
            if (static_cast<int>(i) == v.p0) s += "*";
            switch (v.items[i].kind) {
            case Item::Out: s += "o"; break;
            case Item::Tail: s += "t"; break;
            case Item::Spine: s += "s"; break;
            case Item::Child: s += "c" + std::to_string(v.items[i].child); break;
            }
        }
    }
    return s;
}

} // namespace cacti
