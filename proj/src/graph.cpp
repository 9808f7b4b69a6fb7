#include "cacti/graph.hpp"

#include "cacti/cactus.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cacti {

RibbonGraph::RibbonGraph(const std::map<int, std::vector<int>>& vertices, const std::vector<std::pair<int, int>>& edges,
                         const std::map<int, int>& marks)
    : vflags_(vertices), marks_(marks)
{
    for (const auto& [v, fs] : vflags_) {
        for (std::size_t i = 0; i < fs.size(); ++i) {
            if (!vertex_.emplace(fs[i], v).second) throw GraphError("flag " + std::to_string(fs[i]) + " attached twice");
            next_[fs[i]] = fs[(i + 1) % fs.size()];
        }
    }
    for (auto [a, b] : edges) {
        if (a == b) throw GraphError("involution has a fixed point at flag " + std::to_string(a));
        if (!inv_.emplace(a, b).second || !inv_.emplace(b, a).second)
            throw GraphError("flag in two edges: " + std::to_string(inv_.count(a) ? a : b));
    }
    validate();
}

void RibbonGraph::validate() const
{
    for (const auto& [f, v] : vertex_)
        if (!inv_.count(f)) throw GraphError("flag " + std::to_string(f) + " has no partner");
    for (const auto& [f, g] : inv_)
        if (!vertex_.count(f)) throw GraphError("edge flag " + std::to_string(f) + " is not attached");
    for (const auto& [v, fs] : vflags_)
        if (fs.empty() && vflags_.size() > 1) throw GraphError("isolated vertex " + std::to_string(v));
    for (const auto& [f, l] : marks_) {
        if (!vertex_.count(f)) throw GraphError("mark on unknown flag " + std::to_string(f));
        if (l < 0) throw GraphError("negative label");
    }
    if (!connected()) throw GraphError("graph is not connected");
}

std::vector<int> RibbonGraph::flags() const
{
    std::vector<int> out;
    for (const auto& [f, v] : vertex_) out.push_back(f);
    return out;
}

std::vector<int> RibbonGraph::vertices() const
{
    std::vector<int> out;
    for (const auto& [v, fs] : vflags_) out.push_back(v);
    return out;
}

std::vector<std::vector<int>> RibbonGraph::cycles() const
{
    std::vector<std::vector<int>> out;
    std::set<int> seen;
    for (const auto& [f, v] : vertex_) {
        if (seen.count(f)) continue;
        std::vector<int> c;
        int x = f;
        do {
            c.push_back(x);
            seen.insert(x);
            x = next_.at(inv_.at(x));
        } while (x != f);
        out.push_back(std::move(c));
    }
    return out;
}

int RibbonGraph::cycle_of(int f) const
{
    auto cs = cycles();
    for (std::size_t i = 0; i < cs.size(); ++i)
        if (std::find(cs[i].begin(), cs[i].end(), f) != cs[i].end()) return static_cast<int>(i);
    throw GraphError("unknown flag " + std::to_string(f));
}

bool RibbonGraph::connected() const
{
    if (vflags_.empty()) return true;
    std::set<int> seen{vflags_.begin()->first};
    std::vector<int> stack{vflags_.begin()->first};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int f : vflags_.at(v)) {
            int w = vertex_.at(inv_.at(f));
            if (seen.insert(w).second) stack.push_back(w);
        }
    }
    return seen.size() == vflags_.size();
}

int RibbonGraph::genus() const
{
    if (!connected()) throw GraphError("genus of a disconnected graph");
    // Euler characteristic of the closed surface: V - E + #cycles = 2 - 2g.
    const int x = 2 - vertex_count() + edge_count() - static_cast<int>(cycles().size());
    if (x < 0 || x % 2 != 0) throw GraphError("non-integral genus; graph is corrupt");
    return x / 2;
}

std::optional<int> RibbonGraph::distinguished_cycle() const
{
    for (const auto& [f, l] : marks_)
        if (l == 0) return cycle_of(f);
    return std::nullopt;
}

bool RibbonGraph::is_marked() const
{
    auto cs = cycles();
    std::vector<int> count(cs.size(), 0);
    std::set<int> marked_vertices;
    for (const auto& [f, l] : marks_) {
        ++count[cycle_of(f)];
        marked_vertices.insert(vertex_.at(f));
    }
    for (int c : count)
        if (c != 1) return false;
    for (const auto& [v, fs] : vflags_)
        if (fs.size() == 2 && !marked_vertices.count(v)) return false;
    return true;
}

bool RibbonGraph::is_treelike() const
{
    auto c0 = distinguished_cycle();
    if (!c0 || genus() != 0) return false;
    const auto cs = cycles();
    std::set<int> on0(cs[*c0].begin(), cs[*c0].end());
    for (const auto& [f, g] : inv_)
        if (!on0.count(f) && !on0.count(g)) return false;
    return true;
}

RibbonGraph contract_edge(const RibbonGraph& g, int f)
{
    const int h = g.inv(f);
    const int v = g.vertex(f), w = g.vertex(h);
    if (v == w) throw GraphError("cannot contract the loop at flag " + std::to_string(f));
    std::map<int, std::vector<int>> vs;
    for (int u : g.vertices())
        if (u != v && u != w) vs[u] = g.flags_at(u);
    std::vector<int> merged;
    for (auto [x, at] : {std::pair{f, v}, std::pair{h, w}}) {
        auto l = rotate_to(g.flags_at(at), x);
        merged.insert(merged.end(), l.begin() + 1, l.end());
    }
    vs[v] = merged;
    std::vector<std::pair<int, int>> edges;
    for (int x : g.flags())
        if (x < g.inv(x) && x != f && x != h) edges.push_back({x, g.inv(x)});
    std::map<int, int> marks;
    for (auto [m, l] : g.marks()) {
        int x = m;
        while (x == f || x == h) {
            x = g.next(g.inv(x));
            if (x == m) break;
        }
        if (x != f && x != h) marks[x] = l;
    }
    return RibbonGraph(vs, edges, marks);
}

Tree dual_tree(const RibbonGraph& g)
{
    if (!g.is_marked()) throw GraphError("dual tree needs a marked graph");
    if (!g.is_treelike()) throw GraphError("dual tree needs a treelike graph");
    const auto cs = g.cycles();
    const int c0 = *g.distinguished_cycle();
    std::map<int, int> label_of_cycle, mark_of_cycle;
    for (auto [f, l] : g.marks()) {
        label_of_cycle[g.cycle_of(f)] = l;
        mark_of_cycle[g.cycle_of(f)] = f;
    }
    const int root = g.vertex(mark_of_cycle.at(c0));
    std::map<int, int> cyc;
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (int f : cs[i]) cyc[f] = static_cast<int>(i);

    // Valence-two vertices holding only a lobe mark are spines inside arcs.
    std::set<int> spine_points;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (static_cast<int>(i) == c0) continue;
        const int v = g.vertex(mark_of_cycle.at(static_cast<int>(i)));
        if (v != root && g.flags_at(v).size() == 2) spine_points.insert(v);
    }
    Cactus c;
    c.root = root;
    for (int v : g.vertices())
        if (!spine_points.count(v)) c.points[v] = {};
    c.next_point = g.vertices().empty() ? 0 : g.vertices().back() + 1;
    std::set<int> labels;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (static_cast<int>(i) == c0) continue;
        Lobe L;
        L.label = label_of_cycle.at(static_cast<int>(i));
        if (!labels.insert(L.label).second || L.label < 1) throw GraphError("lobe labels must be distinct and positive");
        const int mk = g.vertex(mark_of_cycle.at(static_cast<int>(i)));
        int last = -1;
        for (int f : cs[i]) {
            const int v = g.vertex(f);
            if (spine_points.count(v)) {
                if (v != mk) throw GraphError("unmarked valence-two vertex");
                L.dec = 1;
                L.mark = last;
                continue;
            }
            L.pts.push_back(v);
            last = v;
        }
        if (L.dec == 1 && L.mark < 0) L.mark = L.pts.back(); // the cycle started right after the spine
        if (L.dec == 0) L.mark = mk;
        c.lobes[L.label] = L;
    }
    for (auto& [v, ls] : c.points) {
        const auto& fs = g.flags_at(v);
        auto order = v == root ? rotate_to(fs, mark_of_cycle.at(c0)) : fs;
        for (int f : order) {
            if (cyc[f] != c0) ls.push_back(label_of_cycle.at(cyc[f]));
            else if (v == root && f == mark_of_cycle.at(c0)) ls.push_back(kRootMark);
        }
    }
    for (int l = 1; l <= static_cast<int>(labels.size()); ++l)
        if (!labels.count(l)) throw GraphError("lobe labels must be 1..n");
    Tree t = to_tree(c);
    validate(t);
    return t;
}

RibbonGraph cactus_graph(const Tree& t)
{
    Cactus c = to_cactus(t);
    std::map<int, std::vector<int>> vs;
    std::vector<std::pair<int, int>> edges;
    std::map<int, int> marks;
    int next_flag = 0, next_vertex = c.next_point;
    std::map<std::pair<int, int>, std::pair<int, int>> io; // (point, lobe) -> (in flag, out flag)
    for (const auto& [l, L] : c.lobes) {
        const int k = static_cast<int>(L.pts.size());
        std::vector<int> ins(k), outs(k);
        for (int a = 0; a < k; ++a) {
            ins[a] = next_flag++;
            outs[a] = next_flag++;
            io[{L.pts[a], l}] = {ins[a], outs[a]};
            if (L.dec == 0 && L.pts[a] == L.mark) marks[outs[a]] = l;
        }
        for (int a = 0; a < k; ++a) {
            const int b = (a + 1) % k;
            if (L.dec == 1 && L.pts[a] == L.mark) {
                const int s = next_vertex++;
                const int si = next_flag++, so = next_flag++;
                vs[s] = {si, so};
                edges.push_back({outs[a], si});
                edges.push_back({so, ins[b]});
                marks[so] = l;
            } else {
                edges.push_back({outs[a], ins[b]});
            }
        }
    }
    for (const auto& [p, ls] : c.points) {
        auto& fs = vs[p];
        for (int l : ls) {
            if (l == kRootMark) continue;
            auto [i, o] = io.at({p, l});
            fs.push_back(i);
            fs.push_back(o);
        }
    }
    const auto& rl = c.points.at(c.root);
    auto it = std::find(rl.begin(), rl.end(), kRootMark);
    int first = -1;
    for (std::size_t j = 1; j <= rl.size() && first < 0; ++j) {
        int l = rl[(it - rl.begin() + j) % rl.size()];
        if (l != kRootMark) first = l;
    }
    if (first >= 0) marks[io.at({c.root, first}).first] = 0;
    return RibbonGraph(vs, edges, marks);
}

bool is_spineless(const RibbonGraph& g)
{
    Tree t = dual_tree(g);
    for (const White* w : whites_dfs(t))
        if (w->dec != 0 || w->mark != 0) return false;
    return true;
}

RibbonGraph parse_graph(const std::string& text)
{
    std::map<int, std::vector<int>> vs;
    std::vector<std::pair<int, int>> edges;
    std::map<int, int> marks;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw) || kw[0] == '#') continue;
        auto fail = [&](const std::string& m) { throw GraphError("line " + std::to_string(lineno) + ": " + m); };
        if (kw == "vertex") {
            int id, f;
            if (!(ls >> id)) fail("vertex needs an id");
            if (vs.count(id)) fail("duplicate vertex");
            auto& fs = vs[id];
            while (ls >> f) fs.push_back(f);
            if (!ls.eof()) fail("bad flag list");
        } else if (kw == "edge") {
            int a, b;
            if (!(ls >> a >> b)) fail("edge needs two flags");
            edges.push_back({a, b});
        } else if (kw == "mark") {
            int f, l;
            if (!(ls >> f >> l)) fail("mark needs a flag and a label");
            marks[f] = l;
        } else {
            fail("unknown keyword '" + kw + "'");
        }
    }
    return RibbonGraph(vs, edges, marks);
}

std::string format_graph(const RibbonGraph& g)
{
    std::ostringstream out;
    for (int v : g.vertices()) {
        out << "vertex " << v;
        for (int f : g.flags_at(v)) out << " " << f;
        out << "\n";
    }
    for (int f : g.flags())
        if (f < g.inv(f)) out << "edge " << f << " " << g.inv(f) << "\n";
    for (auto [f, l] : g.marks()) out << "mark " << f << " " << l << "\n";
    return out.str();
}

} // namespace cacti
