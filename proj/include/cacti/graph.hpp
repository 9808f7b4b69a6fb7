#pragma once

// Ribbon graphs: flags with an involution, a vertex map and cyclic orders at
// vertices. Cacti are the marked treelike ones; their dual is a decorated tree.

#include "cacti/tree.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cacti {

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RibbonGraph {
public:
    // vertices: id -> flags in cyclic order; edges: flag pairs; marks: flag -> label,
    // where label 0 marks the distinguished cycle. Throws GraphError if malformed.
    RibbonGraph(const std::map<int, std::vector<int>>& vertices, const std::vector<std::pair<int, int>>& edges,
                const std::map<int, int>& marks = {});

    std::vector<int> flags() const;
    std::vector<int> vertices() const;
    int vertex_count() const { return static_cast<int>(vflags_.size()); }
    int edge_count() const { return static_cast<int>(flags().size()) / 2; }
    int inv(int f) const { return inv_.at(f); }
    int vertex(int f) const { return vertex_.at(f); }
    int next(int f) const { return next_.at(f); }
    const std::vector<int>& flags_at(int v) const { return vflags_.at(v); }
    const std::map<int, int>& marks() const { return marks_; }

    // Orbits of N o i, each starting at its smallest flag, sorted by that flag.
    std::vector<std::vector<int>> cycles() const;
    int cycle_of(int f) const;
    bool connected() const;
    // Solves |V| - |E| + #cycles = 2 - 2g; throws if disconnected or not a non-negative integer.
    int genus() const;
    // Every cycle carries exactly one mark and every valence-two vertex is marked.
    bool is_marked() const;
    // Genus 0 and every edge has a flag on the distinguished cycle.
    bool is_treelike() const;
    std::optional<int> distinguished_cycle() const;

private:
    void validate() const;

    std::map<int, std::vector<int>> vflags_;
    std::map<int, int> inv_, vertex_, next_;
    std::map<int, int> marks_;
};

// Merges the endpoints of the edge of flag f; marks on removed flags move to
// the next surviving flag of their cycle. Loops are rejected.
RibbonGraph contract_edge(const RibbonGraph& g, int f);

// Black/white tree of a marked, labelled, treelike graph.
Tree dual_tree(const RibbonGraph& g);
// The cactus graph of a tree; dec=1 lobes get a marked valence-two vertex.
RibbonGraph cactus_graph(const Tree& t);
// All lobes marked at their attaching point.
bool is_spineless(const RibbonGraph& g);

// Text format, one item per line:
//   vertex <id> <flag>...   flags in cyclic order
//   edge <flag> <flag>
//   mark <flag> <label>     label 0 is the distinguished cycle
// Blank lines and lines starting with '#' are ignored.
RibbonGraph parse_graph(const std::string& text);
std::string format_graph(const RibbonGraph& g);

} // namespace cacti
