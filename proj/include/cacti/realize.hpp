#pragma once

// Realizations of decorated trees: free tails in the angles of white
// vertices and a spine edge in the marked angle of each dec=1 vertex.

#include "cacti/tree.hpp"

#include <map>
#include <vector>

namespace cacti {

enum class Item { Out, Tail, Spine, Child };

struct RealItem {
    Item kind = Item::Out;
    int child = -1; // black child index for Item::Child
    auto operator<=>(const RealItem&) const = default;
};

// Items of a white vertex in planar cyclic order starting at the outgoing flag.
// p0 is the position of the first item in the spine order: the spine, or the marked flag.
struct RealVertex {
    int label = 0;
    std::vector<RealItem> items;
    int p0 = 0;
    int arity() const { return static_cast<int>(items.size()) - 1; }
    auto operator<=>(const RealVertex&) const = default;
};

struct RealizedTree {
    Tree tree;
    std::map<int, RealVertex> vertices; // by label

    int tail_count() const;
    auto operator<=>(const RealizedTree&) const = default;
};

// Per white vertex (by label): tail counts for each slot of its angles in
// planar order. A vertex with k black children has k+1 angles; the marked
// angle of a dec=1 vertex has two slots, before and after the spine.
using TailPlan = std::map<int, std::vector<int>>;

int slot_count(const White& w);
RealizedTree realize(const Tree& t, const TailPlan& plan);
// Forgets tails, spines and the root; recovers the decorated tree.
const Tree& underlying(const RealizedTree& r);

// All realizations in which vertex i has exactly arities[i-1] non-outgoing flags.
std::vector<RealizedTree> realizations(const Tree& t, const std::vector<int>& arities);

// Weight-edge order sign: edges taken in planar traversal order versus the
// blocked order (root, then per vertex in traversal order: children, tails,
// spine, each read from the vertex's first flag).
int weight_sign(const RealizedTree& r);

std::string describe(const RealizedTree& r);

} // namespace cacti
