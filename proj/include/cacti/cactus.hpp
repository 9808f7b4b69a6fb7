#pragma once

// Combinatorial cactus: lobes (white vertices) glued at points (black vertices).
// Used as the working form for boundary and composition.

#include "cacti/tree.hpp"

#include <map>
#include <vector>

namespace cacti {

inline constexpr int kRootMark = -1; // entry of the base point's lobe cycle standing for the root

struct Lobe {
    int label = 0;
    std::vector<int> pts; // cyclic, pts[0] is the attaching point when built from a tree
    int dec = 0;
    int mark = 0; // a point id; for dec=1 the marked arc starts here
};

struct Cactus {
    std::map<int, Lobe> lobes;              // keyed by label
    std::map<int, std::vector<int>> points; // cyclic list of lobe labels, kRootMark at the base
    int root = 0;
    int next_point = 0;

    int new_point() { return next_point++; }
};

// Points are numbered from point_base upward.
Cactus to_cactus(const Tree& t, int point_base = 0);
Tree to_tree(const Cactus& c);

// Collapses the arc of `lobe` starting at point p; false if degenerate.
bool collapse_arc(Cactus& c, int lobe, int p);

// Parent point of every lobe, seen from the root.
std::map<int, int> lobe_parents(const Cactus& c);

template <class T>
std::vector<T> rotate_to(const std::vector<T>& v, const T& x)
{
    std::vector<T> out;
    std::size_t i = 0;
    while (i < v.size() && !(v[i] == x)) ++i;
    for (std::size_t j = 0; j < v.size(); ++j) out.push_back(v[(i + j) % v.size()]);
    return out;
}

template <class T>
const T& cyc_next(const std::vector<T>& v, const T& x)
{
    std::size_t i = 0;
    while (!(v[i] == x)) ++i;
    return v[(i + 1) % v.size()];
}

template <class T>
const T& cyc_prev(const std::vector<T>& v, const T& x)
{
    std::size_t i = 0;
    while (!(v[i] == x)) ++i;
    return v[(i + v.size() - 1) % v.size()];
}

} // namespace cacti
