#pragma once

// Spine-decorated planar planted bipartite trees: the cells of K'(n).

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace cacti {

struct Black;

struct White {
    int label = 0;
    int dec = 0;  // 1 if the spine sits inside an angle
    int mark = 0; // flag index (dec=0) or angle index (dec=1); 0 is the outgoing flag
    std::vector<Black> blacks;

    auto operator<=>(const White&) const;
    bool operator==(const White&) const;
};

struct Black {
    std::vector<White> whites;

    auto operator<=>(const Black&) const = default;
    bool operator==(const Black&) const = default;
};

inline auto White::operator<=>(const White& o) const
{
    if (auto c = label <=> o.label; c != 0) return c;
    if (auto c = dec <=> o.dec; c != 0) return c;
    if (auto c = mark <=> o.mark; c != 0) return c;
    return blacks <=> o.blacks;
}
inline bool White::operator==(const White& o) const
{
    return label == o.label && dec == o.dec && mark == o.mark && blacks == o.blacks;
}

// The planted root is black; it holds the ordered forest of top white vertices.
struct Tree {
    std::vector<White> whites;

    auto operator<=>(const Tree&) const = default;
    bool operator==(const Tree&) const = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

class InvariantError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Tree parse_tree(const std::string& text);
std::string serialize(const Tree& t);

// Throws InvariantError on duplicate/missing labels or marks out of range.
void validate(const Tree& t);

int label_count(const Tree& t);
int degree(const Tree& t);

// White vertices in planar (depth-first) order.
std::vector<const White*> whites_dfs(const Tree& t);
std::map<int, const White*> whites_by_label(const Tree& t);

// Labels replaced by f(label); shape, decorations and marks unchanged.
Tree relabel(const Tree& t, const std::function<int(int)>& f);
// Permutation given as sigma[l-1] = new label of l.
Tree relabel(const Tree& t, const std::vector<int>& sigma);

// Orientation sign of relabelling: odd-dimensional vertex factors are
// reordered from the old label order into the new one.
int relabel_sign(const Tree& t, const std::function<int(int)>& f);

// All trees on labels 1..n of degree <= max_degree, ordered by (degree, serialized form).
std::vector<Tree> enumerate_cells(int n, int max_degree, bool spineless = false);

// Orders by degree first, then by serialized text.
struct CanonicalLess {
    bool operator()(const Tree& a, const Tree& b) const;
};

// Named cells used throughout.
Tree point_cell();             // t0: one lobe, a 0-cell
Tree delta_cell();             // O': one lobe, spine free on its arc
Tree product_cell(int n);      // tau_n^b: n lobes at the base point
Tree cyclic_brace_cell(int n, int i); // tau'_{n,i}: f's lobe with g_1..g_n, spine between g_i and g_{i+1}

} // namespace cacti
