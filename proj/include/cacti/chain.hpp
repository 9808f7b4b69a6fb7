#pragma once

// Cellular chains: integer combinations of decorated trees, and the boundary.

#include "cacti/rational.hpp"
#include "cacti/tree.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cacti {

class Chain {
public:
    Chain() = default;
    Chain(int n, int degree) : n_(n), degree_(degree), typed_(true) {}
    static Chain of(const Tree& t, const Z& c = 1);

    int n() const { return n_; }
    int degree() const { return degree_; }
    const std::map<Tree, Z>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Z coeff(const Tree& t) const;

    // Throws std::invalid_argument on a label-count or degree mismatch.
    void add(const Tree& t, const Z& c);
    void add(const Chain& o, const Z& c = 1);

    Chain operator+(const Chain& o) const;
    Chain operator-(const Chain& o) const;
    Chain operator*(const Z& c) const;
    bool operator==(const Chain& o) const;

    // Terms in canonical (degree, serialized) order.
    std::vector<std::pair<Tree, Z>> sorted_terms() const;

private:
    int n_ = 0;
    int degree_ = 0;
    bool typed_ = false;
    std::map<Tree, Z> terms_;
};

nlohmann::json to_json(const Chain& c);
Chain chain_from_json(const nlohmann::json& j);

// Cell boundary with the label-ordered product orientation (see README).
Chain boundary(const Tree& t);
Chain boundary(const Chain& c);

// Individual faces, exposed for inspection and tests.
// Arc a of vertex v runs from flag a to flag a+1; nullopt if the face is degenerate.
std::optional<Tree> angle_collapse(const Tree& t, int label, int arc);
Chain spine_flip(const Tree& t, int label);

// Chain-level symmetric group action, including the orientation sign.
Chain relabel_chain(const Chain& c, const std::vector<int>& sigma);

} // namespace cacti
