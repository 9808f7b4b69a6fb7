#pragma once

// Operad structure on cellular chains: partial composition, multi-composition, memo.

#include "cacti/chain.hpp"

#include <mutex>
#include <string>
#include <unordered_map>

namespace cacti {

// t o_i t': lobe i of t is replaced by the cactus t'. Computed on metric
// representatives; each term carries the sign of the gluing map's Jacobian.
Chain compose(const Tree& t, int i, const Tree& t2);
Chain compose(const Chain& a, int i, const Chain& b);

// gamma(t; a_1..a_n) as iterated composition from the highest slot down.
Chain gamma(const Tree& t, const std::vector<Tree>& args);
Chain gamma(const Chain& t, const std::vector<Chain>& args);

// Thread-safe memo of compose, keyed by serialized operands.
class CompositionTable {
public:
    Chain get(const Tree& t, int i, const Tree& t2);
    std::size_t size() const;

private:
    mutable std::mutex mu_;
    std::unordered_map<std::string, Chain> memo_;
};

} // namespace cacti
