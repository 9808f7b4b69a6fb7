#pragma once

// Action of cellular chains of cacti on normalized Hochschild cochains:
// correlators of realized trees and their sum over foliage.

#include "cacti/chain.hpp"
#include "cacti/hochschild.hpp"
#include "cacti/realize.hpp"

#include <optional>

namespace cacti {

// Bar-word Koszul sign of a realized tree with the given cochain arities (see README).
int koszul_sign(const RealizedTree& r, const std::vector<int>& arities);
// Orientation correction of a cell, 0 or 1.
int cell_epsilon(const Tree& t);
// Full sign of one realization: koszul_sign * (-1)^{decalage + cell_epsilon}.
int action_sign(const RealizedTree& r, const std::vector<int>& arities);

// Value of the tree at the root for basis-free inputs: tails read in planar order,
// spines carry the unit. fs[i] is the cochain of label i+1. Unsigned.
Vec evaluate(const RealizedTree& r, const std::vector<Cochain>& fs, const std::vector<Vec>& tails);

// Signed correlator eta(a0, value). Zero if some vertex arity differs from its cochain.
Q correlate(const RealizedTree& r, const std::vector<Cochain>& fs, const Vec& a0, const std::vector<Vec>& tails);

// Arity of act(t, fs): sum of arities minus the degree; negative means zero.
int action_arity(const Tree& t, const std::vector<int>& arities);
Cochain act(const Tree& t, const std::vector<Cochain>& fs);
Cochain act_chain(const Chain& c, const std::vector<Cochain>& fs);

// Substitutes r2 into vertex i of r: the root of r2 is matched with the first
// flag of vertex i in spine order, then tails of r2 with the remaining flags.
// Zero (nullopt) when the tail count of r2 differs from the arity of vertex i.
std::optional<RealizedTree> foliage_substitute(const RealizedTree& r, int i, const RealizedTree& r2);

} // namespace cacti
