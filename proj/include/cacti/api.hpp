#pragma once

// JSON-level entry points shared by the command line and the Python module.

#include "cacti/action.hpp"
#include "cacti/graph.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace cacti::api {

// One cochain object, an array of them, or {"cochains": [...]}. A non-empty
// algebra spec (builtin name or @file) overrides the objects' "algebra" field.
std::vector<Cochain> cochains_from_json(const nlohmann::json& j, const std::string& algebra = "");

// inputs: {"cochains": ..., "a0": [...], "tails": [[...], ...]}; sums the correlators
// of all realizations, i.e. eta(a0, act(t, f)(tails)).
Q correlate_inputs(const Tree& t, const nlohmann::json& inputs, const std::string& algebra = "");

// op is diff, delta, cup, bracket or normalize.
Cochain hh_op(const std::string& op, const std::vector<Cochain>& fs);

nlohmann::json hh_summary(const std::string& algebra, int degree);
nlohmann::json graph_info(const RibbonGraph& g);

} // namespace cacti::api
