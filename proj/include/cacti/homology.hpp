#pragma once

// Cellular homology of the cell complexes K'(n) (all cells) and K(n) (spineless).

#include "cacti/chain.hpp"
#include "cacti/linalg.hpp"

#include <json.hpp>

#include <vector>

namespace cacti {

struct HomologyReport {
    int n = 0;
    bool spineless = false;
    std::vector<long> cells; // cell count per degree
    std::vector<int> betti;  // rational Betti numbers per degree
    long euler() const;
};

// Matrix of the boundary from the given cells into `faces`, rows indexed by faces.
Matrix boundary_matrix(const std::vector<Tree>& cells, const std::vector<Tree>& faces);

HomologyReport cellular_homology(int n, bool spineless = false);

nlohmann::json to_json(const HomologyReport& h);

} // namespace cacti
