#include "cacti/homology.hpp"

#include <map>
#include <stdexcept>

namespace cacti {

long HomologyReport::euler() const
{
    long e = 0;
    for (std::size_t k = 0; k < cells.size(); ++k) e += (k % 2 == 0 ? 1 : -1) * cells[k];
    return e;
}

Matrix boundary_matrix(const std::vector<Tree>& cells, const std::vector<Tree>& faces)
{
    std::map<Tree, int> row;
    for (std::size_t i = 0; i < faces.size(); ++i) row[faces[i]] = static_cast<int>(i);
    Matrix m(static_cast<int>(faces.size()), static_cast<int>(cells.size()));
    for (std::size_t j = 0; j < cells.size(); ++j) {
        const Chain b = boundary(cells[j]);
        for (const auto& [t, c] : b.terms()) {
            auto it = row.find(t);
            if (it == row.end()) throw std::invalid_argument("face not among the given cells: " + serialize(t));
            m(it->second, static_cast<int>(j)) = Q(c);
        }
    }
    return m;
}

HomologyReport cellular_homology(int n, bool spineless)
{
    // Every non-root black has a white child, so sum k_v <= n-1 and the degree is at most 2n-1.
    std::vector<std::vector<Tree>> by_deg(2 * n);
    for (const Tree& t : enumerate_cells(n, 2 * n - 1, spineless)) by_deg[degree(t)].push_back(t);
    while (by_deg.size() > 1 && by_deg.back().empty()) by_deg.pop_back();
    HomologyReport h;
    h.n = n;
    h.spineless = spineless;
    const int top = static_cast<int>(by_deg.size()) - 1;
    std::vector<int> rk(top + 2, 0); // rk[k] = rank of boundary C_k -> C_{k-1}
    for (int k = 1; k <= top; ++k)
        if (!by_deg[k].empty() && !by_deg[k - 1].empty()) rk[k] = rank(boundary_matrix(by_deg[k], by_deg[k - 1]));
    for (int k = 0; k <= top; ++k) {
        h.cells.push_back(static_cast<long>(by_deg[k].size()));
        h.betti.push_back(static_cast<int>(by_deg[k].size()) - rk[k] - rk[k + 1]);
    }
    return h;
}

nlohmann::json to_json(const HomologyReport& h)
{
    return {{"n", h.n}, {"spineless", h.spineless}, {"cells", h.cells}, {"betti", h.betti}, {"euler", h.euler()}};
}

} // namespace cacti
