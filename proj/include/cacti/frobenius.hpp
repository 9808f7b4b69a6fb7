#pragma once

// Finite-dimensional Frobenius algebras over Q: structure constants, unit,
// symmetric invariant nondegenerate pairing eta and its inverse.

#include "cacti/linalg.hpp"

#include <json.hpp>

#include <array>
#include <memory>
#include <stdexcept>
#include <string>

namespace cacti {

class AxiomError : public std::runtime_error {
public:
    AxiomError(const std::string& axiom, std::array<int, 3> witness);
    std::string axiom;
    std::array<int, 3> witness; // basis indices; unused slots are -1
};

class FrobeniusAlgebra {
public:
    const std::string& name() const { return name_; }
    int dim() const { return dim_; }

    // e_i e_j as a coordinate vector.
    const Vec& mul(int i, int j) const { return mul_[static_cast<std::size_t>(i) * dim_ + j]; }
    const Vec& unit() const { return unit_; }
    const Q& eta(int i, int j) const { return eta_(i, j); }
    const Q& eta_inv(int i, int j) const { return eta_inv_(i, j); }

    Vec basis(int i) const;
    Vec zero() const { return Vec(dim_); }
    Vec prod(const Vec& a, const Vec& b) const;
    Q pair(const Vec& a, const Vec& b) const;
    // The element psi with eta(psi, e_k) = phi[k] for all k.
    Vec dual_elem(const Vec& phi) const;

    // Normalization splits A = Q·1 ⊕ span{e_i : i != unit_pivot()}.
    int unit_pivot() const { return pivot_; }
    Vec project(const Vec& a) const;

    friend FrobeniusAlgebra make_algebra(const std::string&, int, const std::vector<std::vector<Vec>>&, const Vec&,
                                         const std::vector<Vec>&);

private:
    std::string name_;
    int dim_ = 0;
    std::vector<Vec> mul_;
    Vec unit_;
    Matrix eta_, eta_inv_;
    int pivot_ = 0;
};

using AlgebraPtr = std::shared_ptr<const FrobeniusAlgebra>;

// mul[i][j] = coordinates of e_i e_j. Checks every axiom on basis triples and
// throws AxiomError naming the first failure.
FrobeniusAlgebra make_algebra(const std::string& name, int dim, const std::vector<std::vector<Vec>>& mul,
                              const Vec& unit, const std::vector<Vec>& eta);

// dual, z2, z3, m2.
AlgebraPtr builtin_algebra(const std::string& name);
// Builtin name, or "@path" to an algebra JSON file.
AlgebraPtr load_algebra(const std::string& spec);

nlohmann::json to_json(const FrobeniusAlgebra& a);
FrobeniusAlgebra algebra_from_json(const nlohmann::json& j, const std::string& name = "custom");

// C = sum_ij eta^{ij} e_i (x) e_j, as the coefficient matrix.
Matrix casimir(const FrobeniusAlgebra& a);
// Contracting C against eta in either slot gives the identity.
bool snake_identity(const FrobeniusAlgebra& a);

} // namespace cacti
