#pragma once

// Normalized Hochschild cochains of a Frobenius algebra and the classical
// operations on them: differential, cup, braces, bracket, Connes' Delta.

#include "cacti/frobenius.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <random>

namespace cacti {

// f(e_{i_1},...,e_{i_n}) = sum_j f[i_1..i_n][j] e_j, stored densely.
class Cochain {
public:
    Cochain() = default;
    Cochain(AlgebraPtr a, int arity);

    const AlgebraPtr& algebra() const { return a_; }
    int arity() const { return n_; }
    int dim() const { return d_; }
    std::size_t keys() const { return keys_; }

    // Key index of a basis tuple, first slot most significant.
    std::size_t key_index(const std::vector<int>& key) const;
    std::vector<int> key_tuple(std::size_t k) const;

    Q& at(std::size_t key, int j) { return data_[key * d_ + j]; }
    const Q& at(std::size_t key, int j) const { return data_[key * d_ + j]; }
    Vec value(std::size_t key) const;
    void set_value(std::size_t key, const Vec& v);

    // Multilinear evaluation on arbitrary elements.
    Vec ev(const std::vector<Vec>& args) const;

    bool is_zero() const;
    Cochain operator+(const Cochain& o) const;
    Cochain operator-(const Cochain& o) const;
    Cochain operator*(const Q& c) const;
    Cochain& operator+=(const Cochain& o);
    bool operator==(const Cochain& o) const;

    const std::vector<Q>& raw() const { return data_; }

private:
    void check_same(const Cochain& o) const;

    AlgebraPtr a_;
    int n_ = 0, d_ = 0;
    std::size_t keys_ = 1;
    std::vector<Q> data_;
};

// Builds a cochain from its values on basis tuples.
Cochain from_basis_fn(const AlgebraPtr& a, int arity, const std::function<Vec(const std::vector<int>&)>& fn);

// Projects every input away from the unit, so the result vanishes when any input is 1.
Cochain normalize(const Cochain& f);
bool is_normalized(const Cochain& f);
// Seeded normalized cochain with small rational entries.
Cochain random_cochain(const AlgebraPtr& a, int arity, std::mt19937_64& rng);

Cochain hdiff(const Cochain& f);
Cochain cup(const Cochain& f, const Cochain& g);
// f o_i g, i counted from 1.
Cochain circ(const Cochain& f, int i, const Cochain& g);
// f{g_1,...,g_k}; block p is signed by (|g_p|-1) times the number of inputs before it.
Cochain brace(const Cochain& f, const std::vector<Cochain>& gs);
Cochain bracket(const Cochain& f, const Cochain& g);
// Connes' operator: eta(a0, (Df)(a1..a_{n-1})) = eta(1, f(N(a0..a_{n-1}))). Needs arity >= 1.
Cochain cdelta(const Cochain& f);
// Decalage exponent of a cochain list: sum_{i<j} a_j (a_i - 1).
long decalage(const std::vector<int>& arities);

// Cyclic brace f{'g_{i+1},...,g_n, g_1,...,g_i}: f's inputs read cyclically from the spine,
// which sits between g_i and g_{i+1}; the spine slot carries the unit.
Cochain cyclic_brace(const Cochain& f, const std::vector<Cochain>& gs, int i);

// f~(a0,...,an) = eta(a0, f(a1..an)).
struct DualTensor {
    AlgebraPtr algebra;
    int arity = 0; // n; the tensor has n+1 slots
    std::vector<Q> data;
    bool operator==(const DualTensor& o) const { return arity == o.arity && data == o.data; }
};
DualTensor dualize(const Cochain& f);
Cochain undualize(const DualTensor& t);

nlohmann::json to_json(const Cochain& f);
// The algebra comes from `a` if given, else from the "algebra" field (builtin name).
Cochain cochain_from_json(const nlohmann::json& j, AlgebraPtr a = nullptr);

// HH^n by exact elimination on normalized cochain coordinates.
class Cohomology {
public:
    Cohomology(const AlgebraPtr& a, int n);

    int degree() const { return n_; }
    int dimension() const { return static_cast<int>(reps_.size()); }
    const std::vector<Cochain>& representatives() const { return reps_; }
    // Coset coordinates of a cocycle in the representative basis; throws if f is not a cocycle.
    Vec reduce(const Cochain& f) const;
    bool is_coboundary(const Cochain& f) const;

    // Coordinates of a normalized cochain: values on tuples avoiding the unit pivot.
    static Vec coords(const Cochain& f);
    static Cochain from_coords(const AlgebraPtr& a, int n, const Vec& c);

private:
    AlgebraPtr a_;
    int n_;
    Matrix basis_; // columns: image basis then representatives
    int image_rank_ = 0;
    std::vector<Cochain> reps_;
};

} // namespace cacti
