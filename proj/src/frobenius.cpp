#include "cacti/frobenius.hpp"

#include <fstream>

namespace cacti {

AxiomError::AxiomError(const std::string& ax, std::array<int, 3> w)
    : std::runtime_error([&] {
          std::string s = ax + " fails at basis";
          for (int x : w)
              if (x >= 0) s += " e" + std::to_string(x);
          return s;
      }()),
      axiom(ax), witness(w)
{
}

Vec FrobeniusAlgebra::basis(int i) const
{
    Vec v(dim_);
    v[i] = 1;
    return v;
}

Vec FrobeniusAlgebra::prod(const Vec& a, const Vec& b) const
{
    Vec r(dim_);
    for (int i = 0; i < dim_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < dim_; ++j) {
            if (b[j] == 0) continue;
            const Q c = a[i] * b[j];
            const Vec& m = mul(i, j);
            for (int k = 0; k < dim_; ++k)
                if (m[k] != 0) r[k] += c * m[k];
        }
    }
    return r;
}

Q FrobeniusAlgebra::pair(const Vec& a, const Vec& b) const
{
    Q s = 0;
    for (int i = 0; i < dim_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < dim_; ++j)
            if (b[j] != 0 && eta_(i, j) != 0) s += a[i] * b[j] * eta_(i, j);
    }
    return s;
}

Vec FrobeniusAlgebra::dual_elem(const Vec& phi) const
{
    Vec psi(dim_);
    for (int i = 0; i < dim_; ++i) {
        if (phi[i] == 0) continue;
        for (int j = 0; j < dim_; ++j)
            if (eta_inv_(i, j) != 0) psi[j] += phi[i] * eta_inv_(i, j);
    }
    return psi;
}

Vec FrobeniusAlgebra::project(const Vec& a) const
{
    const Q l = a[pivot_] / unit_[pivot_];
    Vec r = a;
    if (l != 0)
        for (int i = 0; i < dim_; ++i) r[i] -= l * unit_[i];
    return r;
}

FrobeniusAlgebra make_algebra(const std::string& name, int dim, const std::vector<std::vector<Vec>>& mul,
                              const Vec& unit, const std::vector<Vec>& eta)
{
    if (dim <= 0) throw std::invalid_argument("algebra dimension must be positive");
    auto bad_shape = [] { throw std::invalid_argument("algebra data has inconsistent shape"); };
    if (static_cast<int>(mul.size()) != dim || static_cast<int>(unit.size()) != dim ||
        static_cast<int>(eta.size()) != dim)
        bad_shape();
    FrobeniusAlgebra a;
    a.name_ = name;
    a.dim_ = dim;
    a.unit_ = unit;
    for (const auto& row : mul) {
        if (static_cast<int>(row.size()) != dim) bad_shape();
        for (const auto& v : row) {
            if (static_cast<int>(v.size()) != dim) bad_shape();
            a.mul_.push_back(v);
        }
    }
    a.eta_ = Matrix(dim, dim);
    for (int i = 0; i < dim; ++i) {
        if (static_cast<int>(eta[i].size()) != dim) bad_shape();
        for (int j = 0; j < dim; ++j) a.eta_(i, j) = eta[i][j];
    }
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k) {
                Vec ei = a.basis(i), ej = a.basis(j), ek = a.basis(k);
                if (a.prod(a.prod(ei, ej), ek) != a.prod(ei, a.prod(ej, ek))) throw AxiomError("associativity", {i, j, k});
            }
    for (int i = 0; i < dim; ++i) {
        Vec ei = a.basis(i);
        if (a.prod(unit, ei) != ei) throw AxiomError("left unit", {i, -1, -1});
        if (a.prod(ei, unit) != ei) throw AxiomError("right unit", {i, -1, -1});
    }
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (a.eta_(i, j) != a.eta_(j, i)) throw AxiomError("symmetry", {i, j, -1});
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k) {
                Vec ei = a.basis(i), ej = a.basis(j), ek = a.basis(k);
                if (a.pair(a.prod(ei, ej), ek) != a.pair(ei, a.prod(ej, ek))) throw AxiomError("invariance", {i, j, k});
            }
    auto inv = inverse(a.eta_);
    if (!inv) throw AxiomError("nondegeneracy", {-1, -1, -1});
    a.eta_inv_ = *inv;
    a.pivot_ = -1;
    for (int i = 0; i < dim && a.pivot_ < 0; ++i)
        if (unit[i] != 0) a.pivot_ = i;
    if (a.pivot_ < 0) throw AxiomError("left unit", {0, -1, -1});
    return a;
}

namespace {

FrobeniusAlgebra make_builtin(const std::string& name)
{
    auto zero_mul = [](int d) { return std::vector<std::vector<Vec>>(d, std::vector<Vec>(d, Vec(d))); };
    auto zero_mat = [](int d) { return std::vector<Vec>(d, Vec(d)); };
    if (name == "dual") {
        auto mul = zero_mul(2);
        mul[0][0][0] = 1;
        mul[0][1][1] = 1;
        mul[1][0][1] = 1;
        auto eta = zero_mat(2);
        eta[0][1] = eta[1][0] = 1;
        return make_algebra(name, 2, mul, {1, 0}, eta);
    }
    if (name == "z2" || name == "z3") {
        const int n = name == "z2" ? 2 : 3;
        auto mul = zero_mul(n);
        auto eta = zero_mat(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                mul[i][j][(i + j) % n] = 1;
                if ((i + j) % n == 0) eta[i][j] = 1;
            }
        Vec unit(n);
        unit[0] = 1;
        return make_algebra(name, n, mul, unit, eta);
    }
    if (name == "m2") {
        // basis E11, E12, E21, E22
        auto mul = zero_mul(4);
        auto eta = zero_mat(4);
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                const int i = a / 2, j = a % 2, k = b / 2, l = b % 2;
                if (j == k) mul[a][b][2 * i + l] = 1;
                if (j == k && i == l) eta[a][b] = 1;
            }
        return make_algebra(name, 4, mul, {1, 0, 0, 1}, eta);
    }
    throw std::invalid_argument("unknown algebra '" + name + "' (expected dual, z2, z3, m2)");
}

Q json_q(const nlohmann::json& j)
{
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Q(j.get<long>());
    throw std::invalid_argument("rational must be a string or an integer");
}

nlohmann::json q_json(const Q& q) { return to_string(q); }

} // namespace

AlgebraPtr builtin_algebra(const std::string& name) { return std::make_shared<const FrobeniusAlgebra>(make_builtin(name)); }

AlgebraPtr load_algebra(const std::string& spec)
{
    if (!spec.empty() && spec[0] == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) throw std::invalid_argument("cannot open algebra file " + spec.substr(1));
        nlohmann::json j = nlohmann::json::parse(in);
        return std::make_shared<const FrobeniusAlgebra>(algebra_from_json(j, j.value("name", spec.substr(1))));
    }
    return builtin_algebra(spec);
}

nlohmann::json to_json(const FrobeniusAlgebra& a)
{
    const int d = a.dim();
    nlohmann::json mul = nlohmann::json::array(), eta = nlohmann::json::array(), unit = nlohmann::json::array();
    for (int i = 0; i < d; ++i) {
        nlohmann::json row = nlohmann::json::array(), er = nlohmann::json::array();
        for (int j = 0; j < d; ++j) {
            nlohmann::json v = nlohmann::json::array();
            for (const Q& x : a.mul(i, j)) v.push_back(q_json(x));
            row.push_back(v);
            er.push_back(q_json(a.eta(i, j)));
        }
        mul.push_back(row);
        eta.push_back(er);
        unit.push_back(q_json(a.unit()[i]));
    }
    return {{"name", a.name()}, {"dim", d}, {"unit", unit}, {"mul", mul}, {"eta", eta}};
}

FrobeniusAlgebra algebra_from_json(const nlohmann::json& j, const std::string& name)
{
    const int d = j.at("dim").get<int>();
    std::vector<std::vector<Vec>> mul;
    for (const auto& row : j.at("mul")) {
        std::vector<Vec> r;
        for (const auto& v : row) {
            Vec x;
            for (const auto& c : v) x.push_back(json_q(c));
            r.push_back(std::move(x));
        }
        mul.push_back(std::move(r));
    }
    Vec unit;
    for (const auto& c : j.at("unit")) unit.push_back(json_q(c));
    std::vector<Vec> eta;
    for (const auto& row : j.at("eta")) {
        Vec r;
        for (const auto& c : row) r.push_back(json_q(c));
        eta.push_back(std::move(r));
    }
    return make_algebra(name, d, mul, unit, eta);
}

Matrix casimir(const FrobeniusAlgebra& a)
{
    Matrix c(a.dim(), a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) c(i, j) = a.eta_inv(i, j);
    return c;
}

bool snake_identity(const FrobeniusAlgebra& a)
{
    // sum_ij C^{ij} eta(x, e_i) e_j = x and sum_ij C^{ij} e_i eta(e_j, x) = x on basis x.
    const int d = a.dim();
    Matrix c = casimir(a);
    for (int x = 0; x < d; ++x) {
        Vec left(d), right(d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                left[j] += c(i, j) * a.eta(x, i);
                right[i] += c(i, j) * a.eta(j, x);
            }
        if (left != a.basis(x) || right != a.basis(x)) return false;
    }
    return true;
}

} // namespace cacti
