#include "cacti/hochschild.hpp"

#include <stdexcept>

namespace cacti {

Cochain::Cochain(AlgebraPtr a, int arity) : a_(std::move(a)), n_(arity)
{
    if (!a_) throw std::invalid_argument("cochain without algebra");
    if (n_ < 0) throw std::invalid_argument("negative cochain arity");
    d_ = a_->dim();
    for (int i = 0; i < n_; ++i) keys_ *= d_;
    data_.assign(keys_ * d_, Q(0));
}

std::size_t Cochain::key_index(const std::vector<int>& key) const
{
    std::size_t k = 0;
    for (int x : key) k = k * d_ + x;
    return k;
}

std::vector<int> Cochain::key_tuple(std::size_t k) const
{
    std::vector<int> t(n_);
    for (int i = n_ - 1; i >= 0; --i) {
        t[i] = static_cast<int>(k % d_);
        k /= d_;
    }
    return t;
}

Vec Cochain::value(std::size_t key) const { return Vec(data_.begin() + key * d_, data_.begin() + (key + 1) * d_); }

void Cochain::set_value(std::size_t key, const Vec& v)
{
    for (int j = 0; j < d_; ++j) data_[key * d_ + j] = v[j];
}

Vec Cochain::ev(const std::vector<Vec>& args) const
{
    if (static_cast<int>(args.size()) != n_) throw std::invalid_argument("cochain evaluated on wrong number of inputs");
    std::vector<std::vector<std::pair<int, const Q*>>> nz(n_);
    for (int s = 0; s < n_; ++s) {
        for (int i = 0; i < d_; ++i)
            if (args[s][i] != 0) nz[s].push_back({i, &args[s][i]});
        if (nz[s].empty()) return Vec(d_);
    }
    Vec r(d_);
    std::vector<std::size_t> pos(n_, 0);
    while (true) {
        Q c = 1;
        std::size_t key = 0;
        for (int s = 0; s < n_; ++s) {
            c *= *nz[s][pos[s]].second;
            key = key * d_ + nz[s][pos[s]].first;
        }
        const Q* v = &data_[key * d_];
        for (int j = 0; j < d_; ++j)
            if (v[j] != 0) r[j] += c * v[j];
        int s = n_ - 1;
        while (s >= 0 && ++pos[s] == nz[s].size()) pos[s--] = 0;
        if (s < 0) break;
    }
    return r;
}

bool Cochain::is_zero() const
{
    for (const Q& x : data_)
        if (x != 0) return false;
    return true;
}

void Cochain::check_same(const Cochain& o) const
{
    if (n_ != o.n_) throw std::invalid_argument("cochain arity mismatch");
    if (a_ != o.a_ && a_->name() != o.a_->name()) throw std::invalid_argument("cochain algebra mismatch");
}

Cochain& Cochain::operator+=(const Cochain& o)
{
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Cochain Cochain::operator+(const Cochain& o) const
{
    Cochain r = *this;
    r += o;
    return r;
}

Cochain Cochain::operator-(const Cochain& o) const { return *this + o * Q(-1); }

Cochain Cochain::operator*(const Q& c) const
{
    Cochain r = *this;
    for (Q& x : r.data_) x *= c;
    return r;
}

bool Cochain::operator==(const Cochain& o) const { return n_ == o.n_ && data_ == o.data_; }

Cochain from_basis_fn(const AlgebraPtr& a, int arity, const std::function<Vec(const std::vector<int>&)>& fn)
{
    Cochain f(a, arity);
    for (std::size_t k = 0; k < f.keys(); ++k) f.set_value(k, fn(f.key_tuple(k)));
    return f;
}

Cochain normalize(const Cochain& f)
{
    const auto& A = *f.algebra();
    std::vector<Vec> proj(A.dim());
    for (int i = 0; i < A.dim(); ++i) proj[i] = A.project(A.basis(i));
    return from_basis_fn(f.algebra(), f.arity(), [&](const std::vector<int>& key) {
        std::vector<Vec> args;
        for (int i : key) args.push_back(proj[i]);
        return f.ev(args);
    });
}

bool is_normalized(const Cochain& f)
{
    const auto& A = *f.algebra();
    for (int s = 0; s < f.arity(); ++s)
        for (std::size_t k = 0; k < f.keys(); ++k) {
            auto key = f.key_tuple(k);
            if (s > 0 && key[s] != 0) continue; // visit each tuple of the other slots once
            std::vector<Vec> args;
            for (int t = 0; t < f.arity(); ++t) args.push_back(t == s ? A.unit() : A.basis(key[t]));
            for (const Q& x : f.ev(args))
                if (x != 0) return false;
        }
    return true;
}

Cochain random_cochain(const AlgebraPtr& a, int arity, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(-3, 3), den(1, 2);
    Cochain f(a, arity);
    for (std::size_t k = 0; k < f.keys(); ++k)
        for (int j = 0; j < a->dim(); ++j) {
            Q q(num(rng), den(rng));
            q.canonicalize();
            f.at(k, j) = q;
        }
    return normalize(f);
}

Cochain hdiff(const Cochain& f)
{
    const auto& A = *f.algebra();
    const int n = f.arity();
    return from_basis_fn(f.algebra(), n + 1, [&](const std::vector<int>& key) {
        std::vector<Vec> a;
        for (int i : key) a.push_back(A.basis(i));
        Vec r = A.prod(a[0], f.ev(std::vector<Vec>(a.begin() + 1, a.end())));
        for (int i = 1; i <= n; ++i) {
            std::vector<Vec> args(a.begin(), a.begin() + (i - 1));
            args.push_back(A.prod(a[i - 1], a[i]));
            args.insert(args.end(), a.begin() + i + 1, a.end());
            Vec v = f.ev(args);
            for (int j = 0; j < A.dim(); ++j) r[j] += sign_of(i) * v[j];
        }
        Vec v = A.prod(f.ev(std::vector<Vec>(a.begin(), a.begin() + n)), a[n]);
        for (int j = 0; j < A.dim(); ++j) r[j] += sign_of(n + 1) * v[j];
        return r;
    });
}

Cochain cup(const Cochain& f, const Cochain& g)
{
    const auto& A = *f.algebra();
    const int p = f.arity();
    return from_basis_fn(f.algebra(), p + g.arity(), [&](const std::vector<int>& key) {
        std::vector<Vec> a, b;
        for (int s = 0; s < static_cast<int>(key.size()); ++s) (s < p ? a : b).push_back(A.basis(key[s]));
        return A.prod(f.ev(a), g.ev(b));
    });
}

Cochain circ(const Cochain& f, int i, const Cochain& g)
{
    if (i < 1 || i > f.arity()) throw std::invalid_argument("circ slot out of range");
    const auto& A = *f.algebra();
    const int m = g.arity();
    return from_basis_fn(f.algebra(), f.arity() + m - 1, [&](const std::vector<int>& key) {
        std::vector<Vec> a;
        for (int x : key) a.push_back(A.basis(x));
        std::vector<Vec> args(a.begin(), a.begin() + (i - 1));
        args.push_back(g.ev(std::vector<Vec>(a.begin() + (i - 1), a.begin() + (i - 1 + m))));
        args.insert(args.end(), a.begin() + (i - 1 + m), a.end());
        return f.ev(args);
    });
}

namespace {

// Order-preserving placements of blocks of the given lengths into `total`
// consecutive inputs; calls fn(starts) for each placement.
void each_placement(int total, const std::vector<int>& lens, const std::function<void(const std::vector<int>&)>& fn)
{
    std::vector<int> starts(lens.size());
    int need = 0;
    for (int l : lens) need += l;
    std::function<void(std::size_t, int, int)> rec = [&](std::size_t j, int pos, int rest) {
        if (j == lens.size()) {
            fn(starts);
            return;
        }
        for (int s = pos; s + rest <= total; ++s) {
            starts[j] = s;
            rec(j + 1, s + lens[j], rest - lens[j]);
        }
    };
    rec(0, 0, need);
}

} // namespace

Cochain brace(const Cochain& f, const std::vector<Cochain>& gs)
{
    const auto& A = *f.algebra();
    const int k = static_cast<int>(gs.size());
    int N = f.arity() - k;
    std::vector<int> lens;
    for (const auto& g : gs) {
        N += g.arity();
        lens.push_back(g.arity());
    }
    if (k > f.arity()) return Cochain(f.algebra(), std::max(N, 0));
    return from_basis_fn(f.algebra(), N, [&](const std::vector<int>& key) {
        std::vector<Vec> a;
        for (int i : key) a.push_back(A.basis(i));
        Vec r(A.dim());
        each_placement(N, lens, [&](const std::vector<int>& st) {
            std::vector<Vec> args;
            int p = 0;
            long e = 0;
            for (int j = 0; j < k; ++j) {
                while (p < st[j]) args.push_back(a[p++]);
                args.push_back(gs[j].ev(std::vector<Vec>(a.begin() + st[j], a.begin() + st[j] + lens[j])));
                e += static_cast<long>(lens[j] - 1) * st[j];
                p = st[j] + lens[j];
            }
            while (p < N) args.push_back(a[p++]);
            Vec v = f.ev(args);
            for (int j = 0; j < A.dim(); ++j) r[j] += sign_of(e) * v[j];
        });
        return r;
    });
}

Cochain bracket(const Cochain& f, const Cochain& g)
{
    const long s = static_cast<long>(f.arity() - 1) * (g.arity() - 1);
    return brace(f, {g}) - brace(g, {f}) * Q(sign_of(s));
}

Cochain cdelta(const Cochain& f)
{
    const int n = f.arity();
    if (n < 1) throw std::invalid_argument("Connes' operator needs arity >= 1");
    const auto& A = *f.algebra();
    return from_basis_fn(f.algebra(), n - 1, [&](const std::vector<int>& rest) {
        Vec phi(A.dim());
        std::vector<int> key(n);
        for (int k0 = 0; k0 < A.dim(); ++k0) {
            std::vector<int> a{k0};
            a.insert(a.end(), rest.begin(), rest.end());
            Q tot = 0;
            for (int r = 0; r < n; ++r) {
                for (int s = 0; s < n; ++s) key[s] = a[(s + n - r) % n];
                tot += sign_of(static_cast<long>(r) * (n - 1)) * A.pair(A.unit(), f.value(f.key_index(key)));
            }
            phi[k0] = tot;
        }
        return A.dual_elem(phi);
    });
}

long decalage(const std::vector<int>& ar)
{
    long e = 0;
    for (std::size_t x = 0; x < ar.size(); ++x)
        for (std::size_t y = x + 1; y < ar.size(); ++y) e += static_cast<long>(ar[y]) * (ar[x] - 1);
    return e;
}

Cochain cyclic_brace(const Cochain& f, const std::vector<Cochain>& gs, int i)
{
    const auto& A = *f.algebra();
    const int n = static_cast<int>(gs.size());
    if (i < 0 || i > n) throw std::invalid_argument("cyclic brace angle out of range");
    int N = f.arity() - n - 1;
    std::vector<int> ar{f.arity()};
    for (const auto& g : gs) {
        N += g.arity();
        ar.push_back(g.arity());
    }
    if (N < 0) return Cochain(f.algebra(), 0);
    long pre = 1 + decalage(ar);
    for (int x = 0; x < i; ++x)
        for (int y = i; y < n; ++y) pre += static_cast<long>(gs[x].arity() - 1) * (gs[y].arity() - 1);
    std::vector<int> order, lens;
    for (int x = i; x < n; ++x) order.push_back(x);
    for (int x = 0; x < i; ++x) order.push_back(x);
    for (int x : order) lens.push_back(gs[x].arity());
    return from_basis_fn(f.algebra(), N, [&](const std::vector<int>& key) {
        Vec phi(A.dim());
        for (int k0 = 0; k0 < A.dim(); ++k0) {
            std::vector<Vec> seq{A.basis(k0)};
            for (int x : key) seq.push_back(A.basis(x));
            Q tot = 0;
            for (int r = 0; r <= N; ++r) {
                std::vector<Vec> rs(seq.begin() + r, seq.end());
                rs.insert(rs.end(), seq.begin(), seq.begin() + r);
                const int z = (N + 1 - r) % (N + 1); // position of a0
                each_placement(N + 1, lens, [&](const std::vector<int>& st) {
                    for (int j = 0; j < n; ++j) {
                        const bool before = order[j] >= i;
                        if (before && st[j] + lens[j] > z) return;
                        if (!before && st[j] <= z) return;
                    }
                    std::vector<Vec> args;
                    int p = 0;
                    long e = pre + static_cast<long>(r) * N;
                    for (int j = 0; j < n; ++j) {
                        while (p < st[j]) args.push_back(rs[p++]);
                        args.push_back(gs[order[j]].ev(std::vector<Vec>(rs.begin() + st[j], rs.begin() + st[j] + lens[j])));
                        e += static_cast<long>(lens[j] - 1) * st[j];
                        p = st[j] + lens[j];
                    }
                    while (p <= N) args.push_back(rs[p++]);
                    if (static_cast<int>(args.size()) != f.arity()) return;
                    tot += sign_of(e) * A.pair(A.unit(), f.ev(args));
                });
            }
            phi[k0] = tot;
        }
        return A.dual_elem(phi);
    });
}

DualTensor dualize(const Cochain& f)
{
    const auto& A = *f.algebra();
    DualTensor t{f.algebra(), f.arity(), {}};
    t.data.reserve(f.keys() * A.dim());
    for (int a0 = 0; a0 < A.dim(); ++a0)
        for (std::size_t k = 0; k < f.keys(); ++k) t.data.push_back(A.pair(A.basis(a0), f.value(k)));
    return t;
}

Cochain undualize(const DualTensor& t)
{
    const auto& A = *t.algebra;
    Cochain f(t.algebra, t.arity);
    for (std::size_t k = 0; k < f.keys(); ++k) {
        Vec phi(A.dim());
        for (int a0 = 0; a0 < A.dim(); ++a0) phi[a0] = t.data[a0 * f.keys() + k];
        f.set_value(k, A.dual_elem(phi));
    }
    return f;
}

nlohmann::json to_json(const Cochain& f)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (std::size_t k = 0; k < f.keys(); ++k) {
        nlohmann::json v = nlohmann::json::array();
        for (int j = 0; j < f.dim(); ++j) v.push_back(to_string(f.at(k, j)));
        coeffs.push_back(v);
    }
    return {{"algebra", f.algebra()->name()}, {"arity", f.arity()}, {"coeffs", coeffs}};
}

Cochain cochain_from_json(const nlohmann::json& j, AlgebraPtr a)
{
    if (!a) a = builtin_algebra(j.at("algebra").get<std::string>());
    Cochain f(a, j.at("arity").get<int>());
    const auto& coeffs = j.at("coeffs");
    if (coeffs.size() != f.keys()) throw std::invalid_argument("cochain JSON has the wrong number of entries");
    for (std::size_t k = 0; k < f.keys(); ++k) {
        const auto& v = coeffs[k];
        if (static_cast<int>(v.size()) != f.dim()) throw std::invalid_argument("cochain JSON entry has the wrong length");
        for (int x = 0; x < f.dim(); ++x)
            f.at(k, x) = v[x].is_string() ? parse_rational(v[x].get<std::string>()) : Q(v[x].get<long>());
    }
    return f;
}

Vec Cohomology::coords(const Cochain& f)
{
    const int p = f.algebra()->unit_pivot();
    Vec c;
    for (std::size_t k = 0; k < f.keys(); ++k) {
        bool skip = false;
        for (int x : f.key_tuple(k)) skip = skip || x == p;
        if (skip) continue;
        for (int j = 0; j < f.dim(); ++j) c.push_back(f.at(k, j));
    }
    return c;
}

Cochain Cohomology::from_coords(const AlgebraPtr& a, int n, const Vec& c)
{
    Cochain f(a, n);
    const int p = a->unit_pivot();
    std::size_t idx = 0;
    for (std::size_t k = 0; k < f.keys(); ++k) {
        bool skip = false;
        for (int x : f.key_tuple(k)) skip = skip || x == p;
        if (skip) continue;
        for (int j = 0; j < f.dim(); ++j) f.at(k, j) = c.at(idx++);
    }
    if (idx != c.size()) throw std::invalid_argument("coordinate vector has the wrong length");
    return normalize(f);
}

namespace {

int coord_count(const FrobeniusAlgebra& a, int n)
{
    int m = a.dim();
    for (int i = 0; i < n; ++i) m *= a.dim() - 1;
    return m;
}

// Columns: coordinates of hdiff of each coordinate basis vector at arity n.
Matrix differential_matrix(const AlgebraPtr& a, int n)
{
    const int m = coord_count(*a, n);
    std::vector<Vec> cols;
    for (int c = 0; c < m; ++c) {
        Vec e(m);
        e[c] = 1;
        cols.push_back(Cohomology::coords(hdiff(Cohomology::from_coords(a, n, e))));
    }
    return Matrix::from_columns(coord_count(*a, n + 1), cols);
}

} // namespace

Cohomology::Cohomology(const AlgebraPtr& a, int n) : a_(a), n_(n)
{
    if (n < 0) throw std::invalid_argument("negative cohomological degree");
    const int m = coord_count(*a, n);
    std::vector<Vec> image;
    if (n > 0) {
        Matrix d = differential_matrix(a, n - 1);
        Echelon e = rref(d);
        for (int c : e.pivots) image.push_back(d.column(c));
    }
    image_rank_ = static_cast<int>(image.size());
    std::vector<Vec> cols = image;
    for (const Vec& z : nullspace(differential_matrix(a, n))) {
        cols.push_back(z);
        if (rank(Matrix::from_columns(m, cols)) < static_cast<int>(cols.size())) {
            cols.pop_back();
            continue;
        }
        reps_.push_back(from_coords(a, n, z));
    }
    basis_ = Matrix::from_columns(m, cols);
}

Vec Cohomology::reduce(const Cochain& f) const
{
    if (f.arity() != n_) throw std::invalid_argument("cochain degree does not match the cohomology degree");
    auto x = solve(basis_, coords(f));
    if (!x) throw std::invalid_argument("cochain is not a normalized cocycle");
    return Vec(x->begin() + image_rank_, x->end());
}

bool Cohomology::is_coboundary(const Cochain& f) const
{
    for (const Q& q : reduce(f))
        if (q != 0) return false;
    return true;
}

} // namespace cacti
