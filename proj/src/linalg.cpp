#include "cacti/linalg.hpp"

#include <stdexcept>

namespace cacti {

Vec Matrix::column(int c) const
{
    Vec v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Matrix Matrix::from_columns(int rows, const std::vector<Vec>& cols)
{
    Matrix m(rows, static_cast<int>(cols.size()));
    for (int c = 0; c < m.cols(); ++c) {
        if (static_cast<int>(cols[c].size()) != rows) throw std::invalid_argument("column length mismatch");
        for (int r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

Echelon rref(Matrix m)
{
    Echelon e;
    int row = 0;
    for (int c = 0; c < m.cols() && row < m.rows(); ++c) {
        int p = row;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (int k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(row, k));
        const Q inv = 1 / m(row, c);
        for (int k = c; k < m.cols(); ++k) m(row, k) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, c) == 0) continue;
            const Q f = m(r, c);
            for (int k = c; k < m.cols(); ++k) m(r, k) -= f * m(row, k);
        }
        e.pivots.push_back(c);
        ++row;
    }
    e.r = std::move(m);
    return e;
}

int rank(const Matrix& m) { return static_cast<int>(rref(m).pivots.size()); }

std::optional<Matrix> inverse(const Matrix& m)
{
    const int n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("inverse of a non-square matrix");
    Matrix aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    Echelon e = rref(aug);
    if (static_cast<int>(e.pivots.size()) < n || e.pivots[n - 1] >= n) return std::nullopt;
    Matrix out(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) out(r, c) = e.r(r, n + c);
    return out;
}

std::vector<Vec> nullspace(const Matrix& m)
{
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : e.pivots) is_pivot[c] = true;
    std::vector<Vec> out;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.r(static_cast<int>(r), f);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b)
{
    Matrix aug(m.rows(), m.cols() + 1);
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    Echelon e = rref(aug);
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
    Vec x(m.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.r(static_cast<int>(r), m.cols());
    return x;
}

} // namespace cacti
