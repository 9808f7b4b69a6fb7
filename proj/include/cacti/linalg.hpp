#pragma once

// Exact dense linear algebra over the rationals.

#include "cacti/rational.hpp"

#include <optional>
#include <vector>

namespace cacti {

using Vec = std::vector<Q>;

class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Q& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Q& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    Vec column(int c) const;
    static Matrix from_columns(int rows, const std::vector<Vec>& cols);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Q> a_;
};

struct Echelon {
    Matrix r;               // reduced row echelon form
    std::vector<int> pivots; // pivot column of each nonzero row
};

Echelon rref(Matrix m);
int rank(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
// Basis of { x : m x = 0 }.
std::vector<Vec> nullspace(const Matrix& m);
// Some x with m x = b, if any.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

} // namespace cacti
