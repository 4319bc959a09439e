#pragma once

#include <cstddef>
#include <vector>

#include "spencer/scalar.hpp"

namespace spencer {

using Vec = std::vector<GaussianRational>;

/// Dense row-major matrix over Q(i). All algorithms are exact; row
/// reduction is naive Gauss-Jordan (fine at desk scale, <=~50x50).
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}
    ExactMatrix(std::size_t rows, std::size_t cols, Vec entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GaussianRational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const GaussianRational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    const Vec& entries() const { return a_; }

    static ExactMatrix identity(std::size_t n);
    static ExactMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

    bool is_zero() const;
    ExactMatrix operator-() const;
    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    Vec operator*(const Vec& v) const;
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    /// Appends the rows of `o` below this matrix (column counts must match).
    ExactMatrix stacked(const ExactMatrix& o) const;

    /// Builds a matrix whose rows are the given vectors.
    static ExactMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Vec a_;
};

struct RrefResult {
    ExactMatrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

/// Unique reduced row-echelon form. Deterministic: pivots are chosen as the
/// first nonzero entry scanning down each column.
RrefResult rref(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

/// Canonical nullspace basis from the RREF free-variable convention: one
/// vector per free column (that variable set to 1, other free variables 0),
/// ordered by free-column index. Satisfies m*v = 0 exactly.
std::vector<Vec> nullspace(const ExactMatrix& m);

/// True iff the row spaces coincide (compares the unique RREFs after
/// dropping zero rows).
bool same_row_space(const ExactMatrix& a, const ExactMatrix& b);

/// True iff every row of `sub` lies in the row space of `space`.
bool row_space_contains(const ExactMatrix& space, const ExactMatrix& sub);

}  // namespace spencer
