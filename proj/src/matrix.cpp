#include "spencer/matrix.hpp"

#include <stdexcept>

namespace spencer {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, Vec entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_)
        throw std::invalid_argument("ExactMatrix: entries length != rows*cols");
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = GaussianRational(1);
    return m;
}

bool ExactMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix m(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = -a_[k];
    return m;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("ExactMatrix: shape mismatch in addition");
    ExactMatrix m(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] + o.a_[k];
    return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_)
        throw std::invalid_argument("ExactMatrix: shape mismatch in product");
    ExactMatrix m(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const GaussianRational& aik = (*this)(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) m(i, j) += aik * o(k, j);
        }
    return m;
}

Vec ExactMatrix::operator*(const Vec& v) const {
    if (cols_ != v.size())
        throw std::invalid_argument("ExactMatrix: vector length mismatch");
    Vec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
    return out;
}

ExactMatrix ExactMatrix::stacked(const ExactMatrix& o) const {
    if (cols_ != o.cols_ && rows_ != 0 && o.rows_ != 0)
        throw std::invalid_argument("ExactMatrix: column mismatch in stack");
    std::size_t cols = rows_ == 0 ? o.cols_ : cols_;
    ExactMatrix m(rows_ + o.rows_, cols);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < o.cols_; ++j) m(rows_ + i, j) = o(i, j);
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    ExactMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw std::invalid_argument("ExactMatrix: row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RrefResult rref(const ExactMatrix& m) {
    RrefResult res{m, 0, {}};
    ExactMatrix& a = res.reduced;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < a.rows() && a(sel, col).is_zero()) ++sel;
        if (sel == a.rows()) continue;
        if (sel != pivot_row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot_row, j), a(sel, j));
        GaussianRational inv = GaussianRational(1) / a(pivot_row, col);
        for (std::size_t j = col; j < a.cols(); ++j) a(pivot_row, j) = a(pivot_row, j) * inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == pivot_row || a(i, col).is_zero()) continue;
            GaussianRational factor = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                a(i, j) -= factor * a(pivot_row, j);
        }
        res.pivot_cols.push_back(col);
        ++pivot_row;
    }
    res.rank = res.pivot_cols.size();
    return res;
}

std::size_t rank(const ExactMatrix& m) { return rref(m).rank; }

std::vector<Vec> nullspace(const ExactMatrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v(m.cols());
        v[free_col] = GaussianRational(1);
        for (std::size_t p = 0; p < r.pivot_cols.size(); ++p)
            v[r.pivot_cols[p]] = -r.reduced(p, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {
ExactMatrix nonzero_rows(const RrefResult& r) {
    ExactMatrix out(r.rank, r.reduced.cols());
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < r.reduced.cols(); ++j) out(i, j) = r.reduced(i, j);
    return out;
}
}  // namespace

bool same_row_space(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.cols() && a.rows() != 0 && b.rows() != 0) return false;
    return nonzero_rows(rref(a)) == nonzero_rows(rref(b));
}

bool row_space_contains(const ExactMatrix& space, const ExactMatrix& sub) {
    if (sub.rows() == 0) return true;
    return rank(space.stacked(sub)) == rank(space);
}

}  // namespace spencer
