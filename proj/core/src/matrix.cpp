// SPDX-License-Identifier: Apache-2.0

#include "skewlcd/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace skewlcd {

Matrix::Matrix(FieldPtr field, size_t rows, size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_->zero()) {}

Matrix Matrix::from_rows(const FieldPtr& field, std::vector<std::vector<FieldElement>> rows,
                         size_t cols) {
    Matrix m(field, rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("row width mismatch");
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::identity(const FieldPtr& field, size_t n) {
    Matrix m(field, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = field->one();
    return m;
}

std::vector<FieldElement> Matrix::row(size_t i) const {
    return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_};
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix dimension mismatch");
    Matrix out(field_, rows_, rhs.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const auto& a = at(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Matrix Matrix::conjugate() const {
    Matrix out = *this;
    for (auto& e : out.data_) e = e.conj();
    return out;
}

Matrix Matrix::vstack(const Matrix& other) const {
    if (cols_ != other.cols_) throw std::invalid_argument("matrix width mismatch");
    Matrix out(field_, rows_ + other.rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (size_t i = 0; i < other.rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out.at(rows_ + i, j) = other.at(i, j);
    return out;
}

Matrix Matrix::rref() const {
    Matrix m = *this;
    size_t pivot_row = 0;
    for (size_t col = 0; col < cols_ && pivot_row < m.rows_; ++col) {
        size_t sel = m.rows_;
        for (size_t i = pivot_row; i < m.rows_; ++i)
            if (!m.at(i, col).is_zero()) {
                sel = i;
                break;
            }
        if (sel == m.rows_) continue;
        for (size_t j = 0; j < cols_; ++j) std::swap(m.at(pivot_row, j), m.at(sel, j));
        const FieldElement inv = m.at(pivot_row, col).inverse();
        for (size_t j = col; j < cols_; ++j) m.at(pivot_row, j) *= inv;
        for (size_t i = 0; i < m.rows_; ++i) {
            if (i == pivot_row || m.at(i, col).is_zero()) continue;
            const FieldElement f = m.at(i, col);
            for (size_t j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(pivot_row, j);
        }
        ++pivot_row;
    }
    // drop zero rows
    std::vector<std::vector<FieldElement>> keep;
    for (size_t i = 0; i < pivot_row; ++i) keep.push_back(m.row(i));
    return from_rows(field_, std::move(keep), cols_);
}

size_t Matrix::rank() const { return rref().rows(); }

Matrix Matrix::null_space() const {
    Matrix r = rref();
    std::vector<size_t> pivots;
    {
        size_t col = 0;
        for (size_t i = 0; i < r.rows(); ++i) {
            while (col < cols_ && r.at(i, col).is_zero()) ++col;
            pivots.push_back(col);
        }
    }
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<FieldElement>> basis;
    for (size_t fc = 0; fc < cols_; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<FieldElement> v(cols_, field_->zero());
        v[fc] = field_->one();
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, fc);
        basis.push_back(std::move(v));
    }
    return from_rows(field_, std::move(basis), cols_).rref();
}

bool Matrix::is_nonsingular() const {
    if (rows_ != cols_) throw std::invalid_argument("nonsingularity is for square matrices");
    return rank() == rows_;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (size_t j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << at(i, j).str();
        }
        os << "]";
        if (i + 1 < rows_) os << "\n";
    }
    return os.str();
}

}  // namespace skewlcd
