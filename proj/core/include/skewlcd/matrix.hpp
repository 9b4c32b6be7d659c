// SPDX-License-Identifier: Apache-2.0
//
// Dense matrices over a Field: just enough exact linear algebra for code
// manipulation (reduced echelon form, rank, null space, products).

#ifndef SKEWLCD_MATRIX_HPP
#define SKEWLCD_MATRIX_HPP

#include <cstdint>
#include <vector>

#include "skewlcd/field.hpp"

namespace skewlcd {

class Matrix {
public:
    Matrix() = default;
    Matrix(FieldPtr field, size_t rows, size_t cols);
    static Matrix from_rows(const FieldPtr& field, std::vector<std::vector<FieldElement>> rows,
                            size_t cols);
    static Matrix identity(const FieldPtr& field, size_t n);

    const FieldPtr& field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    FieldElement& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const FieldElement& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }
    std::vector<FieldElement> row(size_t i) const;

    Matrix operator*(const Matrix& rhs) const;
    bool operator==(const Matrix& rhs) const;
    bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

    Matrix transpose() const;
    /// Entrywise a -> a^{p^{t/2}}.
    Matrix conjugate() const;
    /// Rows of this stacked over rows of other (same width).
    Matrix vstack(const Matrix& other) const;

    /// Reduced row echelon form with zero rows dropped; canonical per row space.
    Matrix rref() const;
    size_t rank() const;
    /// Rows spanning {x : M x^T = 0}, in reduced echelon form.
    Matrix null_space() const;
    /// Square matrices only.
    bool is_nonsingular() const;

    std::string str() const;

private:
    FieldPtr field_;
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<FieldElement> data_;
};

}  // namespace skewlcd

#endif  // SKEWLCD_MATRIX_HPP
