#pragma once

#include <string>
#include <vector>

#include "conicbundle/rational.hpp"

namespace conicbundle {

// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Integer& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Integer& operator()(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }

    void swap_rows(int a, int b);
    void swap_cols(int a, int b);
    // row a -= q * row b / col a -= q * col b
    void add_row_multiple(int a, int b, const Integer& q);
    void add_col_multiple(int a, int b, const Integer& q);
    void negate_row(int a);

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    bool operator==(const IntMatrix&) const = default;

    // Fraction-free (Bareiss) determinant; square matrices only.
    Integer determinant() const;

    std::string to_string() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Integer> data_;
};

// U * A * V = D with D diagonal, each diagonal entry non-negative and
// dividing the next, U and V unimodular.
struct SmithDecomposition {
    IntMatrix left;      // U, rows x rows
    IntMatrix diagonal;  // D, same shape as A
    IntMatrix right;     // V, cols x cols

    std::vector<Integer> invariant_factors() const;  // nonzero diagonal entries
    int rank() const { return static_cast<int>(invariant_factors().size()); }
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

}  // namespace conicbundle
