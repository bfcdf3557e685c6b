#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "lrc/galois.hpp"

namespace lrc {

/// Dense row-major matrix over F_q. The field is passed to every operation.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix from_rows(const std::vector<std::vector<FieldElement>>& rows, std::size_t cols = 0);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    FieldElement operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const FieldElement> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::vector<FieldElement> column(std::size_t c) const;
    void set_column(std::size_t c, std::span<const FieldElement> values);

    Matrix select_rows(std::span<const std::size_t> idx) const;
    Matrix select_cols(std::span<const std::size_t> idx) const;
    Matrix transposed() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<FieldElement> data_;
};

namespace linalg {

struct Echelon {
    Matrix reduced;                      // reduced row echelon form
    std::vector<std::size_t> pivot_cols;
    std::size_t rank() const noexcept { return pivot_cols.size(); }
};

Echelon row_reduce(const Field& F, Matrix M);
std::size_t rank(const Field& F, const Matrix& M);

/// Rows form a basis of {x : M x = 0}.
Matrix nullspace(const Field& F, const Matrix& M);

/// Solution of A x = b for square invertible A; nullopt when A is singular.
std::optional<std::vector<FieldElement>> solve_square(const Field& F, const Matrix& A,
                                                      std::span<const FieldElement> b);

/// Lowest-index maximal set of linearly independent rows (greedy by index).
std::vector<std::size_t> independent_rows(const Field& F, const Matrix& A);

Matrix multiply(const Field& F, const Matrix& A, const Matrix& B);
std::vector<FieldElement> apply(const Field& F, const Matrix& A, std::span<const FieldElement> x);

/// True iff the listed columns of M are linearly independent.
bool columns_independent(const Field& F, const Matrix& M, std::span<const std::size_t> cols);

}  // namespace linalg

/// Visits every k-subset of {0..n-1} in lexicographic order; the visitor
/// returns false to stop early. Returns false iff stopped early.
bool for_each_subset(std::size_t n, std::size_t k,
                     const std::function<bool(std::span<const std::size_t>)>& visit);

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace lrc
