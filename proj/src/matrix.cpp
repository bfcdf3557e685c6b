#include "lrc/matrix.hpp"

#include <algorithm>
#include <limits>

#include "lrc/error.hpp"

namespace lrc {

Matrix Matrix::from_rows(const std::vector<std::vector<FieldElement>>& rows, std::size_t cols) {
    if (!rows.empty()) cols = rows.front().size();
    Matrix M(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) fail(ErrorCode::DegreeMismatch, "ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) M(r, c) = rows[r][c];
    }
    return M;
}

std::vector<FieldElement> Matrix::column(std::size_t c) const {
    std::vector<FieldElement> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

void Matrix::set_column(std::size_t c, std::span<const FieldElement> values) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

Matrix Matrix::select_rows(std::span<const std::size_t> idx) const {
    Matrix out(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        for (std::size_t c = 0; c < cols_; ++c) out(i, c) = (*this)(idx[i], c);
    }
    return out;
}

Matrix Matrix::select_cols(std::span<const std::size_t> idx) const {
    Matrix out(rows_, idx.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t i = 0; i < idx.size(); ++i) out(r, i) = (*this)(r, idx[i]);
    }
    return out;
}

Matrix Matrix::transposed() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    }
    return out;
}

namespace linalg {

Echelon row_reduce(const Field& F, Matrix M) {
    Echelon out;
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < M.cols() && lead_row < M.rows(); ++c) {
        std::size_t piv = lead_row;
        while (piv < M.rows() && M(piv, c).code == 0) ++piv;
        if (piv == M.rows()) continue;
        if (piv != lead_row) {
            for (std::size_t k = 0; k < M.cols(); ++k) std::swap(M(piv, k), M(lead_row, k));
        }
        const FieldElement s = F.inv(M(lead_row, c));
        for (std::size_t k = c; k < M.cols(); ++k) M(lead_row, k) = F.mul(M(lead_row, k), s);
        for (std::size_t r = 0; r < M.rows(); ++r) {
            if (r == lead_row) continue;
            const FieldElement f = M(r, c);
            if (f.code == 0) continue;
            for (std::size_t k = c; k < M.cols(); ++k) M(r, k) = F.sub(M(r, k), F.mul(f, M(lead_row, k)));
        }
        out.pivot_cols.push_back(c);
        ++lead_row;
    }
    out.reduced = std::move(M);
    return out;
}

std::size_t rank(const Field& F, const Matrix& M) { return row_reduce(F, M).rank(); }

Matrix nullspace(const Field& F, const Matrix& M) {
    const Echelon e = row_reduce(F, M);
    std::vector<bool> is_pivot(M.cols(), false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < M.cols(); ++c) {
        if (!is_pivot[c]) free_cols.push_back(c);
    }
    Matrix basis(free_cols.size(), M.cols());
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        const std::size_t fc = free_cols[i];
        basis(i, fc) = F.one();
        for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) basis(i, e.pivot_cols[r]) = F.neg(e.reduced(r, fc));
    }
    return basis;
}

std::optional<std::vector<FieldElement>> solve_square(const Field& F, const Matrix& A,
                                                      std::span<const FieldElement> b) {
    const std::size_t n = A.rows();
    if (A.cols() != n || b.size() != n) fail(ErrorCode::DegreeMismatch, "solve_square expects a square system");
    Matrix aug(n, n + 1);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = A(r, c);
        aug(r, n) = b[r];
    }
    const Echelon e = row_reduce(F, std::move(aug));
    if (e.rank() < n || (n > 0 && e.pivot_cols[n - 1] != n - 1)) return std::nullopt;
    std::vector<FieldElement> x(n);
    for (std::size_t r = 0; r < n; ++r) x[r] = e.reduced(r, n);
    return x;
}

std::vector<std::size_t> independent_rows(const Field& F, const Matrix& A) {
    // Pivot columns of the RREF of A^T are exactly the greedy-by-index rows.
    return row_reduce(F, A.transposed()).pivot_cols;
}

Matrix multiply(const Field& F, const Matrix& A, const Matrix& B) {
    if (A.cols() != B.rows()) fail(ErrorCode::DegreeMismatch, "matrix shape mismatch");
    Matrix out(A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t k = 0; k < A.cols(); ++k) {
            const FieldElement a = A(i, k);
            if (a.code == 0) continue;
            for (std::size_t j = 0; j < B.cols(); ++j) out(i, j) = F.add(out(i, j), F.mul(a, B(k, j)));
        }
    }
    return out;
}

std::vector<FieldElement> apply(const Field& F, const Matrix& A, std::span<const FieldElement> x) {
    if (A.cols() != x.size()) fail(ErrorCode::DegreeMismatch, "matrix/vector shape mismatch");
    std::vector<FieldElement> out(A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        FieldElement acc{};
        for (std::size_t k = 0; k < A.cols(); ++k) acc = F.add(acc, F.mul(A(i, k), x[k]));
        out[i] = acc;
    }
    return out;
}

bool columns_independent(const Field& F, const Matrix& M, std::span<const std::size_t> cols) {
    if (cols.size() > M.rows()) return false;
    // Eliminate on the transposed subset: one row per chosen column.
    const std::size_t k = cols.size(), m = M.rows();
    std::vector<FieldElement> buf(k * m);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t r = 0; r < m; ++r) buf[i * m + r] = M(r, cols[i]);
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m && rank < k; ++c) {
        std::size_t piv = rank;
        while (piv < k && buf[piv * m + c].code == 0) ++piv;
        if (piv == k) continue;
        if (piv != rank) {
            for (std::size_t x = 0; x < m; ++x) std::swap(buf[piv * m + x], buf[rank * m + x]);
        }
        const FieldElement s = F.inv(buf[rank * m + c]);
        for (std::size_t i = rank + 1; i < k; ++i) {
            const FieldElement f = F.mul(buf[i * m + c], s);
            if (f.code == 0) continue;
            for (std::size_t x = c; x < m; ++x) buf[i * m + x] = F.sub(buf[i * m + x], F.mul(f, buf[rank * m + x]));
        }
        ++rank;
    }
    return rank == k;
}

}  // namespace linalg

bool for_each_subset(std::size_t n, std::size_t k,
                     const std::function<bool(std::span<const std::size_t>)>& visit) {
    if (k > n) return true;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (!visit(idx)) return false;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return true;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(r);
}

}  // namespace lrc
