#ifndef ORBICURVE_MATRIX_HPP
#define ORBICURVE_MATRIX_HPP

#include <optional>
#include <vector>

#include "orbicurve/rational.hpp"

namespace orbicurve {

/// Dense matrix over a field, row-major.
template <class R>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), d_(size_t(rows) * cols, R(0)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    R& at(int r, int c) { return d_[size_t(r) * cols_ + c]; }
    const R& at(int r, int c) const { return d_[size_t(r) * cols_ + c]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
    }

    std::vector<R> mul_vec(const std::vector<R>& v) const {
        std::vector<R> out(rows_, R(0));
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c)
                if (!(at(r, c) == R(0)) && !(v[c] == R(0))) out[r] += at(r, c) * v[c];
        return out;
    }

    /// Reduced row echelon form. Pivot rule: columns left to right, first row
    /// (in current order) with a nonzero entry. Returns pivot columns.
    std::vector<int> rref() {
        std::vector<int> pivots;
        int row = 0;
        for (int col = 0; col < cols_ && row < rows_; ++col) {
            int pr = -1;
            for (int r = row; r < rows_; ++r) {
                if (!(at(r, col) == R(0))) {
                    pr = r;
                    break;
                }
            }
            if (pr < 0) continue;
            if (pr != row)
                for (int c = 0; c < cols_; ++c) std::swap(at(pr, c), at(row, c));
            R inv = R(1) / at(row, col);
            for (int c = col; c < cols_; ++c) at(row, c) = inv * at(row, c);
            for (int r = 0; r < rows_; ++r) {
                if (r == row || at(r, col) == R(0)) continue;
                R f = at(r, col);
                for (int c = col; c < cols_; ++c) at(r, c) -= f * at(row, c);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    int rank() const {
        Matrix m = *this;
        return static_cast<int>(m.rref().size());
    }

    /// Basis of the right null space, in order of free columns; each basis
    /// vector has entry 1 at its free column. Deterministic.
    std::vector<std::vector<R>> kernel_basis() const {
        Matrix m = *this;
        auto pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (int c : pivots) is_pivot[c] = true;
        std::vector<std::vector<R>> basis;
        for (int fc = 0; fc < cols_; ++fc) {
            if (is_pivot[fc]) continue;
            std::vector<R> v(cols_, R(0));
            v[fc] = R(1);
            for (size_t pi = 0; pi < pivots.size(); ++pi) v[pivots[pi]] = -m.at(int(pi), fc);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    /// One solution of A x = b with free variables set to 0, or nullopt.
    std::optional<std::vector<R>> solve(const std::vector<R>& b) const {
        Matrix aug(rows_, cols_ + 1);
        for (int r = 0; r < rows_; ++r) {
            for (int c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
            aug.at(r, cols_) = b[r];
        }
        auto pivots = aug.rref();
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // inconsistent
        std::vector<R> x(cols_, R(0));
        for (size_t pi = 0; pi < pivots.size(); ++pi) x[pivots[pi]] = aug.at(int(pi), cols_);
        return x;
    }

  private:
    int rows_, cols_;
    std::vector<R> d_;
};

}  // namespace orbicurve

#endif
