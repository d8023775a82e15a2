// Dense matrices over arbitrary-precision integers: exact determinant,
// adjugate and minor enumeration. Row-major, desk scale (n <= 8 typical).
#ifndef TORB_MATRIX_HPP
#define TORB_MATRIX_HPP

#include "torb/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace torb {

class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}

    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_)
                throw std::invalid_argument("IntMatrix: ragged initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMatrix diagonal(const std::vector<Int>& d) {
        IntMatrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const IntMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }
    bool operator!=(const IntMatrix& other) const { return !(*this == other); }

    std::vector<Int> row(std::size_t i) const {
        std::vector<Int> r(cols_);
        for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }

    std::vector<Int> col(std::size_t j) const {
        std::vector<Int> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    IntMatrix operator*(const IntMatrix& rhs) const {
        if (cols_ != rhs.rows_)
            throw std::invalid_argument("IntMatrix: dimension mismatch in product");
        IntMatrix out(rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j)
                    out(i, j) += a * rhs(k, j);
            }
        return out;
    }

    std::vector<Int> apply(const std::vector<Int>& v) const {
        if (v.size() != cols_)
            throw std::invalid_argument("IntMatrix: dimension mismatch in apply");
        std::vector<Int> out(rows_, Int(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    bool is_diagonal() const {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (i != j && (*this)(i, j) != 0) return false;
        return true;
    }

    // Submatrix keeping the given rows/cols (indices strictly increasing).
    IntMatrix select(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
        IntMatrix out(rs.size(), cs.size());
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < cs.size(); ++j) out(i, j) = (*this)(rs[i], cs[j]);
        return out;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

// Exact determinant by fraction-free (Bareiss) elimination.
inline Int determinant(const IntMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    Int prev = 1;
    int sgn = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(piv, j));
            sgn = -sgn;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sgn > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

namespace detail {

inline Int minor_det(const IntMatrix& a, std::size_t drop_row, std::size_t drop_col) {
    const std::size_t n = a.rows();
    IntMatrix sub(n - 1, n - 1);
    for (std::size_t i = 0, si = 0; i < n; ++i) {
        if (i == drop_row) continue;
        for (std::size_t j = 0, sj = 0; j < n; ++j) {
            if (j == drop_col) continue;
            sub(si, sj) = a(i, j);
            ++sj;
        }
        ++si;
    }
    return determinant(sub);
}

} // namespace detail

// Adjugate: transpose of the cofactor matrix, satisfying adj(A)*A = A*adj(A) = det(A)*I.
inline IntMatrix adjugate(const IntMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("adjugate: matrix not square");
    const std::size_t n = a.rows();
    if (n == 0) return a;
    if (n == 1) {
        IntMatrix out(1, 1);
        out(0, 0) = 1;
        return out;
    }
    IntMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Int c = detail::minor_det(a, j, i);
            out(i, j) = ((i + j) % 2 == 0) ? c : Int(-c);
        }
    return out;
}

} // namespace torb

#endif
