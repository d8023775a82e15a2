// Smith normal form with unimodular transforms, determinant divisors and
// invariant factors. Deterministic: pivot = nonzero entry of minimal absolute
// value, ties broken by (row, col) lexicographic order.
#ifndef TORB_SMITH_HPP
#define TORB_SMITH_HPP

#include "torb/matrix.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

namespace torb {

struct SNFResult {
    IntMatrix u;      // rows x rows, |det| = 1
    IntMatrix d;      // diagonal, nonnegative, d_i | d_{i+1}
    IntMatrix v;      // cols x cols, |det| = 1
    IntMatrix u_inv;  // exact inverses, maintained alongside the transforms
    IntMatrix v_inv;

    std::vector<Int> diagonal() const {
        std::size_t k = std::min(d.rows(), d.cols());
        std::vector<Int> out(k);
        for (std::size_t i = 0; i < k; ++i) out[i] = d(i, i);
        return out;
    }

    std::size_t rank() const {
        std::size_t r = 0;
        for (const Int& x : diagonal())
            if (x != 0) ++r;
        return r;
    }
};

namespace detail {

class SmithWorker {
public:
    explicit SmithWorker(const IntMatrix& a)
        : m_(a),
          u_(IntMatrix::identity(a.rows())),
          u_inv_(IntMatrix::identity(a.rows())),
          v_(IntMatrix::identity(a.cols())),
          v_inv_(IntMatrix::identity(a.cols())) {}

    SNFResult run() {
        const std::size_t k = std::min(m_.rows(), m_.cols());
        for (std::size_t t = 0; t < k; ++t)
            if (!reduce_step(t)) break;
        normalize_signs();
        return SNFResult{std::move(u_), std::move(m_), std::move(v_),
                         std::move(u_inv_), std::move(v_inv_)};
    }

private:
    IntMatrix m_, u_, u_inv_, v_, v_inv_;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < m_.cols(); ++c) std::swap(m_(i, c), m_(j, c));
        for (std::size_t c = 0; c < u_.cols(); ++c) std::swap(u_(i, c), u_(j, c));
        for (std::size_t r = 0; r < u_inv_.rows(); ++r) std::swap(u_inv_(r, i), u_inv_(r, j));
    }

    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < m_.rows(); ++r) std::swap(m_(r, i), m_(r, j));
        for (std::size_t r = 0; r < v_.rows(); ++r) std::swap(v_(r, i), v_(r, j));
        for (std::size_t c = 0; c < v_inv_.cols(); ++c) std::swap(v_inv_(i, c), v_inv_(j, c));
    }

    // row_i += c * row_j
    void add_row(std::size_t i, std::size_t j, const Int& c) {
        if (c == 0) return;
        for (std::size_t col = 0; col < m_.cols(); ++col) m_(i, col) += c * m_(j, col);
        for (std::size_t col = 0; col < u_.cols(); ++col) u_(i, col) += c * u_(j, col);
        for (std::size_t r = 0; r < u_inv_.rows(); ++r) u_inv_(r, j) -= c * u_inv_(r, i);
    }

    // col_i += c * col_j
    void add_col(std::size_t i, std::size_t j, const Int& c) {
        if (c == 0) return;
        for (std::size_t r = 0; r < m_.rows(); ++r) m_(r, i) += c * m_(r, j);
        for (std::size_t r = 0; r < v_.rows(); ++r) v_(r, i) += c * v_(r, j);
        for (std::size_t col = 0; col < v_inv_.cols(); ++col) v_inv_(j, col) -= c * v_inv_(i, col);
    }

    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < m_.cols(); ++c) m_(i, c) = -m_(i, c);
        for (std::size_t c = 0; c < u_.cols(); ++c) u_(i, c) = -u_(i, c);
        for (std::size_t r = 0; r < u_inv_.rows(); ++r) u_inv_(r, i) = -u_inv_(r, i);
    }

    std::optional<std::pair<std::size_t, std::size_t>> find_pivot(std::size_t t) const {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        Int best_abs = 0;
        for (std::size_t i = t; i < m_.rows(); ++i)
            for (std::size_t j = t; j < m_.cols(); ++j) {
                if (m_(i, j) == 0) continue;
                Int a = abs_int(m_(i, j));
                if (!best || a < best_abs) {
                    best = {i, j};
                    best_abs = a;
                }
            }
        return best;
    }

    // Brings the (t,t) slot to a pivot dividing the whole remaining submatrix,
    // zero elsewhere in its row and column. Returns false when the submatrix is zero.
    bool reduce_step(std::size_t t) {
        for (;;) {
            auto piv = find_pivot(t);
            if (!piv) return false;
            swap_rows(t, piv->first);
            swap_cols(t, piv->second);

            bool clean = true;
            for (std::size_t i = t + 1; i < m_.rows(); ++i) {
                if (m_(i, t) == 0) continue;
                add_row(i, t, -Int(m_(i, t) / m_(t, t)));
                if (m_(i, t) != 0) clean = false;
            }
            if (!clean) continue;
            for (std::size_t j = t + 1; j < m_.cols(); ++j) {
                if (m_(t, j) == 0) continue;
                add_col(j, t, -Int(m_(t, j) / m_(t, t)));
                if (m_(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Divisibility sweep keeps the diagonal chain d_t | d_{t+1}.
            bool divides_all = true;
            for (std::size_t i = t + 1; i < m_.rows() && divides_all; ++i)
                for (std::size_t j = t + 1; j < m_.cols() && divides_all; ++j)
                    if (m_(i, j) % m_(t, t) != 0) {
                        add_row(t, i, Int(1));
                        divides_all = false;
                    }
            if (divides_all) return true;
        }
    }

    void normalize_signs() {
        const std::size_t k = std::min(m_.rows(), m_.cols());
        for (std::size_t t = 0; t < k; ++t)
            if (m_(t, t) < 0) negate_row(t);
    }
};

} // namespace detail

// U*A*V = D with U, V unimodular and D diagonal, d_i >= 0, d_i | d_{i+1}.
inline SNFResult smith_normal_form(const IntMatrix& a) {
    return detail::SmithWorker(a).run();
}

struct DeterminantDivisors {
    std::vector<Int> m; // m[0] = 1, m[i] = gcd of all i x i minors

    std::size_t order() const { return m.size() - 1; }
};

namespace detail {

inline void combinations(std::size_t n, std::size_t k,
                         const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    for (;;) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace detail

// m_i = gcd of all i x i minors, by direct enumeration.
inline DeterminantDivisors determinant_divisors(const IntMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("determinant_divisors: matrix not square");
    const std::size_t n = a.rows();
    DeterminantDivisors out;
    out.m.assign(n + 1, Int(0));
    out.m[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        Int g = 0;
        detail::combinations(n, i, [&](const std::vector<std::size_t>& rs) {
            detail::combinations(n, i, [&](const std::vector<std::size_t>& cs) {
                g = gcd_int(g, determinant(a.select(rs, cs)));
            });
        });
        out.m[i] = g;
    }
    return out;
}

// r_i = m_i / m_{i-1}; defined for nonsingular square matrices.
inline std::vector<Int> invariant_factors(const IntMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("invariant_factors: matrix not square");
    if (determinant(a) == 0)
        throw std::domain_error("invariant_factors: singular matrix");
    DeterminantDivisors dd = determinant_divisors(a);
    std::vector<Int> r(a.rows());
    for (std::size_t i = 1; i <= a.rows(); ++i) r[i - 1] = exact_div(dd.m[i], dd.m[i - 1]);
    return r;
}

} // namespace torb

#endif
