// Integer-lattice kernels, spans and membership solves on top of the Smith form.
#ifndef TORB_LATTICE_HPP
#define TORB_LATTICE_HPP

#include "torb/smith.hpp"

#include <optional>
#include <vector>

namespace torb {

// Basis of {x in Z^cols : A x = 0}; the kernel is saturated, so the columns of V
// past the rank of A form a Z-basis.
inline std::vector<std::vector<Int>> kernel_lattice_basis(const IntMatrix& a) {
    SNFResult snf = smith_normal_form(a);
    std::size_t r = snf.rank();
    std::vector<std::vector<Int>> basis;
    for (std::size_t j = r; j < a.cols(); ++j) basis.push_back(snf.v.col(j));
    return basis;
}

// Z-basis of the lattice spanned by the columns of A, returned as the columns
// of the result: with U A V = D, the span equals U^{-1} * D, so the basis
// vectors are d_i * (column i of U^{-1}) for the nonzero d_i.
inline IntMatrix column_lattice_basis(const IntMatrix& a) {
    SNFResult snf = smith_normal_form(a);
    std::size_t r = snf.rank();
    IntMatrix basis(a.rows(), r);
    for (std::size_t j = 0; j < r; ++j) {
        const Int& dj = snf.d(j, j);
        for (std::size_t i = 0; i < a.rows(); ++i) basis(i, j) = dj * snf.u_inv(i, j);
    }
    return basis;
}

inline std::size_t lattice_rank(const IntMatrix& a) { return smith_normal_form(a).rank(); }

// Repeated exact solves A y = t against a fixed A: the Smith form is computed
// once at construction.
class LatticeSolver {
public:
    explicit LatticeSolver(const IntMatrix& a)
        : rows_(a.rows()), cols_(a.cols()), snf_(smith_normal_form(a)) {}

    std::optional<std::vector<Int>> solve(const std::vector<Int>& t) const {
        std::vector<Int> s = snf_.u.apply(t);
        std::size_t k = std::min(rows_, cols_);
        std::vector<Int> z(cols_, Int(0));
        for (std::size_t i = 0; i < rows_; ++i) {
            Int di = i < k ? snf_.d(i, i) : Int(0);
            if (di == 0) {
                if (s[i] != 0) return std::nullopt;
            } else {
                if (s[i] % di != 0) return std::nullopt;
                if (i < cols_) z[i] = s[i] / di;
            }
        }
        return snf_.v.apply(z);
    }

    bool contains(const std::vector<Int>& t) const { return solve(t).has_value(); }

private:
    std::size_t rows_, cols_;
    SNFResult snf_;
};

// Integer solution y of A y = t, if one exists.
inline std::optional<std::vector<Int>> solve_columns(const IntMatrix& a, const std::vector<Int>& t) {
    return LatticeSolver(a).solve(t);
}

inline bool lattice_contains(const IntMatrix& generators, const std::vector<Int>& t) {
    return LatticeSolver(generators).contains(t);
}

// Invariant factors (trivial ones dropped) of the finite part of Z^k / colspan(A),
// where k = A.rows(). Appends one 0 per free factor when the span has rank < k.
inline std::vector<Int> quotient_invariant_factors(const IntMatrix& a) {
    SNFResult snf = smith_normal_form(a);
    std::vector<Int> diag = snf.diagonal();
    std::vector<Int> out;
    for (const Int& d : diag)
        if (d > 1) out.push_back(d);
    std::size_t r = snf.rank();
    for (std::size_t i = r; i < a.rows(); ++i) out.push_back(0);
    return out;
}

} // namespace torb

#endif
