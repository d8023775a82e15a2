// Exact multivariate polynomials over the rationals, graded-lex canonical
// order. Degree d here is polynomial degree; the cohomological degree is 2d
// and the factor of two is applied only at reporting boundaries.
#ifndef TORB_POLYNOMIAL_HPP
#define TORB_POLYNOMIAL_HPP

#include "torb/numeric.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace torb {

using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

// Graded-lex, highest term first: sort key is (total degree desc, lex desc).
struct GrlexOrder {
    bool operator()(const Exponents& a, const Exponents& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

class Polynomial {
public:
    using TermMap = std::map<Exponents, Rat, GrlexOrder>;

    explicit Polynomial(std::size_t n_vars = 0) : n_vars_(n_vars) {}

    static Polynomial zero(std::size_t n_vars) { return Polynomial(n_vars); }

    static Polynomial constant(std::size_t n_vars, const Rat& c) {
        Polynomial p(n_vars);
        p.add_term(Exponents(n_vars, 0), c);
        return p;
    }

    static Polynomial variable(std::size_t n_vars, std::size_t i) {
        Polynomial p(n_vars);
        Exponents e(n_vars, 0);
        e[i] = 1;
        p.add_term(e, Rat(1));
        return p;
    }

    static Polynomial monomial(std::size_t n_vars, const Exponents& e, const Rat& c) {
        Polynomial p(n_vars);
        p.add_term(e, c);
        return p;
    }

    std::size_t n_vars() const { return n_vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int degree() const {
        if (terms_.empty()) return -1;
        return total_degree(terms_.begin()->first);
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = degree();
        for (const auto& [e, c] : terms_)
            if (total_degree(e) != d) return false;
        return true;
    }

    Rat coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(const Exponents& e, const Rat& c) {
        if (e.size() != n_vars_) throw std::invalid_argument("Polynomial: exponent arity mismatch");
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& rhs) {
        check_arity(rhs);
        for (const auto& [e, c] : rhs.terms_) add_term(e, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& rhs) {
        check_arity(rhs);
        for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    Polynomial operator-() const {
        Polynomial out(n_vars_);
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
        return out;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_arity(b);
        Polynomial out(a.n_vars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(a.n_vars_);
                for (std::size_t i = 0; i < a.n_vars_; ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }

    friend Polynomial operator*(const Rat& c, const Polynomial& p) {
        Polynomial out(p.n_vars_);
        if (c == 0) return out;
        for (const auto& [e, pc] : p.terms_) out.terms_.emplace(e, c * pc);
        return out;
    }

    Polynomial pow(unsigned k) const {
        Polynomial out = constant(n_vars_, Rat(1));
        for (unsigned i = 0; i < k; ++i) out = out * (*this);
        return out;
    }

    bool operator==(const Polynomial& rhs) const {
        return n_vars_ == rhs.n_vars_ && terms_ == rhs.terms_;
    }
    bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

    bool is_integral() const {
        for (const auto& [e, c] : terms_)
            if (!is_integer(c)) return false;
        return true;
    }

    // Substitute images[i] for variable i; images share a common arity.
    Polynomial substitute(const std::vector<Polynomial>& images) const {
        if (images.size() != n_vars_)
            throw std::invalid_argument("Polynomial::substitute: image count mismatch");
        std::size_t target = images.empty() ? 0 : images[0].n_vars();
        Polynomial out(target);
        for (const auto& [e, c] : terms_) {
            Polynomial term = constant(target, c);
            for (std::size_t i = 0; i < n_vars_; ++i)
                if (e[i] > 0) term = term * images[i].pow(static_cast<unsigned>(e[i]));
            out += term;
        }
        return out;
    }

private:
    void check_arity(const Polynomial& rhs) const {
        if (n_vars_ != rhs.n_vars_)
            throw std::invalid_argument("Polynomial: variable count mismatch");
    }

    std::size_t n_vars_;
    TermMap terms_;
};

// Rational linear form sum c_i * x_i; values of the axial function live here.
struct LinearForm {
    std::size_t n_vars = 0;
    std::vector<Rat> coeffs;

    LinearForm() = default;
    explicit LinearForm(std::vector<Rat> cs) : n_vars(cs.size()), coeffs(std::move(cs)) {}

    bool is_zero() const {
        for (const Rat& c : coeffs)
            if (c != 0) return false;
        return true;
    }

    // Natural pairing with a lattice vector.
    Rat pairing(const std::vector<Int>& v) const {
        if (v.size() != n_vars) throw std::invalid_argument("LinearForm: pairing arity mismatch");
        Rat acc = 0;
        for (std::size_t i = 0; i < n_vars; ++i) acc += coeffs[i] * Rat(v[i]);
        return acc;
    }

    Polynomial to_polynomial() const {
        Polynomial p(n_vars);
        for (std::size_t i = 0; i < n_vars; ++i) {
            Exponents e(n_vars, 0);
            e[i] = 1;
            p.add_term(e, coeffs[i]);
        }
        return p;
    }

    bool operator==(const LinearForm& rhs) const {
        return n_vars == rhs.n_vars && coeffs == rhs.coeffs;
    }
};

struct ContentSplit {
    Rat content;          // unique positive rational c
    Polynomial primitive; // integer coefficients with gcd 1, p = c * primitive
};

// p = c * q with c > 0 rational and q integer-primitive.
inline ContentSplit content_and_primitive(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("content_and_primitive: zero polynomial");
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : p.terms()) {
        num_gcd = gcd_int(num_gcd, numer(c));
        den_lcm = lcm_int(den_lcm, denom(c));
    }
    Rat content(num_gcd, den_lcm);
    Polynomial prim(p.n_vars());
    for (const auto& [e, c] : p.terms()) prim.add_term(e, c / content);
    return ContentSplit{content, std::move(prim)};
}

struct VectorContentSplit {
    Rat content;
    std::vector<Int> primitive;
};

inline VectorContentSplit content_and_primitive(const std::vector<Rat>& v) {
    Int num_gcd = 0, den_lcm = 1;
    for (const Rat& c : v) {
        num_gcd = gcd_int(num_gcd, numer(c));
        den_lcm = lcm_int(den_lcm, denom(c));
    }
    if (num_gcd == 0) throw std::domain_error("content_and_primitive: zero vector");
    Rat content(num_gcd, den_lcm);
    std::vector<Int> prim(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat q = v[i] / content;
        prim[i] = numer(q);
    }
    return VectorContentSplit{content, std::move(prim)};
}

inline bool is_integral(const Polynomial& p) { return p.is_integral(); }

// All exponent vectors of total degree d, highest first in graded-lex;
// there are C(d + n_vars - 1, n_vars - 1) of them.
inline std::vector<Exponents> homogeneous_basis(std::size_t n_vars, int degree) {
    if (degree < 0) throw std::invalid_argument("homogeneous_basis: negative degree");
    std::vector<Exponents> out;
    Exponents cur(n_vars, 0);
    auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
        if (pos + 1 == n_vars) {
            cur[pos] = remaining;
            out.push_back(cur);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur[pos] = e;
            self(self, pos + 1, remaining - e);
        }
    };
    if (n_vars == 0) {
        if (degree == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, degree);
    return out;
}

// Exact division of p by a nonzero primitive integral linear form; returns the
// quotient when f | p, nullopt otherwise.
inline std::optional<Polynomial> divides_linear(const LinearForm& f, const Polynomial& p) {
    if (f.is_zero()) throw std::domain_error("divides_linear: zero form");
    if (f.n_vars != p.n_vars()) throw std::invalid_argument("divides_linear: arity mismatch");
    std::size_t k = 0;
    while (f.coeffs[k] == 0) ++k;
    const Rat& c = f.coeffs[k];
    Polynomial fp = f.to_polynomial();
    Polynomial rem = p;
    Polynomial quot(p.n_vars());
    for (;;) {
        int dmax = 0;
        for (const auto& [e, _] : rem.terms()) dmax = std::max(dmax, e[k]);
        if (dmax == 0) break;
        Polynomial lead(p.n_vars());
        for (const auto& [e, coef] : rem.terms())
            if (e[k] == dmax) {
                Exponents q = e;
                q[k] -= 1;
                lead.add_term(q, coef / c);
            }
        quot += lead;
        rem -= lead * fp;
    }
    if (!rem.is_zero()) return std::nullopt;
    return quot;
}

// Canonical text rendering with explicit variable names: terms in graded-lex
// order, "5/2*x1 - 1/2*x2", powers as "x1^2".
inline std::string to_string(const Polynomial& p, const std::vector<std::string>& names) {
    if (names.size() != p.n_vars())
        throw std::invalid_argument("to_string: name count mismatch");
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Rat mag = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::string mono;
        for (std::size_t i = 0; i < p.n_vars(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            os << to_string(mag);
        } else {
            if (mag != 1) os << to_string(mag) << "*";
            os << mono;
        }
    }
    return os.str();
}

// Default names: x,y,z for up to three variables, x1..xk beyond.
inline std::vector<std::string> default_variable_names(std::size_t n_vars) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n_vars; ++i) {
        static const char* alias[] = {"x", "y", "z"};
        names.push_back(n_vars <= 3 ? alias[i] : "x" + std::to_string(i + 1));
    }
    return names;
}

inline std::string to_string(const Polynomial& p) {
    return to_string(p, default_variable_names(p.n_vars()));
}

inline std::string to_string(const LinearForm& f) {
    return to_string(f.to_polynomial());
}

} // namespace torb

#endif
