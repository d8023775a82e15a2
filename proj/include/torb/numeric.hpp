// Arbitrary-precision integer/rational scalars and small number-theory helpers.
#ifndef TORB_NUMERIC_HPP
#define TORB_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace torb {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign(const Int& v) { return v.sign(); }

inline Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

// gcd normalized to be nonnegative; gcd(0,0) = 0.
inline Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int lcm_int(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline Int numer(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denom(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return denom(r) == 1; }

// num/den with the canonical (positive-denominator) form; the raw two-argument
// rational constructor rejects negative denominators.
inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(std::move(num), std::move(den));
}

// Exact quotient; throws if b does not divide a.
inline Int exact_div(const Int& a, const Int& b) {
    if (b == 0) throw std::domain_error("exact_div: division by zero");
    Int q = a / b;
    if (q * b != a) throw std::domain_error("exact_div: not divisible");
    return q;
}

// Residue in [0, |m|).
inline Int mod_floor(const Int& a, const Int& m) {
    Int mm = abs_int(m);
    Int r = a % mm;
    if (r < 0) r += mm;
    return r;
}

// Fractional part in [0, 1).
inline Rat frac_mod1(const Rat& r) {
    Int n = numer(r), d = denom(r);
    return Rat(mod_floor(n, d), d);
}

// Smallest positive integer k with k*r integral: the (positive) denominator.
inline Int minimal_integralizer(const Rat& r) { return denom(r); }

inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    for (long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

inline std::string to_string(const Int& v) { return v.str(); }

inline std::string to_string(const Rat& r) {
    if (is_integer(r)) return numer(r).str();
    return numer(r).str() + "/" + denom(r).str();
}

} // namespace torb

#endif
