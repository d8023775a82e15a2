// Core invariants of a characteristic matrix: the finite group G = Z^n/ΛZ^n,
// the fixed-point subgroup N and the quotient G/N (the degree-3 cohomology),
// the labelled two-vertex torus graph, Thom classes, and the integrality
// constants tying the scaled adjugate to the axial function.
#ifndef TORB_ORBIFOLD_HPP
#define TORB_ORBIFOLD_HPP

#include "torb/faces.hpp"
#include "torb/lattice.hpp"
#include "torb/matrix.hpp"
#include "torb/polynomial.hpp"
#include "torb/smith.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace torb {

inline const Int kDefaultEnumerationCap = 1000000;

// Column labels fail the independence condition: det = 0.
struct SingularCharacteristic : std::runtime_error {
    explicit SingularCharacteristic(const std::string& what) : std::runtime_error(what) {}
};

// Requested enumeration exceeds the configured cap.
struct Unsupported : std::runtime_error {
    explicit Unsupported(const std::string& what) : std::runtime_error(what) {}
};

// Characteristic data: an n x n integer matrix whose j-th column labels the
// j-th facet (n >= 2), or a pair of nonzero labels (m, n) for the spindle.
struct CharMatrix {
    int n = 0;
    IntMatrix lambda;     // n x n, used when n >= 2
    Int spindle_m = 0;    // used when n == 1
    Int spindle_n = 0;

    static CharMatrix from_matrix(IntMatrix m) {
        if (m.rows() != m.cols() || m.rows() < 2)
            throw std::invalid_argument("CharMatrix: need a square matrix of size >= 2 "
                                        "(one-dimensional input takes a spindle pair)");
        CharMatrix c;
        c.n = static_cast<int>(m.rows());
        c.lambda = std::move(m);
        return c;
    }

    static CharMatrix from_spindle(Int m, Int n_val) {
        CharMatrix c;
        c.n = 1;
        c.spindle_m = std::move(m);
        c.spindle_n = std::move(n_val);
        return c;
    }

    bool is_spindle() const { return n == 1; }

    Int det() const {
        if (is_spindle()) throw std::logic_error("CharMatrix::det: spindle has no matrix");
        return determinant(lambda);
    }
};

inline void validate(const CharMatrix& c) {
    if (c.is_spindle()) {
        if (c.spindle_m == 0 || c.spindle_n == 0)
            throw SingularCharacteristic("spindle labels must be nonzero");
        return;
    }
    Int d = c.det();
    if (d == 0) throw SingularCharacteristic("condition (*) fails: det = 0");
}

// Point of the n-torus with rational coordinates reduced into [0,1).
struct TorusElement {
    std::vector<Rat> coords;

    static TorusElement reduce(std::vector<Rat> cs) {
        for (Rat& c : cs) c = frac_mod1(c);
        return TorusElement{std::move(cs)};
    }

    TorusElement operator+(const TorusElement& rhs) const {
        if (coords.size() != rhs.coords.size())
            throw std::invalid_argument("TorusElement: dimension mismatch");
        std::vector<Rat> out(coords.size());
        for (std::size_t i = 0; i < coords.size(); ++i)
            out[i] = frac_mod1(coords[i] + rhs.coords[i]);
        return TorusElement{std::move(out)};
    }

    bool operator==(const TorusElement& rhs) const { return coords == rhs.coords; }
    bool operator<(const TorusElement& rhs) const { return coords < rhs.coords; }

    bool is_identity() const {
        for (const Rat& c : coords)
            if (c != 0) return false;
        return true;
    }

    bool has_zero_coordinate() const {
        for (const Rat& c : coords)
            if (c == 0) return true;
        return false;
    }

    Int order() const {
        Int o = 1;
        for (const Rat& c : coords) o = lcm_int(o, denom(c));
        return o;
    }

    std::string to_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) out += ", ";
            out += torb::to_string(coords[i]);
        }
        return out + ")";
    }
};

// Invariant-factor description of a finite abelian group of torus elements.
// Generator i realizes factor i (for quotient groups it is a coset
// representative); the element list is populated only for groups enumerated
// directly.
struct FiniteAbelianGroup {
    std::vector<Int> factors; // nontrivial invariant factors, each dividing the next
    std::vector<TorusElement> generators;
    std::vector<TorusElement> elements;

    bool is_trivial() const { return factors.empty(); }

    Int order() const {
        Int o = 1;
        for (const Int& f : factors) o *= f;
        return o;
    }

    std::string name() const {
        if (factors.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) out += " x ";
            out += "C_" + to_string(factors[i]);
        }
        return out;
    }
};

namespace detail {

// Torus point of the class w in Z^n/diag(d)Z^n, realized through the column
// transform: t = V * diag(d)^{-1} * w mod 1.
inline TorusElement torus_point(const IntMatrix& v, const std::vector<Int>& d,
                                const std::vector<Int>& w) {
    std::size_t n = d.size();
    std::vector<Rat> t(n, Rat(0));
    for (std::size_t j = 0; j < n; ++j) {
        if (w[j] == 0) continue;
        Rat s(w[j], d[j]);
        for (std::size_t i = 0; i < n; ++i) t[i] += Rat(v(i, j)) * s;
    }
    return TorusElement::reduce(std::move(t));
}

} // namespace detail

// G = Z^n/ΛZ^n as a subgroup of the torus: invariant factors from the Smith
// form, generators realized as torus points, and the full element list when
// |det| stays within the cap.
inline FiniteAbelianGroup group_G(const CharMatrix& c, const Int& cap = kDefaultEnumerationCap) {
    if (c.is_spindle()) throw std::invalid_argument("group_G: defined for n >= 2");
    validate(c);
    SNFResult snf = smith_normal_form(c.lambda);
    std::vector<Int> d = snf.diagonal();
    std::size_t n = d.size();

    FiniteAbelianGroup g;
    for (std::size_t i = 0; i < n; ++i) {
        if (d[i] == 1) continue;
        g.factors.push_back(d[i]);
        std::vector<Int> w(n, Int(0));
        w[i] = 1;
        g.generators.push_back(detail::torus_point(snf.v, d, w));
    }

    Int order = abs_int(c.det());
    if (order <= cap) {
        std::vector<Int> w(n, Int(0));
        for (;;) {
            g.elements.push_back(detail::torus_point(snf.v, d, w));
            std::size_t k = 0;
            while (k < n) {
                w[k] += 1;
                if (w[k] < d[k]) break;
                w[k] = 0;
                ++k;
            }
            if (k == n) break;
        }
        std::sort(g.elements.begin(), g.elements.end());
    }
    return g;
}

// N together with the quotient G/N.
struct FixedPointAnalysis {
    FiniteAbelianGroup n_subgroup; // generated by elements with a vanishing coordinate
    FiniteAbelianGroup quotient;   // G/N; generators are coset representatives
};

// N is generated by the group elements with at least one coordinate equal to
// 0 mod 1 (those fix a point of the sphere, supported on the complementary
// coordinates). Both N and G/N are extracted by integer lattice algebra on
// the classes w in Z^n/diag(d)Z^n: the stacked matrix [w-columns | diag(d)]
// spans the preimage lattice L of N, G/N = Z^n/L, and N = L/diag(d)Z^n.
inline FixedPointAnalysis fixed_point_analysis(const CharMatrix& c,
                                               const Int& cap = kDefaultEnumerationCap) {
    if (c.is_spindle()) throw std::invalid_argument("fixed_point_analysis: defined for n >= 2");
    validate(c);
    Int order = abs_int(c.det());
    if (order > cap)
        throw Unsupported("group enumeration cap exceeded: |det| = " + to_string(order) +
                          " > cap = " + to_string(cap));

    SNFResult snf = smith_normal_form(c.lambda);
    std::vector<Int> d = snf.diagonal();
    std::size_t n = d.size();

    // Enumerate classes w, keep those whose torus point has a zero coordinate.
    std::vector<std::vector<Int>> fixed_classes;
    std::vector<Int> w(n, Int(0));
    for (;;) {
        if (detail::torus_point(snf.v, d, w).has_zero_coordinate()) fixed_classes.push_back(w);
        std::size_t k = 0;
        while (k < n) {
            w[k] += 1;
            if (w[k] < d[k]) break;
            w[k] = 0;
            ++k;
        }
        if (k == n) break;
    }

    IntMatrix stacked(n, fixed_classes.size() + n);
    for (std::size_t j = 0; j < fixed_classes.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) stacked(i, j) = fixed_classes[j][i];
    for (std::size_t i = 0; i < n; ++i) stacked(i, fixed_classes.size() + i) = d[i];

    FixedPointAnalysis out;

    // Quotient G/N = Z^n/L from the Smith form of the stacked matrix.
    SNFResult qsnf = smith_normal_form(stacked);
    std::vector<Int> qdiag = qsnf.diagonal();
    for (std::size_t i = 0; i < n; ++i) {
        if (qdiag[i] == 1) continue;
        out.quotient.factors.push_back(qdiag[i]);
        out.quotient.generators.push_back(detail::torus_point(snf.v, d, qsnf.u_inv.col(i)));
    }

    // N = L/diag(d)Z^n: with L = B Z^n, N is Z^n modulo the integer matrix
    // solving B C = diag(d).
    IntMatrix basis = column_lattice_basis(stacked);
    IntMatrix cmat(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Int> target(n, Int(0));
        target[j] = d[j];
        auto y = solve_columns(basis, target);
        if (!y) throw std::logic_error("fixed_point_analysis: diag(d) escapes the subgroup lattice");
        for (std::size_t i = 0; i < n; ++i) cmat(i, j) = (*y)[i];
    }
    SNFResult nsnf = smith_normal_form(cmat);
    std::vector<Int> ndiag = nsnf.diagonal();
    for (std::size_t i = 0; i < n; ++i) {
        if (ndiag[i] == 1) continue;
        out.n_subgroup.factors.push_back(ndiag[i]);
        out.n_subgroup.generators.push_back(
            detail::torus_point(snf.v, d, basis.apply(nsnf.u_inv.col(i))));
    }
    return out;
}

inline FiniteAbelianGroup h3(const CharMatrix& c, const Int& cap = kDefaultEnumerationCap) {
    return fixed_point_analysis(c, cap).quotient;
}

// Two-vertex torus graph with the axial labels and their minimal positive
// integralizers. For n >= 2 both orientations of an edge carry the same
// label; the spindle carries 1/m on one orientation and 1/n on the other.
struct OrbifoldTorusGraph {
    Graph graph{1};
    std::vector<LinearForm> axial_fwd; // index j-1: label of e_j (initial vertex p)
    std::vector<LinearForm> axial_rev; // label of the reversal (initial vertex q)
    std::vector<Int> r_fwd;            // minimal positive integralizers
    std::vector<Int> r_rev;

    const LinearForm& axial(const OrientedEdge& e) const {
        return e.reversed ? axial_rev[e.index - 1] : axial_fwd[e.index - 1];
    }
    const Int& r(const OrientedEdge& e) const {
        return e.reversed ? r_rev[e.index - 1] : r_fwd[e.index - 1];
    }
};

namespace detail {

inline Int integralizer(const LinearForm& f) {
    Int l = 1;
    for (const Rat& c : f.coeffs) l = lcm_int(l, denom(c));
    return l;
}

inline Int integralizer(const Polynomial& p) {
    Int l = 1;
    for (const auto& [e, c] : p.terms()) l = lcm_int(l, denom(c));
    return l;
}

} // namespace detail

inline OrbifoldTorusGraph orbifold_graph(const CharMatrix& c) {
    validate(c);
    OrbifoldTorusGraph g;
    g.graph = Graph(c.n);
    if (c.is_spindle()) {
        LinearForm fwd(std::vector<Rat>{make_rat(1, c.spindle_m)});
        LinearForm rev(std::vector<Rat>{make_rat(1, c.spindle_n)});
        g.axial_fwd = {fwd};
        g.axial_rev = {rev};
        g.r_fwd = {detail::integralizer(fwd)};
        g.r_rev = {detail::integralizer(rev)};
        return g;
    }
    Int d = c.det();
    IntMatrix adj = adjugate(c.lambda);
    for (int i = 0; i < c.n; ++i) {
        std::vector<Rat> coeffs(static_cast<std::size_t>(c.n));
        for (int j = 0; j < c.n; ++j)
            coeffs[static_cast<std::size_t>(j)] =
                make_rat(adj(static_cast<std::size_t>(i), static_cast<std::size_t>(j)), d);
        LinearForm form(std::move(coeffs));
        Int r = detail::integralizer(form);
        g.axial_fwd.push_back(form);
        g.axial_rev.push_back(form);
        g.r_fwd.push_back(r);
        g.r_rev.push_back(r);
    }
    return g;
}

// Thom class of a face: at each vertex, the product of the axial labels of
// the outgoing edges that leave the face; zero at a vertex the face misses.
struct ThomClass {
    Face face;
    Polynomial value_p;
    Polynomial value_q;
    Int a = 1; // minimal positive integer making both values integral
};

inline ThomClass thom_class(const CharMatrix& c, const Face& f) {
    validate(c);
    if (f.n != c.n) throw std::invalid_argument("thom_class: face ambient mismatch");
    OrbifoldTorusGraph g = orbifold_graph(c);
    std::size_t nv = static_cast<std::size_t>(c.n);

    auto product_over = [&](Vertex v, const std::vector<int>& edge_indices) {
        Polynomial prod = Polynomial::constant(nv, Rat(1));
        for (int j : edge_indices) {
            OrientedEdge e{j, v == Vertex::Q};
            prod = prod * g.axial(e).to_polynomial();
        }
        return prod;
    };

    ThomClass out;
    out.face = f;
    std::vector<int> all(static_cast<std::size_t>(c.n));
    for (int j = 1; j <= c.n; ++j) all[static_cast<std::size_t>(j - 1)] = j;

    switch (f.kind) {
    case Face::Kind::VertexP:
        out.value_p = product_over(Vertex::P, all);
        out.value_q = Polynomial::zero(nv);
        break;
    case Face::Kind::VertexQ:
        out.value_p = Polynomial::zero(nv);
        out.value_q = product_over(Vertex::Q, all);
        break;
    default: {
        // Edges normal to F_S at either vertex are exactly those indexed by S.
        std::vector<int> normal(f.facet_set.begin(), f.facet_set.end());
        out.value_p = product_over(Vertex::P, normal);
        out.value_q = product_over(Vertex::Q, normal);
        break;
    }
    }
    out.a = lcm_int(detail::integralizer(out.value_p), detail::integralizer(out.value_q));
    return out;
}

// ℓ_i, a_i, a_p, a_q, and the row-primitivized adjugate, together with the
// diagonal of its product with the characteristic matrix.
struct IntegralityConstants {
    std::vector<Int> ell;            // content of the i-th adjugate row
    std::vector<Int> a;              // |det| / ℓ_i = minimal integralizer of the i-th label
    Int a_p = 1, a_q = 1;            // via polynomial content of the vertex Thom classes
    IntMatrix row_primitive_adjugate; // adjugate with each row divided by its content
    std::vector<Int> signed_diagonal; // diagonal of row_primitive_adjugate * lambda = ±a_i
    bool divisibility_note = false;   // set when a_p or a_q does not divide |det|
};

inline IntegralityConstants integrality_constants(const CharMatrix& c) {
    if (c.is_spindle()) throw std::invalid_argument("integrality_constants: defined for n >= 2");
    validate(c);
    std::size_t n = static_cast<std::size_t>(c.n);
    Int det = c.det();
    IntMatrix adj = adjugate(c.lambda);

    IntegralityConstants out;
    out.row_primitive_adjugate = IntMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Int ell = 0;
        for (std::size_t j = 0; j < n; ++j) ell = gcd_int(ell, adj(i, j));
        out.ell.push_back(ell);
        out.a.push_back(exact_div(abs_int(det), ell));
        for (std::size_t j = 0; j < n; ++j)
            out.row_primitive_adjugate(i, j) = exact_div(adj(i, j), ell);
    }

    IntMatrix prod = out.row_primitive_adjugate * c.lambda;
    if (!prod.is_diagonal())
        throw std::logic_error("integrality_constants: scaled adjugate product not diagonal");
    for (std::size_t i = 0; i < n; ++i) out.signed_diagonal.push_back(prod(i, i));

    out.a_p = thom_class(c, Face::vertex_p(c.n)).a;
    out.a_q = thom_class(c, Face::vertex_q(c.n)).a;
    Int adet = abs_int(det);
    out.divisibility_note = (adet % out.a_p != 0) || (adet % out.a_q != 0);
    return out;
}

enum class HOddStatus { CertifiedZero, KnownNonzero, Unknown };

inline std::string to_string(HOddStatus s) {
    switch (s) {
    case HOddStatus::CertifiedZero: return "certified-zero";
    case HOddStatus::KnownNonzero: return "known-nonzero";
    default: return "unknown";
    }
}

struct ClassificationReport {
    int n = 0;
    bool spindle = false;
    Int spindle_m = 0, spindle_n = 0;

    Int det = 0;
    std::vector<Int> determinant_divisors; // gcds of i x i minors, i = 1..n
    std::vector<Int> invariant_factors;    // full chain, trivial factors included
    FiniteAbelianGroup g;
    FiniteAbelianGroup n_subgroup;
    FiniteAbelianGroup h3;

    bool is_diagonal = false;
    bool is_sphere = false;   // equivariantly the standard sphere
    bool det_is_unit = false;
    HOddStatus h_odd = HOddStatus::Unknown;
};

inline ClassificationReport classify(const CharMatrix& c,
                                     const Int& cap = kDefaultEnumerationCap) {
    validate(c);
    ClassificationReport rep;
    rep.n = c.n;
    if (c.is_spindle()) {
        // The spindle is equivariantly the round two-sphere; its odd
        // cohomology vanishes outright.
        rep.spindle = true;
        rep.spindle_m = c.spindle_m;
        rep.spindle_n = c.spindle_n;
        rep.is_sphere = true;
        rep.det_is_unit = abs_int(c.spindle_m) == 1 && abs_int(c.spindle_n) == 1;
        rep.h_odd = HOddStatus::CertifiedZero;
        return rep;
    }
    rep.det = c.det();
    DeterminantDivisors dd = determinant_divisors(c.lambda);
    rep.determinant_divisors.assign(dd.m.begin() + 1, dd.m.end());
    rep.invariant_factors = invariant_factors(c.lambda);
    rep.g = group_G(c, cap);
    FixedPointAnalysis fp = fixed_point_analysis(c, cap);
    rep.n_subgroup = fp.n_subgroup;
    rep.h3 = fp.quotient;

    rep.is_diagonal = c.lambda.is_diagonal();
    rep.det_is_unit = abs_int(rep.det) == 1;
    rep.is_sphere = rep.is_diagonal || rep.det_is_unit;
    if (rep.det_is_unit)
        rep.h_odd = HOddStatus::CertifiedZero;
    else if (!rep.h3.is_trivial())
        rep.h_odd = HOddStatus::KnownNonzero;
    else
        rep.h_odd = HOddStatus::Unknown;
    return rep;
}

} // namespace torb

#endif
