#include "torb/cohomology.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace torb;

namespace {

CharMatrix fig3() { return CharMatrix::from_matrix(IntMatrix{{1, 1}, {3, 5}}); }
CharMatrix upper22() { return CharMatrix::from_matrix(IntMatrix{{2, 1}, {0, 2}}); }
CharMatrix ident(int n) { return CharMatrix::from_matrix(IntMatrix::identity(n)); }

// rank of the degree-2d slice predicted by the monomial count formula
Int expected_rank(int n, int d) {
    Int r = binomial(d + n - 1, n - 1);
    if (d >= n) r += binomial(d - 1, n - 1);
    return r;
}

IntMatrix random_nonsingular(std::mt19937& rng, std::size_t n, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    for (;;) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
        if (determinant(m) != 0) return m;
    }
}

// coefficient vector of a piecewise polynomial over the degree-d monomials
std::vector<Int> coeff_vector(const PiecewisePolynomial& f, std::size_t nv, int d) {
    auto mons = homogeneous_basis(nv, d);
    auto index = detail::basis_index(mons);
    std::vector<Int> cp = detail::integer_coefficients(f.f_p, index);
    std::vector<Int> cq = detail::integer_coefficients(f.f_q, index);
    cp.insert(cp.end(), cq.begin(), cq.end());
    return cp;
}

} // namespace

TEST_CASE("piecewise polynomials") {
    Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
    PiecewisePolynomial a(x, y), b(y, x);
    CHECK((a + b) == PiecewisePolynomial(x + y, x + y));
    CHECK((a * b) == PiecewisePolynomial(x * y, x * y));
    CHECK((a - a).is_zero());
    CHECK(a.is_integral());
    CHECK_FALSE(PiecewisePolynomial(Rat(1) / Rat(2) * x, y).is_integral());
    CHECK(a.at(Vertex::P) == x);
    CHECK(a.at(Vertex::Q) == y);
    CHECK(PiecewisePolynomial::constant(2, Rat(3)).f_p == Polynomial::constant(2, Rat(3)));
}

TEST_CASE("edge congruences") {
    OrbifoldTorusGraph g = orbifold_graph(fig3());
    Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
    Polynomial l1 = Rat(5) * x - y, l2 = Rat(-3) * x + y;

    // equal polynomials at both vertices always pass
    CHECK(satisfies_congruences(g, PiecewisePolynomial(x * y, x * y)));
    // difference divisible by both scaled labels
    CHECK(satisfies_congruences(g, PiecewisePolynomial(l1 * l2, Polynomial::zero(2))));
    CHECK(satisfies_congruences(g, PiecewisePolynomial(Polynomial::zero(2), l1 * l2)));
    // divisible by only one label: fails the other congruence
    CHECK_FALSE(satisfies_congruences(g, PiecewisePolynomial(l1, Polynomial::zero(2))));
    CHECK_FALSE(satisfies_congruences(g, PiecewisePolynomial(x, Polynomial::zero(2))));

    OrbifoldTorusGraph s = orbifold_graph(CharMatrix::from_spindle(2, 3));
    Polynomial t = Polynomial::variable(1, 0);
    CHECK(satisfies_congruences(s, PiecewisePolynomial(t, Polynomial::zero(1))));
    CHECK_FALSE(satisfies_congruences(
        s, PiecewisePolynomial(Polynomial::constant(1, Rat(1)), Polynomial::zero(1))));
}

TEST_CASE("brute-force basis ranks") {
    SECTION("two-dimensional examples all share the rank profile") {
        for (const CharMatrix& c : {fig3(), upper22(), ident(2),
                                    CharMatrix::from_matrix(IntMatrix{{2, 0}, {0, 3}})}) {
            BruteForceResult r = brute_force_basis(c, 10);
            REQUIRE(r.hilbert.ranks.size() == 6);
            CHECK(r.hilbert.at(0) == 1);
            CHECK(r.hilbert.at(2) == 2);
            CHECK(r.hilbert.at(4) == 4);
            CHECK(r.hilbert.at(6) == 6);
            CHECK(r.hilbert.at(8) == 8);
            CHECK(r.hilbert.at(10) == 10);
        }
    }
    SECTION("three-dimensional identity") {
        BruteForceResult r = brute_force_basis(ident(3), 14);
        std::vector<std::size_t> expect{1, 3, 6, 11, 18, 27, 38, 51};
        for (int d = 0; d <= 7; ++d) CHECK(r.hilbert.at(2 * d) == expect[static_cast<std::size_t>(d)]);
    }
    SECTION("spindle") {
        for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 3}, {3, -2}, {5, 5}}) {
            BruteForceResult r = brute_force_basis(CharMatrix::from_spindle(m, n), 8);
            CHECK(r.hilbert.at(0) == 1);
            for (int d = 1; d <= 4; ++d) CHECK(r.hilbert.at(2 * d) == 2);
        }
    }
    SECTION("rank formula") {
        std::mt19937 rng(123);
        std::vector<CharMatrix> cases{fig3(), ident(2), ident(3),
                                      CharMatrix::from_spindle(4, 7)};
        for (int t = 0; t < 3; ++t)
            cases.push_back(CharMatrix::from_matrix(random_nonsingular(rng, 2, -9, 9)));
        for (const CharMatrix& c : cases) {
            int bound = c.n >= 2 ? 2 * c.n + 4 : 8;
            BruteForceResult r = brute_force_basis(c, bound);
            for (const auto& [deg, rank] : r.hilbert.ranks)
                CHECK(Int(rank) == expected_rank(c.n, deg / 2));
        }
    }
}

TEST_CASE("brute-force basis elements") {
    std::mt19937 rng(456);
    std::vector<CharMatrix> cases{fig3(), upper22(), ident(3),
                                  CharMatrix::from_matrix(random_nonsingular(rng, 2, -9, 9)),
                                  CharMatrix::from_spindle(3, -2)};
    for (const CharMatrix& c : cases) {
        OrbifoldTorusGraph g = orbifold_graph(c);
        int bound = c.n >= 2 ? 8 : 6;
        BruteForceResult r = brute_force_basis(c, bound);
        for (const BruteForceDegree& deg : r.degrees) {
            std::size_t nv = static_cast<std::size_t>(c.n);
            int d = deg.cohom_degree / 2;
            IntMatrix coeffs(2 * homogeneous_basis(nv, d).size(), deg.basis.size());
            for (std::size_t j = 0; j < deg.basis.size(); ++j) {
                const PiecewisePolynomial& b = deg.basis[j];
                CHECK(b.is_integral());
                CHECK(satisfies_congruences(g, b));
                if (!b.f_p.is_zero()) CHECK(b.f_p.degree() == d);
                if (!b.f_p.is_zero()) CHECK(b.f_p.is_homogeneous());
                if (!b.f_q.is_zero()) CHECK(b.f_q.is_homogeneous());
                std::vector<Int> v = coeff_vector(b, nv, d);
                for (std::size_t i = 0; i < v.size(); ++i) coeffs(i, j) = v[i];
            }
            // linear independence over the integers
            CHECK(lattice_rank(coeffs) == deg.basis.size());
        }
    }
}

TEST_CASE("brute-force module contains the scaled thom classes") {
    std::mt19937 rng(789);
    std::vector<CharMatrix> cases{fig3(), upper22(), ident(3),
                                  CharMatrix::from_matrix(random_nonsingular(rng, 3, -4, 4))};
    for (const CharMatrix& c : cases) {
        BruteForceResult r = brute_force_basis(c, 2 * c.n);
        for (const Face& f : faces(c.n)) {
            ThomClass t = thom_class(c, f);
            int d = f.codim();
            PiecewisePolynomial scaled(Rat(t.a) * t.value_p, Rat(t.a) * t.value_q);
            REQUIRE(scaled.is_integral());
            const BruteForceDegree& deg = r.degrees[static_cast<std::size_t>(d)];
            REQUIRE(deg.cohom_degree == 2 * d);
            std::size_t nv = static_cast<std::size_t>(c.n);
            IntMatrix span(2 * homogeneous_basis(nv, d).size(), deg.basis.size());
            for (std::size_t j = 0; j < deg.basis.size(); ++j) {
                std::vector<Int> v = coeff_vector(deg.basis[j], nv, d);
                for (std::size_t i = 0; i < v.size(); ++i) span(i, j) = v[i];
            }
            CHECK(LatticeSolver(span).contains(coeff_vector(scaled, nv, d)));
        }
    }
}

TEST_CASE("brute-force basis is deterministic") {
    BruteForceResult a = brute_force_basis(fig3(), 8);
    BruteForceResult b = brute_force_basis(fig3(), 8);
    REQUIRE(a.degrees.size() == b.degrees.size());
    for (std::size_t i = 0; i < a.degrees.size(); ++i) {
        REQUIRE(a.degrees[i].basis.size() == b.degrees[i].basis.size());
        for (std::size_t j = 0; j < a.degrees[i].basis.size(); ++j)
            CHECK(a.degrees[i].basis[j] == b.degrees[i].basis[j]);
    }
}

TEST_CASE("face ring relations hold identically") {
    std::mt19937 rng(1011);
    std::vector<CharMatrix> cases{fig3(), upper22(), ident(3),
                                  CharMatrix::from_matrix(IntMatrix{{2, 1}, {0, -3}}),
                                  CharMatrix::from_matrix(random_nonsingular(rng, 3, -5, 5))};
    for (const CharMatrix& c : cases) {
        auto rels = face_ring_relations(c);
        std::size_t faces_n = faces(c.n).size();
        CHECK(rels.size() == faces_n * (faces_n + 1) / 2);
        for (const auto& inst : rels) {
            INFO(inst.e.label() << " * " << inst.f.label());
            CHECK(inst.holds);
        }
        // the empty intersection of the two vertices gives the bare product
        bool found_pq = false;
        for (const auto& inst : rels)
            if (inst.e.is_vertex() && inst.f.is_vertex() && !(inst.e == inst.f)) {
                found_pq = true;
                CHECK(inst.meet_components.empty());
            }
        CHECK(found_pq);
    }
}

TEST_CASE("presentation of the weighted face ring") {
    SECTION("fixed two-dimensional example") {
        RingPresentation p = presentation(fig3());
        CHECK(p.label == "theorem form");
        CHECK(p.gen_names == std::vector<std::string>{"x", "y", "tau_p", "tau_q"});
        CHECK(p.gen_cohom_degrees == std::vector<int>{2, 2, 4, 4});
        CHECK(p.weights() == std::vector<int>{1, 1, 2, 2});
        REQUIRE(p.relations.size() == 2);
        CHECK(p.relation_display[0] == "(5*x - y)*(-3*x + y) - (tau_p + tau_q)");
        CHECK(p.relation_display[1] == "tau_p*tau_q");
        CHECK(p.relation_cohom_degree(0) == 4);
        CHECK(p.relation_cohom_degree(1) == 8);
        REQUIRE(p.has_evaluation());
        Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
        CHECK(p.images[0] == PiecewisePolynomial(x, x));
        CHECK(p.images[1] == PiecewisePolynomial(y, y));
        Polynomial tp = Rat(-15) * x * x + Rat(8) * x * y - y * y;
        CHECK(p.images[2] == PiecewisePolynomial(tp, Polynomial::zero(2)));
        CHECK(p.images[3] == PiecewisePolynomial(Polynomial::zero(2), tp));
        for (const Polynomial& rel : p.relations) CHECK(p.evaluate(rel).is_zero());
    }
    SECTION("negative determinant flips the row signs") {
        RingPresentation p = presentation(CharMatrix::from_matrix(IntMatrix{{2, 1}, {0, -3}}));
        CHECK(p.relation_display[0] == "(3*x + y)*(-y) - (tau_p + tau_q)");
        for (const Polynomial& rel : p.relations) CHECK(p.evaluate(rel).is_zero());
    }
    SECTION("three-dimensional identity") {
        RingPresentation p = presentation(ident(3));
        CHECK(p.gen_names == std::vector<std::string>{"x", "y", "z", "tau_p", "tau_q"});
        CHECK(p.relation_display[0] == "x*y*z - (tau_p + tau_q)");
        CHECK(p.relation_cohom_degree(0) == 6);
        for (const Polynomial& rel : p.relations) CHECK(p.evaluate(rel).is_zero());
    }
    SECTION("relations evaluate to zero on random matrices") {
        std::mt19937 rng(1213);
        for (int t = 0; t < 10; ++t) {
            std::size_t n = 2 + static_cast<std::size_t>(t % 2);
            RingPresentation p =
                presentation(CharMatrix::from_matrix(random_nonsingular(rng, n, -6, 6)));
            for (const Polynomial& rel : p.relations) CHECK(p.evaluate(rel).is_zero());
        }
    }
}

TEST_CASE("corollary form") {
    SECTION("spindle ring with evaluation") {
        RingPresentation p = corollary_presentation(CharMatrix::from_spindle(2, 3));
        CHECK(p.label == "corollary form");
        CHECK(p.gen_names == std::vector<std::string>{"2*tau_p", "3*tau_q"});
        CHECK(p.gen_cohom_degrees == std::vector<int>{2, 2});
        REQUIRE(p.relations.size() == 1);
        CHECK(p.relation_display[0] == "6*tau_p*tau_q");
        CHECK_FALSE(p.corollary_caveat);
        REQUIRE(p.has_evaluation());
        Polynomial x = Polynomial::variable(1, 0);
        CHECK(p.images[0] == PiecewisePolynomial(x, Polynomial::zero(1)));
        CHECK(p.images[1] == PiecewisePolynomial(Polynomial::zero(1), x));
        CHECK(p.evaluate(p.relations[0]).is_zero());
    }
    SECTION("formal statement for matrices") {
        RingPresentation p = corollary_presentation(fig3());
        CHECK(p.gen_names ==
              std::vector<std::string>{"tau_1", "tau_2", "tau_p", "tau_q"});
        CHECK(p.corollary_caveat); // |det| = 2
        CHECK_FALSE(p.has_evaluation());
        CHECK(p.relation_display[0] == "tau_1*tau_2 - (tau_p + tau_q)");
        CHECK_FALSE(corollary_presentation(ident(2)).corollary_caveat);
        CHECK_THROWS_AS(verify_presentation(fig3(), p, 6), std::invalid_argument);
    }
}

TEST_CASE("hilbert function of a presentation") {
    SECTION("matches the oracle profile for the theorem form") {
        HilbertFunction h = hilbert_of_presentation(presentation(fig3()), 10);
        CHECK(h.at(0) == 1);
        CHECK(h.at(2) == 2);
        CHECK(h.at(4) == 4);
        CHECK(h.at(6) == 6);
        CHECK(h.at(10) == 10);
    }
    SECTION("spindle corollary ring") {
        HilbertFunction h =
            hilbert_of_presentation(corollary_presentation(CharMatrix::from_spindle(5, 5)), 8);
        CHECK(h.at(0) == 1);
        for (int d = 1; d <= 4; ++d) CHECK(h.at(2 * d) == 2);
    }
    SECTION("free ring when there are no relations") {
        RingPresentation free;
        free.gen_names = {"u", "v"};
        free.gen_cohom_degrees = {2, 2};
        HilbertFunction h = hilbert_of_presentation(free, 8);
        for (int d = 0; d <= 4; ++d) CHECK(h.at(2 * d) == static_cast<std::size_t>(d + 1));
    }
    SECTION("weighted homogeneity is enforced") {
        RingPresentation bad;
        bad.gen_names = {"u", "t"};
        bad.gen_cohom_degrees = {2, 4};
        Polynomial rel(2);
        rel.add_term({1, 0}, Rat(1));
        rel.add_term({0, 1}, Rat(1)); // u + t mixes weighted degrees 1 and 2
        bad.relations.push_back(rel);
        CHECK_THROWS_AS(hilbert_of_presentation(bad, 4), std::invalid_argument);
    }
}

TEST_CASE("verification against the oracle") {
    SECTION("fixed matrices pass at the default bound") {
        for (const CharMatrix& c :
             {fig3(), upper22(), ident(2), CharMatrix::from_matrix(IntMatrix{{2, 0}, {0, 3}})}) {
            VerifyReport rep = verify(c, default_verification_bound(c.n));
            CHECK(rep.pass);
            CHECK(rep.relations_zero);
            CHECK(rep.first_failing_degree == -1);
            for (const DegreeCheck& chk : rep.degrees) {
                CHECK(chk.rank_match);
                CHECK(chk.membership);
            }
        }
    }
    SECTION("spindles pass") {
        for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 3}, {3, -2}, {5, 5}}) {
            VerifyReport rep = verify(CharMatrix::from_spindle(m, n), 8);
            CHECK(rep.pass);
        }
    }
    SECTION("a corrupted relation is caught by evaluation at degree 2n") {
        CharMatrix c = fig3();
        RingPresentation p = presentation(c);
        // drop the tau_p term from the product relation
        Exponents etp(4, 0);
        etp[2] = 1;
        p.relations[0].add_term(etp, Rat(1));
        VerifyReport rep = verify_presentation(c, p, 10);
        CHECK_FALSE(rep.pass);
        CHECK_FALSE(rep.relations_zero);
        CHECK(rep.first_failing_degree == 4);
        // ranks and membership are blind to the corruption: the generators and
        // the ideal's Hilbert function are unchanged
        for (const DegreeCheck& chk : rep.degrees) {
            CHECK(chk.rank_match);
            CHECK(chk.membership);
        }
    }
    SECTION("default bounds") {
        CHECK(default_verification_bound(1) == 8);
        CHECK(default_verification_bound(2) == 10);
        CHECK(default_verification_bound(3) == 14);
        CHECK(default_verification_bound(4) == 18);
    }
}
