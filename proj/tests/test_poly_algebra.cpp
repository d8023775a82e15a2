#include "torb/polynomial.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace torb;

namespace {

Polynomial X() { return Polynomial::variable(2, 0); }
Polynomial Y() { return Polynomial::variable(2, 1); }

} // namespace

TEST_CASE("polynomial arithmetic") {
    Polynomial x = X(), y = Y();
    CHECK((x + y) * (x - y) == x * x - y * y);
    Polynomial sq = (x + y) * (x + y);
    CHECK(sq.coeff({2, 0}) == 1);
    CHECK(sq.coeff({1, 1}) == 2);
    CHECK(sq.coeff({0, 2}) == 1);
    CHECK(sq.coeff({0, 0}) == 0);
    CHECK(sq == (x + y).pow(2));
    CHECK((x + y).pow(0) == Polynomial::constant(2, Rat(1)));
    CHECK(Rat(3) * x - Rat(3) * x == Polynomial::zero(2));
    CHECK((-x).coeff({1, 0}) == -1);
    CHECK(x * Polynomial::zero(2) == Polynomial::zero(2));
}

TEST_CASE("degree and homogeneity") {
    Polynomial x = X(), y = Y();
    CHECK(Polynomial::zero(2).degree() == -1);
    CHECK(Polynomial::constant(2, Rat(5)).degree() == 0);
    CHECK((x * x * y + y).degree() == 3);
    CHECK((x * x + x * y).is_homogeneous());
    CHECK_FALSE((x * x + y).is_homogeneous());
    CHECK(Polynomial::zero(2).is_homogeneous());
    // cancellation drops terms entirely
    Polynomial p = x * x + y;
    p -= x * x;
    CHECK(p.degree() == 1);
    CHECK(p == y);
}

TEST_CASE("graded-lex rendering") {
    Polynomial x = X(), y = Y();
    Polynomial p = x * x + x * y + y * y + x + Polynomial::constant(2, Rat(1));
    CHECK(to_string(p) == "x^2 + x*y + y^2 + x + 1");
    Polynomial q = Rat(-3) / Rat(2) * x + Rat(1) / Rat(2) * y;
    CHECK(to_string(q) == "-3/2*x + 1/2*y");
    CHECK(to_string(Polynomial::zero(2)) == "0");
    CHECK(to_string(Polynomial::constant(2, Rat(-7))) == "-7");
    CHECK(to_string(x - y) == "x - y");
    CHECK(to_string(Rat(2) * x * y) == "2*x*y");
    CHECK(to_string(x.pow(3), {"u", "v"}) == "u^3");
    CHECK(to_string(Polynomial::variable(4, 3)) == "x4");
    CHECK(default_variable_names(3) == std::vector<std::string>{"x", "y", "z"});
    CHECK(default_variable_names(4) == std::vector<std::string>{"x1", "x2", "x3", "x4"});
}

TEST_CASE("substitution") {
    Polynomial x = X(), y = Y();
    Polynomial u = Polynomial::variable(2, 0), v = Polynomial::variable(2, 1);
    // x -> u+v, y -> u-v turns x*y into u^2 - v^2
    Polynomial img = (x * y).substitute({u + v, u - v});
    CHECK(img == u * u - v * v);
    // substitution into a different arity
    Polynomial w = Polynomial::variable(1, 0);
    Polynomial r = (x * x + y).substitute({w, Polynomial::zero(1)});
    CHECK(r == w * w);
    CHECK(Polynomial::constant(2, Rat(3)).substitute({w, w}) == Polynomial::constant(1, Rat(3)));
}

TEST_CASE("integrality") {
    Polynomial x = X(), y = Y();
    CHECK((Rat(2) * x + y).is_integral());
    CHECK_FALSE((Rat(1) / Rat(2) * x).is_integral());
    CHECK(Polynomial::zero(2).is_integral());
}

TEST_CASE("content and primitive part") {
    Polynomial x = X(), y = Y();
    SECTION("integer coefficients") {
        ContentSplit s = content_and_primitive(Rat(6) * x + Rat(4) * y);
        CHECK(s.content == Rat(2));
        CHECK(s.primitive == Rat(3) * x + Rat(2) * y);
    }
    SECTION("rational coefficients") {
        ContentSplit s = content_and_primitive(Rat(3) / Rat(2) * x - Rat(1) / Rat(2) * y);
        CHECK(s.content == Rat(1) / Rat(2));
        CHECK(s.primitive == Rat(3) * x - y);
    }
    SECTION("round trip and primitivity") {
        Polynomial p = Rat(9) / Rat(10) * x * x - Rat(6) / Rat(5) * y * y;
        ContentSplit s = content_and_primitive(p);
        CHECK(s.content > 0);
        CHECK(s.primitive.is_integral());
        Int g = 0;
        for (const auto& [e, c] : s.primitive.terms()) g = gcd_int(g, numer(c));
        CHECK(g == 1);
        CHECK(s.content * s.primitive == p);
    }
    SECTION("zero rejected") {
        CHECK_THROWS_AS(content_and_primitive(Polynomial::zero(2)), std::domain_error);
    }
    SECTION("vector form") {
        VectorContentSplit s = content_and_primitive(
            std::vector<Rat>{Rat(5) / Rat(2), Rat(-1) / Rat(2)});
        CHECK(s.content == Rat(1) / Rat(2));
        CHECK(s.primitive == std::vector<Int>{5, -1});
        CHECK_THROWS_AS(content_and_primitive(std::vector<Rat>{Rat(0), Rat(0)}),
                        std::domain_error);
    }
}

TEST_CASE("homogeneous basis enumeration") {
    auto b23 = homogeneous_basis(2, 3);
    REQUIRE(b23.size() == 4);
    CHECK(b23[0] == Exponents{3, 0});
    CHECK(b23[1] == Exponents{2, 1});
    CHECK(b23[2] == Exponents{1, 2});
    CHECK(b23[3] == Exponents{0, 3});

    auto b32 = homogeneous_basis(3, 2);
    REQUIRE(b32.size() == 6);
    CHECK(b32.front() == Exponents{2, 0, 0});
    CHECK(b32.back() == Exponents{0, 0, 2});

    CHECK(homogeneous_basis(3, 0) == std::vector<Exponents>{{0, 0, 0}});
    // |basis(n,d)| = C(d+n-1, n-1)
    CHECK(Int(homogeneous_basis(4, 5).size()) == binomial(8, 3));
}

TEST_CASE("division by a linear form") {
    Polynomial x = X(), y = Y();
    LinearForm f(std::vector<Rat>{Rat(1), Rat(-1)}); // x - y
    auto q = divides_linear(f, x * x - y * y);
    REQUIRE(q.has_value());
    CHECK(*q == x + y);
    CHECK_FALSE(divides_linear(f, x * x + y * y).has_value());
    auto qz = divides_linear(f, Polynomial::zero(2));
    REQUIRE(qz.has_value());
    CHECK(qz->is_zero());

    LinearForm g(std::vector<Rat>{Rat(2), Rat(-1)}); // 2x - y
    Polynomial prod = g.to_polynomial() * (x + Rat(3) * y);
    auto qg = divides_linear(g, prod);
    REQUIRE(qg.has_value());
    CHECK(*qg == x + Rat(3) * y);

    // form with zero leading coefficient: y | x*y
    LinearForm h(std::vector<Rat>{Rat(0), Rat(1)});
    auto qh = divides_linear(h, x * y);
    REQUIRE(qh.has_value());
    CHECK(*qh == x);
    CHECK_FALSE(divides_linear(h, x).has_value());

    CHECK_THROWS_AS(divides_linear(LinearForm(std::vector<Rat>{Rat(0), Rat(0)}), x),
                    std::domain_error);
}

TEST_CASE("linear form pairing") {
    // rows of the adjugate of [[1,1],[3,5]] divided by det = 2
    LinearForm a1(std::vector<Rat>{Rat(5) / Rat(2), Rat(-1) / Rat(2)});
    LinearForm a2(std::vector<Rat>{Rat(-3) / Rat(2), Rat(1) / Rat(2)});
    std::vector<Int> l1{1, 3}, l2{1, 5};
    CHECK(a1.pairing(l1) == 1);
    CHECK(a1.pairing(l2) == 0);
    CHECK(a2.pairing(l1) == 0);
    CHECK(a2.pairing(l2) == 1);
    CHECK(to_string(a1) == "5/2*x - 1/2*y");
    CHECK_THROWS_AS(a1.pairing(std::vector<Int>{1}), std::invalid_argument);
}

TEST_CASE("grlex term order") {
    GrlexOrder less;
    // higher degree first
    CHECK(less(Exponents{2, 0}, Exponents{1, 0}));
    // same degree: lex-larger exponent vector first
    CHECK(less(Exponents{2, 0}, Exponents{1, 1}));
    CHECK(less(Exponents{1, 1}, Exponents{0, 2}));
    CHECK_FALSE(less(Exponents{0, 2}, Exponents{1, 1}));
}
