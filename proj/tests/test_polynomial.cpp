#include <doctest.h>

#include <random>

#include "fbt/polynomial.hpp"
#include "fbt/randgen.hpp"

using namespace fbt;

namespace {

Polynomial P(const std::string& s, int n = 0) { return Polynomial::parse(s, n); }

// independent naive product oracle: raw term-by-term convolution into a
// plain list, then canonicalized through add_term
Polynomial naive_mul(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a.nvars());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            Monomial m(a.nvars());
            for (int i = 0; i < a.nvars(); ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

GaussianRational naive_eval(const Polynomial& p, const ExactPoint& w) {
    GaussianRational acc;
    for (const auto& [m, c] : p.terms()) {
        GaussianRational t = c;
        for (int i = 0; i < p.nvars(); ++i)
            for (int k = 0; k < m[i]; ++k) t *= w[i];
        acc += t;
    }
    return acc;
}

}  // namespace

TEST_CASE("addition basics") {
    CHECK(P("z1") + P("0/1 - z1") == Polynomial::zero(1));
    CHECK(P("z1^2 + 1", 2) + P("z2", 2) == P("z1^2 + z2 + 1", 2));
    std::mt19937_64 rng(7);
    for (int k = 0; k < 20; ++k) {
        Polynomial p = random_polynomial(rng, 3, 5);
        CHECK(p + Polynomial::zero(3) == p);
    }
    CHECK_THROWS_AS(P("z1", 1) + P("z2", 2), std::invalid_argument);
}

TEST_CASE("multiplication and degree additivity") {
    CHECK(P("z1+z2") * P("z1-z2") == P("z1^2 - z2^2"));
    std::mt19937_64 rng(11);
    for (int k = 0; k < 50; ++k) {
        int n = std::uniform_int_distribution<int>(1, 3)(rng);
        Polynomial a = random_polynomial(rng, n, 4);
        Polynomial b = random_polynomial(rng, n, 4);
        Polynomial ab = a * b;
        CHECK(ab == naive_mul(a, b));
        if (!a.is_zero() && !b.is_zero()) CHECK(ab.degree() == a.degree() + b.degree());
        CHECK(a * Polynomial::constant(n, GaussianRational{1}) == a);
    }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(13);
    for (int k = 0; k < 25; ++k) {
        int n = std::uniform_int_distribution<int>(1, 3)(rng);
        Polynomial a = random_polynomial(rng, n, 3), b = random_polynomial(rng, n, 3),
                   c = random_polynomial(rng, n, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
    }
}

TEST_CASE("evaluation") {
    Polynomial p = P("z1^2 + z2^2 + 3/1", 2);
    CHECK(p.eval(ExactPoint{GaussianRational{0}, GaussianRational{0}}) == GaussianRational{3});
    CHECK(P("z1*z2").eval(ExactPoint{GaussianRational{2}, GaussianRational{3}}) ==
          GaussianRational{6});
    std::mt19937_64 rng(17);
    for (int k = 0; k < 20; ++k) {
        Polynomial q = random_polynomial(rng, 2, 5);
        ExactPoint w = random_point(rng, 2);
        CHECK(q.eval(w) == naive_eval(q, w));
    }
}

TEST_CASE("partial derivatives") {
    CHECK(P("z1^2+z2^2").partial(1) == P("2/1*z1", 2));
    CHECK(P("5/1", 2).partial(2) == Polynomial::zero(2));
    CHECK(P("z1^3*z2").partial(1) == P("3/1*z1^2*z2"));
    CHECK_THROWS_AS(P("z1").partial(2), std::out_of_range);
    std::mt19937_64 rng(19);
    for (int k = 0; k < 20; ++k) {
        Polynomial p = random_polynomial(rng, 3, 5);
        for (int i = 1; i <= 3; ++i)
            for (int j = i + 1; j <= 3; ++j)
                CHECK(p.partial(i).partial(j) == p.partial(j).partial(i));
    }
}

TEST_CASE("taylor shift") {
    CHECK(P("z1^2").taylor_shift({GaussianRational{1}}) == P("z1^2 + 2/1*z1 + 1/1"));
    std::mt19937_64 rng(23);
    for (int k = 0; k < 20; ++k) {
        int n = std::uniform_int_distribution<int>(1, 3)(rng);
        Polynomial p = random_polynomial(rng, n, 4);
        ExactPoint w = random_point(rng, n);
        CHECK(p.taylor_shift(ExactPoint(n)) == p);
        ExactPoint neg(n);
        for (int i = 0; i < n; ++i) neg[i] = -w[i];
        CHECK(p.taylor_shift(w).taylor_shift(neg) == p);
        // eval(shift(p,w), z) = eval(p, z+w)
        ExactPoint z = random_point(rng, n), zw(n);
        for (int i = 0; i < n; ++i) zw[i] = z[i] + w[i];
        CHECK(p.taylor_shift(w).eval(z) == p.eval(zw));
    }
}

TEST_CASE("gcd basics") {
    CHECK(gcd(P("z1^2"), P("z1")) == P("z1"));
    CHECK(gcd(P("z1^2+z1"), P("1/1", 1)) == P("1/1", 1));
    CHECK_THROWS_AS(gcd(Polynomial::zero(1), Polynomial::zero(1)), std::invalid_argument);

    // construct from known factors
    Polynomial a = P("z1+z2") * P("z1+z2") * P("z1-z2");
    Polynomial b = P("z1+z2") * P("z1-z2") * P("z1-z2");
    Polynomial g = gcd(a, b);
    Polynomial common = normalize_monic(P("z1+z2") * P("z1-z2"));
    CHECK(g == common);
    CHECK(divide_exact(a, g).has_value());
    CHECK(divide_exact(b, g).has_value());
}

TEST_CASE("gcd of scaled pairs") {
    std::mt19937_64 rng(29);
    for (int k = 0; k < 10; ++k) {
        int n = std::uniform_int_distribution<int>(1, 2)(rng);
        Polynomial g = random_polynomial(rng, n, 2, 2);
        if (g.is_constant()) g = g + Polynomial::variable(n, 1);
        Polynomial a = random_polynomial(rng, n, 2, 2);
        Polynomial b = a + Polynomial::constant(n, GaussianRational{1});  // coprime to a generically
        Polynomial d = gcd(g * a, g * b);
        // d is divisible by g and divides g*gcd(a,b)
        CHECK(divide_exact(d, normalize_monic(g)).has_value());
        CHECK(divide_exact(g * a, d).has_value());
        CHECK(divide_exact(g * b, d).has_value());
    }
}

TEST_CASE("exact division") {
    std::mt19937_64 rng(31);
    for (int k = 0; k < 30; ++k) {
        int n = std::uniform_int_distribution<int>(1, 3)(rng);
        Polynomial p = random_polynomial(rng, n, 3);
        Polynomial g = random_polynomial(rng, n, 3);
        if (p.is_zero()) p = Polynomial::constant(n, GaussianRational{1});
        auto q = divide_exact(p * g, p);
        REQUIRE(q.has_value());
        CHECK(*q == g);
    }
    CHECK_FALSE(divide_exact(P("z1"), P("z1^2")).has_value());
    CHECK(divide_exact(Polynomial::zero(1), P("z1")) == Polynomial::zero(1));
    CHECK_THROWS_AS(divide_exact(P("z1"), Polynomial::zero(1)), std::invalid_argument);
}

TEST_CASE("leading coefficient in a variable") {
    auto [c1, d1] = leading_coefficient(P("z1^2*z2 + z2"), 1);
    CHECK(c1 == P("z2", 2));
    CHECK(d1 == 2);
    auto [c2, d2] = leading_coefficient(P("3/1*z1^4 + z1 + 2/1"), 1);
    CHECK(c2 == P("3/1", 1));
    CHECK(d2 == 4);
    auto [c3, d3] = leading_coefficient(P("z2^2+1", 2), 1);
    CHECK(c3 == P("z2^2+1", 2));
    CHECK(d3 == 0);
}

TEST_CASE("degree sentinel") {
    CHECK(Polynomial::zero(2).degree() == -1);
    CHECK(Polynomial::zero(2).degree_in(1) == -1);
    CHECK(P("1/1", 2).degree() == 0);
}

TEST_CASE("parser round trip and errors") {
    std::mt19937_64 rng(37);
    for (int k = 0; k < 25; ++k) {
        int n = std::uniform_int_distribution<int>(1, 3)(rng);
        Polynomial p = random_polynomial(rng, n, 5);
        CHECK(Polynomial::parse(p.str(), n) == p);
    }
    CHECK(P("(1/1)*z1^2 + (1/1)*z2^2 + (-1/1)") == P("z1^2+z2^2-1"));
    CHECK(P(" z1 ^ 2 + z2", 2) == P("z1^2+z2"));
    CHECK(P("(1/2+3/4i)*z1") == Polynomial::term(1, {1}, {Rational(1, 2), Rational(3, 4)}));
    CHECK_THROWS_AS(P("z3", 2), ParseError);
    CHECK_THROWS_AS(P("1/0"), ParseError);
    CHECK_THROWS_AS(P("z1 + + z1"), ParseError);
    CHECK_THROWS_AS(P("q1"), ParseError);
}

TEST_CASE("monomial enumeration") {
    CHECK(dim_poly_space(2, 2) == 6);
    CHECK(dim_poly_space(3, 0) == 1);
    CHECK(dim_poly_space(2, -1) == 0);
    CHECK(monomials_up_to(2, 2).size() == 6);
    auto ms = monomials_up_to(2, 1);
    REQUIRE(ms.size() == 3);
    CHECK(ms[0] == Monomial{1, 0});  // graded-lex descending
    CHECK(ms[1] == Monomial{0, 1});
    CHECK(ms[2] == Monomial{0, 0});
}
