#include <doctest.h>

#include <cmath>
#include <random>

#include "fbt/growth.hpp"
#include "fbt/randgen.hpp"

using namespace fbt;
using cd = std::complex<double>;

namespace {

Polynomial P(const std::string& s, int n = 0) { return Polynomial::parse(s, n); }

ExactPoint Q(std::initializer_list<long> xs) {
    ExactPoint v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("minimum-modulus constant, closed forms") {
    // c = 4^d / (2 r^d)
    CHECK(lemma31_constant(1, Rational(2)) == Rational(1));
    CHECK(lemma31_constant(2, Rational(4)) == Rational(1, 2));
    CHECK(lemma31_constant(3, Rational(1, 2)) == Rational(256));  // 64 * 8 / 2
    // monotone decreasing in r, increasing in d for r < 4
    CHECK(lemma31_constant(2, Rational(1)) > lemma31_constant(2, Rational(3)));
    CHECK(lemma31_constant(3, Rational(1)) > lemma31_constant(2, Rational(1)));
}

TEST_CASE("minimum-modulus radius search, hand-checkable case") {
    // p = z about xi = 0 with r = 4: threshold 2|a0|(r/4)^d = 2, and
    // |p| = rho on the circle, so any rho in [2, 4] works.
    auto res = polya_szego_radius(P("z1"), cd(0, 0), 4.0);
    REQUIRE(res.ok);
    CHECK(res.rho >= 2.0 - 1e-9);
    CHECK(res.rho <= 4.0 + 1e-9);
    CHECK(res.min_on_circle >= res.threshold - 1e-12);
    CHECK(res.threshold == doctest::Approx(2.0));
}

TEST_CASE("radius search avoids nearby zeros") {
    // p = (z-1)(z+1) about xi = 1 with r = 1: threshold 2 * (1/4)^2 = 1/8;
    // a circle dodging both roots must be found inside (0, 1]
    Polynomial p = P("z1^2-1");
    auto res = polya_szego_radius(p, cd(1, 0), 1.0);
    REQUIRE(res.ok);
    CHECK(res.threshold == doctest::Approx(2.0 * std::pow(0.25, 2)));
    CHECK(res.min_on_circle >= res.threshold - 1e-12);
    for (int k = 0; k < 8; ++k) {
        double th = 2.0 * M_PI * k / 8.0;
        cd z = cd(1, 0) + res.rho * cd(std::cos(th), std::sin(th));
        CHECK(std::abs(p.eval(CPoint{z})) >= res.min_on_circle - 1e-9);
    }
}

TEST_CASE("radius search survives a denser revalidation") {
    std::mt19937_64 rng(139);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int k = 0; k < 10; ++k) {
        Polynomial p = random_polynomial(rng, 1, 4);
        if (p.degree() < 1) continue;
        cd xi{u(rng), u(rng)};
        double r = std::uniform_real_distribution<double>(0.5, 3.0)(rng);
        auto res = polya_szego_radius(p, xi, r);
        REQUIRE(res.ok);
        CHECK(polya_szego_validate(p, xi, res.rho, res.threshold, res.n_angles * 10));
    }
}

TEST_CASE("one-variable growth bound holds on random data") {
    std::mt19937_64 rng(149);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int k = 0; k < 20; ++k) {
        Polynomial p = random_polynomial(rng, 1, 3, 4, false);
        if (p.degree() < 1) continue;
        ExpPoly f = random_exppoly(rng, 1, 2, 2);
        cd xi{u(rng), u(rng)};
        double A = std::uniform_real_distribution<double>(0.1, 2.0)(rng);
        Rational r(std::uniform_int_distribution<int>(8, 64)(rng), 16);
        r.canonicalize();
        auto cert = lemma31_check(p, xi, r, A, f);
        CHECK_FALSE(cert.violated);
        CHECK(cert.attained <= cert.bound + 1e-12 * std::abs(cert.bound));
        CHECK(cert.constant_exact == lemma31_constant(p.degree(), r));
    }
}

TEST_CASE("a refuted precondition M is rejected") {
    Polynomial p = P("z1");
    ExpPoly f = ExpPoly::from_poly(P("z1^2+1", 1));
    // M = 0 claims pf vanishes identically, which sampling refutes
    CHECK_THROWS_AS(lemma31_check(p, cd(0.5, 0), Rational(1), 1.0, f, 0.0),
                    std::invalid_argument);
}

TEST_CASE("polydisk bound reduces to the one-variable bound when n = 1") {
    std::mt19937_64 rng(151);
    for (int k = 0; k < 10; ++k) {
        Polynomial p = random_polynomial(rng, 1, 3, 4, false);
        if (p.degree() < 1) continue;
        ExpPoly f = random_exppoly(rng, 1, 2, 2);
        double A = 0.7;
        Rational r(3, 2);
        CPoint xi{cd(0.4, -0.3)};
        auto c32 = lemma32_check(p, xi, r, A, f);
        CHECK_FALSE(c32.violated);
        // with one variable the iterated constant is the plain constant
        CHECK(c32.constant_exact == lemma31_constant(p.degree(), r));
    }
}

TEST_CASE("polydisk bound on multivariate random data") {
    std::mt19937_64 rng(157);
    std::uniform_real_distribution<double> u(-0.8, 0.8);
    for (int k = 0; k < 12; ++k) {
        int n = std::uniform_int_distribution<int>(2, 3)(rng);
        Polynomial p = random_polynomial(rng, n, 3, 4, false);
        if (p.is_constant()) continue;
        ExpPoly f = random_exppoly(rng, n, 2, 2);
        CPoint xi(n);
        for (auto& c : xi) c = {u(rng), u(rng)};
        double A = std::uniform_real_distribution<double>(0.1, 1.5)(rng);
        auto cert = lemma32_check(p, xi, Rational(1), A, f, std::nullopt, 31 + k);
        CHECK_FALSE(cert.violated);
        CHECK(cert.attained <= cert.bound + 1e-12 * std::abs(cert.bound));
    }
}

TEST_CASE("norm comparison never falsifies on random data") {
    std::mt19937_64 rng(163);
    for (int k = 0; k < 12; ++k) {
        int n = std::uniform_int_distribution<int>(1, 2)(rng);
        Polynomial p = random_polynomial(rng, n, 2, 3, false);
        if (p.is_constant()) continue;
        ExpPoly F = random_exppoly(rng, n, 2, 1);
        double A = std::uniform_real_distribution<double>(0.2, 1.5)(rng);
        auto cert = prop33_check(p, A, F, 6.0, 32, 64, 41 + k);
        CHECK_FALSE(cert.violated);
        CHECK(cert.samples_checked > 0);
        CHECK(cert.constant > 0);
    }
}

TEST_CASE("norm comparison is homogeneous in F") {
    // scaling F scales both sampled norms identically, so slack data of
    // F and 5F agree after normalization
    Polynomial p = P("z1^2+1", 1);
    ExpPoly F = ExpPoly::exponential(P("z1"), Q({1}));
    ExpPoly F5 = mul_poly(P("5/1", 1), F);
    auto a = prop33_check(p, 0.8, F, 5.0);
    auto b = prop33_check(p, 0.8, F5, 5.0);
    CHECK_FALSE(a.violated);
    CHECK_FALSE(b.violated);
    CHECK(b.attained == doctest::Approx(5.0 * a.attained));
    CHECK(b.bound == doctest::Approx(5.0 * a.bound));
    CHECK(b.bound / b.attained == doctest::Approx(a.bound / a.attained));
}

TEST_CASE("zero F is trivially within every bound") {
    Polynomial p = P("z1^2+z2^2-1");
    auto cert = prop33_check(p, 1.0, ExpPoly::zero(2), 4.0);
    CHECK_FALSE(cert.violated);
    CHECK(cert.attained == 0.0);
}

TEST_CASE("triangle estimate used for the polydisk exponent") {
    // sum |xi_i| <= sqrt(n) |xi|, the Cauchy-Schwarz step the polydisk
    // exponent relies on
    std::mt19937_64 rng(167);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int k = 0; k < 200; ++k) {
        int n = std::uniform_int_distribution<int>(1, 6)(rng);
        double s1 = 0, s2 = 0;
        for (int i = 0; i < n; ++i) {
            cd c{u(rng), u(rng)};
            s1 += std::abs(c);
            s2 += std::norm(c);
        }
        CHECK(s1 <= std::sqrt(double(n)) * std::sqrt(s2) + 1e-12);
    }
}
