#include <doctest.h>

#include <random>

#include "fbt/randgen.hpp"
#include "fbt/reducedness.hpp"

using namespace fbt;

namespace {

Polynomial P(const std::string& s, int n = 0) { return Polynomial::parse(s, n); }

// random linear form a + b z_i + c z_j, nonconstant by construction
Polynomial random_linear(std::mt19937_64& rng, int n) {
    Polynomial f(n);
    f.add_term(Monomial(n, 0), random_coeff(rng));
    bool nonconst = false;
    for (int i = 0; i < n; ++i) {
        GaussianRational c = random_coeff(rng);
        if (!c.is_zero()) nonconst = true;
        Monomial m(n, 0);
        m[i] = 1;
        f.add_term(m, c);
    }
    if (!nonconst) f = f + Polynomial::variable(n, 1);
    return f;
}

bool equal_up_to_scalar(const Polynomial& a, const Polynomial& b) {
    return normalize_monic(a) == normalize_monic(b);
}

}  // namespace

TEST_CASE("paper fixtures") {
    CHECK(analyze_reducedness(P("z1^2+z2^2-1")).is_reduced);       // complex sphere
    CHECK(analyze_reducedness(P("z1^2+z2^2")).is_reduced);         // light cone, n=2
    CHECK(analyze_reducedness(P("z1^2+z2^2+z3^2")).is_reduced);

    auto rep = analyze_reducedness(P("z1^2"));
    CHECK_FALSE(rep.is_reduced);
    CHECK(rep.squarefree_part == P("z1"));
    CHECK(equal_up_to_scalar(rep.repeated_part, P("z1")));
}

TEST_CASE("constructed double factor") {
    Polynomial p = P("z1+z2") * P("z1+z2") * P("z1-z2");
    auto rep = analyze_reducedness(p);
    CHECK_FALSE(rep.is_reduced);
    CHECK(equal_up_to_scalar(rep.squarefree_part, P("z1+z2") * P("z1-z2")));
    CHECK(equal_up_to_scalar(rep.repeated_part, P("z1+z2")));
    CHECK(equal_up_to_scalar(rep.squarefree_part * rep.repeated_part, p));
}

TEST_CASE("rejects zero and constants") {
    CHECK_THROWS_AS(analyze_reducedness(Polynomial::zero(2)), std::invalid_argument);
    CHECK_THROWS_AS(analyze_reducedness(P("3/1", 2)), std::invalid_argument);
}

TEST_CASE("random squarefree products are reduced") {
    std::mt19937_64 rng(41);
    for (int k = 0; k < 20; ++k) {
        int n = std::uniform_int_distribution<int>(1, 3)(rng);
        Polynomial f1 = random_linear(rng, n);
        Polynomial f2 = random_linear(rng, n);
        if (equal_up_to_scalar(f1, f2)) continue;
        CHECK(analyze_reducedness(f1 * f2).is_reduced);
    }
}

TEST_CASE("random repeated factors are caught") {
    std::mt19937_64 rng(43);
    for (int k = 0; k < 20; ++k) {
        int n = std::uniform_int_distribution<int>(1, 3)(rng);
        Polynomial f1 = random_linear(rng, n);
        Polynomial f2 = random_linear(rng, n);
        if (equal_up_to_scalar(f1, f2)) continue;
        int a = std::uniform_int_distribution<int>(2, 3)(rng);
        Polynomial p = f2;
        for (int i = 0; i < a; ++i) p = p * f1;
        auto rep = analyze_reducedness(p);
        CHECK_FALSE(rep.is_reduced);
        // squarefree part divides f1*f2 and is divisible by it (they
        // agree up to scalar for distinct linear factors)
        CHECK(divide_exact(f1 * f2, rep.squarefree_part).has_value());
        CHECK(divide_exact(rep.squarefree_part, normalize_monic(f1 * f2)).has_value());
    }
}

TEST_CASE("squarefree part is idempotent") {
    std::mt19937_64 rng(47);
    for (int k = 0; k < 15; ++k) {
        int n = std::uniform_int_distribution<int>(1, 3)(rng);
        Polynomial p = random_polynomial(rng, n, 4);
        if (p.is_constant()) continue;
        auto rep = analyze_reducedness(p);
        if (rep.squarefree_part.is_constant()) continue;
        CHECK(analyze_reducedness(rep.squarefree_part).is_reduced);
        CHECK(equal_up_to_scalar(rep.squarefree_part * rep.repeated_part, p));
    }
}
