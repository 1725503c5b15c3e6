#include <doctest.h>

#include <algorithm>
#include <random>

#include "fbt/duality.hpp"
#include "fbt/randgen.hpp"

using namespace fbt;

namespace {

Polynomial P(const std::string& s, int n = 0) { return Polynomial::parse(s, n); }

bool in_basis(const std::vector<Polynomial>& basis, const Polynomial& f) {
    return std::any_of(basis.begin(), basis.end(),
                       [&](const Polynomial& b) { return normalize_monic(b) == normalize_monic(f); });
}

// brute-force oracle: dimension of ker p(d) on P_{<=D} by row reduction
// over the monomial basis, independent of kernel_basis internals
long naive_kernel_dim(const Polynomial& p, int D) {
    auto dom = monomials_up_to(p.nvars(), D);
    auto img = monomials_up_to(p.nvars(), D - p.degree());
    std::vector<std::vector<GaussianRational>> rows;
    for (const Monomial& m : dom) {
        Polynomial f = apply_operator(p, Polynomial::term(p.nvars(), m, GaussianRational{1}));
        std::vector<GaussianRational> row(img.size());
        for (size_t j = 0; j < img.size(); ++j) row[j] = f.coeff(img[j]);
        rows.push_back(std::move(row));
    }
    // rank by Gaussian elimination
    size_t rank = 0;
    for (size_t col = 0; col < img.size() && rank < rows.size(); ++col) {
        size_t piv = rank;
        while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col].is_zero()) continue;
            GaussianRational fct = rows[i][col] / rows[rank][col];
            for (size_t j = col; j < img.size(); ++j) rows[i][j] -= fct * rows[rank][j];
        }
        ++rank;
    }
    return static_cast<long>(dom.size() - rank);
}

}  // namespace

TEST_CASE("kernel bases, hand-checkable fixtures") {
    // p = z^2 in one variable: ker = span{1, z} at every D >= 2
    for (int D : {2, 3, 5}) {
        auto basis = kernel_basis(P("z1^2", 1), D);
        REQUIRE(basis.size() == 2);
        CHECK(in_basis(basis, P("1/1", 1)));
        CHECK(in_basis(basis, P("z1", 1)));
    }

    // p = z1 z2, D = 2: dim = dim P_{<=2} - dim P_{<=0} = 6 - 1 = 5
    auto cross = kernel_basis(P("z1*z2"), 2);
    CHECK(cross.size() == 5);
    CHECK(in_basis(cross, P("z1^2", 2)));
    CHECK_FALSE(in_basis(cross, P("z1*z2")));

    // harmonic polynomials of the plane up to degree 2
    auto harm = kernel_basis(P("z1^2+z2^2"), 2);
    REQUIRE(harm.size() == 5);
    for (const char* s : {"1/1", "z1", "z2", "z1*z2", "z1^2-z2^2"})
        CHECK(in_basis(harm, P(s, 2)));
}

TEST_CASE("kernel members are killed, dimension matches the oracle") {
    std::mt19937_64 rng(173);
    for (int k = 0; k < 15; ++k) {
        int n = std::uniform_int_distribution<int>(1, 2)(rng);
        Polynomial p = random_polynomial(rng, n, 3, 3);
        if (p.is_constant()) continue;
        int D = std::uniform_int_distribution<int>(p.degree(), p.degree() + 3)(rng);
        auto basis = kernel_basis(p, D);
        CHECK(static_cast<long>(basis.size()) == naive_kernel_dim(p, D));
        CHECK(static_cast<long>(basis.size()) ==
              dim_poly_space(n, D) - dim_poly_space(n, D - p.degree()));
        bool homogeneous = true;
        for (const auto& [m, c] : p.terms())
            if (total_degree(m) != p.degree()) homogeneous = false;
        for (const Polynomial& f : basis) {
            CHECK(apply_operator(p, f).truncate(D - p.degree()).is_zero());
            if (homogeneous) CHECK(apply_operator(p, f).is_zero());
            CHECK(f.degree() <= D);
        }
        // random exact combinations stay in the kernel
        Polynomial mix = Polynomial::zero(n);
        for (const Polynomial& f : basis) mix = mix + random_coeff(rng) * f;
        CHECK(apply_operator(p, mix).truncate(D - p.degree()).is_zero());
    }
}

TEST_CASE("exponential span saturates the kernel for reduced p") {
    std::mt19937_64 rng(179);
    for (const char* src : {"z1^2+z2^2", "z1*z2", "z1^2+z2^2+1", "z1^2+z2^2-1"}) {
        Polynomial p = P(src);
        for (int D : {2, 3}) {
            long kd = static_cast<long>(kernel_basis(p, D).size());
            auto samples = sample_many(p, static_cast<int>(3 * kd), rng());
            RankReport rep = exp_span_rank(p, D, samples);
            CHECK(rep.kernel_dim == kd);
            CHECK(rep.numerical_rank == kd);
            CHECK(rep.verdict == RankVerdict::saturates);
        }
    }
}

TEST_CASE("exponential span is rank-deficient for p = z^2") {
    for (int D : {2, 3, 4}) {
        Polynomial p = P("z1^2", 2);
        auto samples = sample_many(p, 3 * (2 * D + 1), 5);
        RankReport rep = exp_span_rank(p, D, samples);
        CHECK(rep.kernel_dim == 2 * D + 1);
        CHECK(rep.numerical_rank == D + 1);  // exponentials only see z2
        CHECK(rep.verdict == RankVerdict::deficient);
    }
}

TEST_CASE("rank is monotone in the sample count and bounded by kernel_dim") {
    Polynomial p = P("z1^2+z2^2");
    int D = 3;
    auto samples = sample_many(p, 24, 77);
    long prev = 0;
    for (int c : {2, 6, 12, 24}) {
        std::vector<VarietySample> sub(samples.begin(), samples.begin() + c);
        RankReport rep = exp_span_rank(p, D, sub);
        CHECK(rep.numerical_rank >= prev);
        CHECK(rep.numerical_rank <= rep.kernel_dim);
        prev = rep.numerical_rank;
    }
}

TEST_CASE("division shadow: vanishing multiples divide, non-multiples do not vanish") {
    Polynomial p = P("z1^2+z2^2-1");
    auto samples = sample_many(p, 20, 13);

    Polynomial f = p * P("z1+2/1*z2");
    auto rep = nullstellensatz_shadow(p, f, samples);
    CHECK(rep.verdict == ShadowVerdict::vanishes_and_divides);
    REQUIRE(rep.quotient.has_value());
    CHECK(*rep.quotient * p == f);

    auto rep2 = nullstellensatz_shadow(p, P("z1+z2"), samples);
    CHECK(rep2.verdict == ShadowVerdict::does_not_vanish);
    CHECK(rep2.max_scaled_residual > 1e-8);
}

TEST_CASE("division shadow exposes the gap of a non-reduced p") {
    // f = z vanishes on V_{z^2} but z^2 does not divide z
    Polynomial p = P("z1^2", 2);
    auto samples = sample_many(p, 12, 19);
    auto rep = nullstellensatz_shadow(p, P("z1", 2), samples);
    CHECK(rep.verdict == ShadowVerdict::vanishes_division_fails);
    CHECK_FALSE(rep.quotient.has_value());
}

TEST_CASE("counterexample functional, one variable") {
    // p = z^2: S solves S(z h) = h(0), so S(z^{k+1}) = delta_{k,0}
    Polynomial p = P("z1^2", 1);
    ExactPoint v(1, GaussianRational{0});
    auto rec = counterexample(p, 6, v);
    CHECK(rec.kills_p_ideal);
    CHECK(rec.unit_on_q);
    CHECK(rec.q == P("z1", 1));
    CHECK(rec.S(P("z1", 1)) == GaussianRational{1});
    for (int k = 1; k <= 5; ++k) {
        Monomial m{k + 1};
        if (k + 1 <= 6)
            CHECK(rec.S(Polynomial::term(1, m, GaussianRational{1})).is_zero());
    }
    // every multiple of p in P_{<=6} is killed while q is not: the gap
    for (const Monomial& m : monomials_up_to(1, 4))
        CHECK(rec.S(p * Polynomial::term(1, m, GaussianRational{1})).is_zero());
}

TEST_CASE("counterexample functional, the worked two-variable case") {
    Polynomial p = P("z1^2*z2");
    ExactPoint v{GaussianRational{0}, GaussianRational{5}};
    auto rec = counterexample(p, 6, v);
    CHECK(rec.kills_p_ideal);
    CHECK(rec.unit_on_q);
    CHECK(normalize_monic(rec.q) == P("z1*z2"));
    CHECK(normalize_monic(rec.rp) == P("z1", 2));
    // S(q h) = h(v) on every monomial h with deg(q h) <= 6
    for (const Monomial& m : monomials_up_to(2, 4)) {
        Polynomial h = Polynomial::term(2, m, GaussianRational{1});
        CHECK(rec.S(rec.q * h) == h.eval(v));
    }
}

TEST_CASE("counterexample functional, repeated linear factor") {
    Polynomial p = P("z1+z2") * P("z1+z2") * P("z1-z2");
    auto v = find_exact_zero(analyze_reducedness(p).repeated_part);
    REQUIRE(v.has_value());
    auto rec = counterexample(p, 6, *v);
    CHECK(rec.kills_p_ideal);
    CHECK(rec.unit_on_q);
    CHECK(normalize_monic(rec.q) == normalize_monic(P("z1+z2") * P("z1-z2")));
}

TEST_CASE("counterexample rejects bad inputs") {
    CHECK_THROWS_AS(counterexample(P("z1*z2"), 6, ExactPoint(2)), std::invalid_argument);
    // v not on the repeated part
    ExactPoint off{GaussianRational{1}, GaussianRational{0}};
    CHECK_THROWS_AS(counterexample(P("z1^2*z2"), 6, off), std::invalid_argument);
}

TEST_CASE("exact zero finder") {
    auto v = find_exact_zero(P("z1", 2));
    REQUIRE(v.has_value());
    CHECK(P("z1", 2).eval(*v).is_zero());

    auto w = find_exact_zero(P("z1+z2-3/1"));
    REQUIRE(w.has_value());
    CHECK(P("z1+z2-3/1").eval(*w).is_zero());
}
