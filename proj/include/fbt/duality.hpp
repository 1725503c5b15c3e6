#pragma once

#include <map>

#include "fbt/exppoly.hpp"
#include "fbt/reducedness.hpp"
#include "fbt/variety.hpp"

namespace fbt {

/// Value vector of a functional on the full monomial basis of P_{<=D}.
struct FiniteFunctional {
    int nvars;
    int D;
    std::map<Monomial, GaussianRational, GradedLexGreater> values;

    /// Action on a polynomial of degree <= D by linearity.
    GaussianRational operator()(const Polynomial& f) const;
};

enum class RankVerdict { saturates, deficient };

struct RankReport {
    Polynomial p;
    int D;
    long kernel_dim;
    long sample_count;
    long numerical_rank;
    std::vector<double> singular_values;  // descending
    double tolerance;
    RankVerdict verdict;
};

/// Exact basis of the kernel of p(d) followed by truncation to degree
/// D - deg p, by exact elimination on the differentiation matrix. For
/// homogeneous p this is literally {f in P_{<=D} : p(d) f = 0}; in
/// general it is the space of degree-<=D truncations of entire kernel
/// elements, which is what sampled exponentials produce. Verifies by
/// rank that the truncated map is onto P_{<=D-deg p}, so the dimension
/// is dim P_{<=D} - dim P_{<=D-deg p}.
std::vector<Polynomial> kernel_basis(const Polynomial& p, int D);

/// Numerical rank of the span of degree-<=D Taylor-coefficient vectors
/// (scaled basis z^a / sqrt(a!)) of exponentials with frequencies at the
/// given variety samples.
RankReport exp_span_rank(const Polynomial& p, int D, const std::vector<VarietySample>& samples,
                         double tol = 1e-8);

enum class ShadowVerdict { does_not_vanish, vanishes_and_divides, vanishes_division_fails };

struct ShadowReport {
    ShadowVerdict verdict;
    double max_scaled_residual;  // max |f(w)| / scale over samples
    std::optional<Polynomial> quotient;
};

/// Sampled-vanishing detection followed by exact division: the
/// polynomial shadow of the Nullstellensatz division step. For reduced p
/// the division must succeed; for non-reduced p a failure is the
/// recorded gap witness.
ShadowReport nullstellensatz_shadow(const Polynomial& p, const Polynomial& f,
                                    const std::vector<VarietySample>& samples,
                                    double vanish_tol = 1e-8);

struct CounterexampleRecord {
    FiniteFunctional S;
    Polynomial q;    // squarefree part
    Polynomial rp;   // repeated part
    ExactPoint v;    // exact zero of rp
    bool kills_p_ideal;  // S(p h) = 0 for all monomials h with deg(p h) <= D
    bool unit_on_q;      // S(q) = 1
};

/// The annihilator-gap functional for non-reduced p: solves
/// S(q h) = h(v) exactly on P_{<=D}, extended by zero on the graded-lex
/// complement, and verifies both defining assertions. Rejects reduced p
/// and points with rp(v) != 0.
CounterexampleRecord counterexample(const Polynomial& p, int D, const ExactPoint& v);

/// Convenience: an exact rational zero of the repeated part, available
/// when that factor is linear in some variable with constant coefficient.
std::optional<ExactPoint> find_exact_zero(const Polynomial& rp);

}  // namespace fbt
