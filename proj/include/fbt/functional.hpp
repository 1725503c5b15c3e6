#pragma once

#include "fbt/exppoly.hpp"

namespace fbt {

/// Point-supported differential functional
///   T : f  |->  sum_i (Q_i(d) f)(w_i).
/// Same canonical-form discipline as ExpPoly: support points pairwise
/// distinct, no zero Q, so T = 0 iff the term list is empty.
///
/// Sign convention: direct differentiation then evaluation, with no
/// distributional (-1)^|alpha| sign. Under this convention the
/// Fourier-Borel transform of (Q, w) is Q(z) e^{<z,w>} with no sign.
class ExpFunctional {
public:
    struct Term {
        Polynomial coeff;
        ExactPoint point;
    };

    explicit ExpFunctional(int nvars) : nvars_(nvars) {
        if (nvars <= 0) throw std::invalid_argument("ExpFunctional needs at least one variable");
    }
    ExpFunctional(int nvars, std::vector<Term> terms);

    static ExpFunctional zero(int nvars) { return ExpFunctional(nvars); }
    /// The Dirac functional f |-> f(w).
    static ExpFunctional delta(ExactPoint w);
    /// f |-> (Q(d) f)(w).
    static ExpFunctional diff_at(Polynomial q, ExactPoint w);

    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend ExpFunctional operator+(const ExpFunctional& a, const ExpFunctional& b);
    friend bool operator==(const ExpFunctional& a, const ExpFunctional& b);
    friend bool operator!=(const ExpFunctional& a, const ExpFunctional& b) { return !(a == b); }

    std::string str() const;

private:
    int nvars_;
    std::vector<Term> terms_;
};

/// The dual pairing <T, f>, exact.
GaussianRational apply(const ExpFunctional& t, const Polynomial& f);

/// <T, f> for an exponential-polynomial f, evaluated in floats (the
/// value involves exponentials of the frequencies and is generally
/// transcendental).
std::complex<double> apply(const ExpFunctional& t, const ExpPoly& f);

/// The action (gT)(f) = T(gf), produced in closed form inside the same
/// class by the Leibniz rule. Exact.
ExpFunctional multiply(const Polynomial& g, const ExpFunctional& t);

/// F(T)(z) = <T, e^{<z,.>}>: term (Q, w) maps to Q(z) e^{<z,w>}.
ExpPoly fourier_borel(const ExpFunctional& t);

/// fourier_borel(p T) - dp(fourier_borel(T)); exactly zero for every
/// input (the commuting square of tau_p and the operator p(d)).
ExpPoly diagram_check(const Polynomial& p, const ExpFunctional& t);

/// True iff T kills p * m for every monomial m with deg(p m) <= D.
bool annihilates_truncated_ideal(const ExpFunctional& t, const Polynomial& p, int D);

}  // namespace fbt
