#pragma once

#include "fbt/polynomial.hpp"

namespace fbt {

using ExactPoint = std::vector<GaussianRational>;

/// Finite sum  sum_i Q_i(z) exp(<w_i, z>)  with exact polynomial
/// coefficients and exact frequencies. Canonical form: frequencies are
/// pairwise distinct (equal frequencies merged by summing their Q's) and
/// no term has Q = 0, so equality of canonical forms is equality of
/// functions (exponentials with distinct frequencies are independent).
class ExpPoly {
public:
    struct Term {
        Polynomial coeff;
        ExactPoint freq;
    };

    explicit ExpPoly(int nvars) : nvars_(nvars) {
        if (nvars <= 0) throw std::invalid_argument("ExpPoly needs at least one variable");
    }
    ExpPoly(int nvars, std::vector<Term> terms);

    static ExpPoly zero(int nvars) { return ExpPoly(nvars); }
    /// Q(z) * exp(<w, z>)
    static ExpPoly exponential(Polynomial q, ExactPoint w);
    static ExpPoly from_poly(Polynomial q);

    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend ExpPoly operator+(const ExpPoly& a, const ExpPoly& b);
    friend ExpPoly operator-(const ExpPoly& a, const ExpPoly& b);
    friend ExpPoly operator-(const ExpPoly& a);
    friend bool operator==(const ExpPoly& a, const ExpPoly& b) {
        if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
        for (size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].freq != b.terms_[i].freq || a.terms_[i].coeff != b.terms_[i].coeff)
                return false;
        return true;
    }
    friend bool operator!=(const ExpPoly& a, const ExpPoly& b) { return !(a == b); }

    /// sum_i Q_i(z) exp(sum_j w_ij z_j), float. The pairing is bilinear,
    /// not Hermitian.
    std::complex<double> eval(const std::vector<std::complex<double>>& z) const;

    std::string str() const;

private:
    void canonicalize();

    int nvars_;
    std::vector<Term> terms_;
};

/// g(z) * f(z): each (Q, w) becomes (g Q, w). Exact.
ExpPoly mul_poly(const Polynomial& g, const ExpPoly& f);

/// The operator p(d/dz) applied to f, exactly, via the shifted-operator
/// rule  p(d) [Q e^{<w,.>}] = (p(w + d) Q) e^{<w,.>}.
ExpPoly apply_dp(const Polynomial& p, const ExpPoly& f);

/// Exact Taylor polynomial of f at 0 up to total degree D.
Polynomial taylor_truncate(const ExpPoly& f, int D);

}  // namespace fbt
