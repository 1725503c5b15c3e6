#include "fbt/functional.hpp"

#include <algorithm>
#include <sstream>

namespace fbt {

ExpFunctional::ExpFunctional(int nvars, std::vector<Term> terms) : ExpFunctional(nvars) {
    terms_ = std::move(terms);
    for (const Term& t : terms_) {
        if (t.coeff.nvars() != nvars_ || t.point.size() != static_cast<size_t>(nvars_))
            throw std::invalid_argument("ExpFunctional term arity mismatch");
    }
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
        return std::lexicographical_compare(a.point.begin(), a.point.end(), b.point.begin(),
                                            b.point.end());
    });
    std::vector<Term> merged;
    for (Term& t : terms_) {
        if (!merged.empty() && merged.back().point == t.point)
            merged.back().coeff = merged.back().coeff + t.coeff;
        else
            merged.push_back(std::move(t));
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const Term& t) { return t.coeff.is_zero(); }),
                 merged.end());
    terms_ = std::move(merged);
}

ExpFunctional ExpFunctional::delta(ExactPoint w) {
    int n = static_cast<int>(w.size());
    return diff_at(Polynomial::constant(n, GaussianRational{1}), std::move(w));
}

ExpFunctional ExpFunctional::diff_at(Polynomial q, ExactPoint w) {
    int n = q.nvars();
    return ExpFunctional(n, {Term{std::move(q), std::move(w)}});
}

ExpFunctional operator+(const ExpFunctional& a, const ExpFunctional& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable-count mismatch");
    std::vector<ExpFunctional::Term> ts = a.terms_;
    ts.insert(ts.end(), b.terms_.begin(), b.terms_.end());
    return ExpFunctional(a.nvars_, std::move(ts));
}

bool operator==(const ExpFunctional& a, const ExpFunctional& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].point != b.terms_[i].point || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

std::string ExpFunctional::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "[" << t.coeff.str() << "] @ (";
        for (int i = 0; i < nvars_; ++i) {
            if (i) os << ",";
            os << t.point[i].str();
        }
        os << ")";
    }
    return os.str();
}

GaussianRational apply(const ExpFunctional& t, const Polynomial& f) {
    if (t.nvars() != f.nvars()) throw std::invalid_argument("variable-count mismatch");
    GaussianRational acc;
    for (const auto& term : t.terms())
        acc += apply_operator(term.coeff, f).eval(term.point);
    return acc;
}

std::complex<double> apply(const ExpFunctional& t, const ExpPoly& f) {
    if (t.nvars() != f.nvars()) throw std::invalid_argument("variable-count mismatch");
    std::complex<double> acc = 0;
    for (const auto& term : t.terms()) {
        // Q(d) f stays exponential-polynomial; evaluate it at the point.
        ExpPoly df = apply_dp(term.coeff, f);
        std::vector<std::complex<double>> z(t.nvars());
        for (int i = 0; i < t.nvars(); ++i) z[i] = term.point[i].to_complex();
        acc += df.eval(z);
    }
    return acc;
}

ExpFunctional multiply(const Polynomial& g, const ExpFunctional& t) {
    if (g.nvars() != t.nvars()) throw std::invalid_argument("variable-count mismatch");
    int n = g.nvars();
    std::vector<ExpFunctional::Term> out;
    for (const auto& term : t.terms()) {
        // Leibniz: the new coefficient at support point w is
        //   R = sum_alpha (d^alpha g)(w) / alpha! * d^alpha Q.
        Polynomial r(n);
        for (const Monomial& alpha : monomials_up_to(n, g.degree())) {
            Polynomial dg = g;
            Polynomial dq = term.coeff;
            Rational fct = 1;
            bool dead = false;
            for (int i = 0; i < n && !dead; ++i) {
                fct *= factorial(alpha[i]);
                for (int k = 0; k < alpha[i]; ++k) {
                    dg = dg.partial(i + 1);
                    dq = dq.partial(i + 1);
                    if (dg.is_zero() || dq.is_zero()) { dead = true; break; }
                }
            }
            if (dead) continue;
            GaussianRational gw = dg.eval(term.point);
            if (gw.is_zero()) continue;
            r = r + (gw / GaussianRational{fct}) * dq;
        }
        if (!r.is_zero()) out.push_back({std::move(r), term.point});
    }
    return ExpFunctional(n, std::move(out));
}

ExpPoly fourier_borel(const ExpFunctional& t) {
    std::vector<ExpPoly::Term> ts;
    for (const auto& term : t.terms()) ts.push_back({term.coeff, term.point});
    return ExpPoly(t.nvars(), std::move(ts));
}

ExpPoly diagram_check(const Polynomial& p, const ExpFunctional& t) {
    return fourier_borel(multiply(p, t)) - apply_dp(p, fourier_borel(t));
}

bool annihilates_truncated_ideal(const ExpFunctional& t, const Polynomial& p, int D) {
    if (D < p.degree()) throw std::invalid_argument("degree bound below deg p");
    for (const Monomial& m : monomials_up_to(p.nvars(), D - p.degree())) {
        Polynomial f = p * Polynomial::term(p.nvars(), m, GaussianRational{1});
        if (!apply(t, f).is_zero()) return false;
    }
    return true;
}

}  // namespace fbt
