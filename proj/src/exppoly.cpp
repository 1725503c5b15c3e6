#include "fbt/exppoly.hpp"

#include <algorithm>
#include <sstream>

namespace fbt {

ExpPoly::ExpPoly(int nvars, std::vector<Term> terms) : ExpPoly(nvars) {
    terms_ = std::move(terms);
    for (const Term& t : terms_) {
        if (t.coeff.nvars() != nvars_ || t.freq.size() != static_cast<size_t>(nvars_))
            throw std::invalid_argument("ExpPoly term arity mismatch");
    }
    canonicalize();
}

void ExpPoly::canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
        return std::lexicographical_compare(a.freq.begin(), a.freq.end(), b.freq.begin(), b.freq.end());
    });
    std::vector<Term> merged;
    for (Term& t : terms_) {
        if (!merged.empty() && merged.back().freq == t.freq)
            merged.back().coeff = merged.back().coeff + t.coeff;
        else
            merged.push_back(std::move(t));
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const Term& t) { return t.coeff.is_zero(); }),
                 merged.end());
    terms_ = std::move(merged);
}

ExpPoly ExpPoly::exponential(Polynomial q, ExactPoint w) {
    int n = q.nvars();
    return ExpPoly(n, {Term{std::move(q), std::move(w)}});
}

ExpPoly ExpPoly::from_poly(Polynomial q) {
    int n = q.nvars();
    return exponential(std::move(q), ExactPoint(n));
}

ExpPoly operator+(const ExpPoly& a, const ExpPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("ExpPoly variable-count mismatch");
    std::vector<ExpPoly::Term> ts = a.terms_;
    ts.insert(ts.end(), b.terms_.begin(), b.terms_.end());
    return ExpPoly(a.nvars_, std::move(ts));
}

ExpPoly operator-(const ExpPoly& a) {
    std::vector<ExpPoly::Term> ts = a.terms_;
    for (auto& t : ts) t.coeff = -t.coeff;
    return ExpPoly(a.nvars_, std::move(ts));
}

ExpPoly operator-(const ExpPoly& a, const ExpPoly& b) { return a + (-b); }

std::complex<double> ExpPoly::eval(const std::vector<std::complex<double>>& z) const {
    if (z.size() != static_cast<size_t>(nvars_))
        throw std::invalid_argument("evaluation point arity mismatch");
    std::complex<double> acc = 0;
    for (const Term& t : terms_) {
        std::complex<double> phase = 0;
        for (int i = 0; i < nvars_; ++i) phase += t.freq[i].to_complex() * z[i];
        acc += t.coeff.eval(z) * std::exp(phase);
    }
    return acc;
}

ExpPoly mul_poly(const Polynomial& g, const ExpPoly& f) {
    if (g.nvars() != f.nvars()) throw std::invalid_argument("variable-count mismatch");
    std::vector<ExpPoly::Term> ts;
    for (const auto& t : f.terms()) ts.push_back({g * t.coeff, t.freq});
    return ExpPoly(f.nvars(), std::move(ts));
}

ExpPoly apply_dp(const Polynomial& p, const ExpPoly& f) {
    if (p.nvars() != f.nvars()) throw std::invalid_argument("variable-count mismatch");
    std::vector<ExpPoly::Term> ts;
    for (const auto& t : f.terms()) {
        Polynomial shifted = p.taylor_shift(t.freq);  // p(w + z)
        Polynomial q = apply_operator(shifted, t.coeff);
        if (!q.is_zero()) ts.push_back({std::move(q), t.freq});
    }
    return ExpPoly(f.nvars(), std::move(ts));
}

Polynomial taylor_truncate(const ExpPoly& f, int D) {
    if (D < 0) throw std::invalid_argument("truncation degree must be nonnegative");
    int n = f.nvars();
    Polynomial out(n);
    for (const auto& t : f.terms()) {
        // exp(<w,z>) = sum_beta w^beta z^beta / beta!
        Polynomial series(n);
        for (const Monomial& beta : monomials_up_to(n, D)) {
            GaussianRational c{1};
            Rational fct = 1;
            for (int i = 0; i < n; ++i) {
                c *= pow(t.freq[i], beta[i]);
                fct *= factorial(beta[i]);
            }
            if (!c.is_zero()) series.add_term(beta, c / GaussianRational{fct});
        }
        out = out + (t.coeff * series).truncate(D);
    }
    return out;
}

std::string ExpPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "[" << t.coeff.str() << "] * exp(<";
        for (int i = 0; i < nvars_; ++i) {
            if (i) os << ",";
            os << t.freq[i].str();
        }
        os << ">)";
    }
    return os.str();
}

}  // namespace fbt
