#include "fbt/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace fbt {

void require_same_nvars(const Polynomial& a, const Polynomial& b) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("variable-count mismatch: " + std::to_string(a.nvars()) +
                                    " vs " + std::to_string(b.nvars()));
}

void Polynomial::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first.size() != static_cast<size_t>(nvars_))
            throw std::invalid_argument("exponent vector length != nvars");
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

Polynomial Polynomial::constant(int nvars, GaussianRational c) {
    Polynomial p(nvars);
    if (!c.is_zero()) p.terms_.emplace(Monomial(nvars, 0), std::move(c));
    return p;
}

Polynomial Polynomial::term(int nvars, Monomial alpha, GaussianRational c) {
    Polynomial p(nvars);
    if (alpha.size() != static_cast<size_t>(nvars))
        throw std::invalid_argument("exponent vector length != nvars");
    if (!c.is_zero()) p.terms_.emplace(std::move(alpha), std::move(c));
    return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
    if (i < 1 || i > nvars) throw std::out_of_range("variable index out of range");
    Monomial m(nvars, 0);
    m[i - 1] = 1;
    return term(nvars, m, GaussianRational{1});
}

int Polynomial::degree_in(int i) const {
    if (i < 1 || i > nvars_) throw std::out_of_range("variable index out of range");
    if (terms_.empty()) return -1;
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[i - 1]);
    return d;
}

const GaussianRational& Polynomial::leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return terms_.begin()->second;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("leading monomial of zero polynomial");
    return terms_.begin()->first;
}

void Polynomial::add_term(const Monomial& alpha, const GaussianRational& c) {
    if (alpha.size() != static_cast<size_t>(nvars_))
        throw std::invalid_argument("exponent vector length != nvars");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(alpha, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_same_nvars(a, b);
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

Polynomial operator-(const Polynomial& a) {
    Polynomial r(a.nvars_);
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_nvars(a, b);
    Polynomial r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m(a.nvars_);
            for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Polynomial operator*(const GaussianRational& c, const Polynomial& a) {
    Polynomial r(a.nvars_);
    if (c.is_zero()) return r;
    for (const auto& [m, co] : a.terms_) r.terms_.emplace(m, c * co);
    return r;
}

GaussianRational Polynomial::eval(const std::vector<GaussianRational>& w) const {
    if (w.size() != static_cast<size_t>(nvars_))
        throw std::invalid_argument("evaluation point arity mismatch");
    GaussianRational acc;
    for (const auto& [m, c] : terms_) {
        GaussianRational t = c;
        for (int i = 0; i < nvars_; ++i)
            if (m[i] > 0) t *= pow(w[i], m[i]);
        acc += t;
    }
    return acc;
}

std::complex<double> Polynomial::eval(const std::vector<std::complex<double>>& z) const {
    if (z.size() != static_cast<size_t>(nvars_))
        throw std::invalid_argument("evaluation point arity mismatch");
    std::complex<double> acc = 0;
    for (const auto& [m, c] : terms_) {
        std::complex<double> t = c.to_complex();
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < m[i]; ++k) t *= z[i];
        acc += t;
    }
    return acc;
}

Polynomial Polynomial::partial(int i) const {
    if (i < 1 || i > nvars_) throw std::out_of_range("variable index out of range");
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[i - 1] == 0) continue;
        Monomial d = m;
        d[i - 1] -= 1;
        r.add_term(d, GaussianRational{Rational(m[i - 1])} * c);
    }
    return r;
}

Polynomial Polynomial::taylor_shift(const std::vector<GaussianRational>& w) const {
    if (w.size() != static_cast<size_t>(nvars_))
        throw std::invalid_argument("shift point arity mismatch");
    // Expand each (z_i + w_i)^e by the binomial theorem.
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
        Polynomial t = Polynomial::constant(nvars_, c);
        for (int i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            Polynomial binom(nvars_);
            Rational ck = 1;  // C(e, k)
            int e = m[i];
            for (int k = 0; k <= e; ++k) {
                Monomial mk(nvars_, 0);
                mk[i] = e - k;
                binom.add_term(mk, GaussianRational{ck} * pow(w[i], k));
                ck = ck * (e - k) / (k + 1);
            }
            t = t * binom;
        }
        r = r + t;
    }
    return r;
}

Polynomial Polynomial::truncate(int D) const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_)
        if (total_degree(m) <= D) r.terms_.emplace(m, c);
    return r;
}

LeadingCoeffResult leading_coefficient(const Polynomial& p, int i) {
    if (p.is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
    int d = p.degree_in(i);
    Polynomial coeff(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        if (m[i - 1] != d) continue;
        Monomial rest = m;
        rest[i - 1] = 0;
        coeff.add_term(rest, c);
    }
    return {coeff, d};
}

Polynomial apply_operator(const Polynomial& op, const Polynomial& f) {
    require_same_nvars(op, f);
    Polynomial r(f.nvars());
    for (const auto& [alpha, c] : op.terms()) {
        Polynomial df = f;
        bool dead = false;
        for (int i = 0; i < f.nvars() && !dead; ++i)
            for (int k = 0; k < alpha[i]; ++k) {
                df = df.partial(i + 1);
                if (df.is_zero()) { dead = true; break; }
            }
        if (!dead) r = r + c * df;
    }
    return r;
}

Polynomial normalize_monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    return (GaussianRational{1} / p.leading_coeff()) * p;
}

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& p) {
    require_same_nvars(f, p);
    if (p.is_zero()) throw std::invalid_argument("division by zero polynomial");
    Polynomial q(f.nvars());
    Polynomial r = f;
    const Monomial& lp = p.leading_monomial();
    while (!r.is_zero()) {
        const Monomial& lr = r.leading_monomial();
        Monomial t(f.nvars());
        for (int i = 0; i < f.nvars(); ++i) {
            t[i] = lr[i] - lp[i];
            if (t[i] < 0) return std::nullopt;
        }
        Polynomial step = Polynomial::term(f.nvars(), t, r.leading_coeff() / p.leading_coeff());
        q = q + step;
        r = r - step * p;
    }
    return q;
}

std::vector<Monomial> monomials_up_to(int nvars, int D) {
    std::vector<Monomial> out;
    Monomial cur(nvars, 0);
    // enumerate all exponent vectors with total degree <= D, then sort
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == nvars) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[i] = e;
            rec(i + 1, left - e);
        }
        cur[i] = 0;
    };
    if (D >= 0) rec(0, D);
    std::sort(out.begin(), out.end(), GradedLexGreater{});
    return out;
}

long dim_poly_space(int nvars, int D) {
    if (D < 0) return 0;
    long num = 1;
    for (int k = 1; k <= nvars; ++k) num = num * (D + k) / k;
    return num;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "(0/1)";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        GaussianRational coeff = c;
        if (!first) {
            if (coeff.is_real() && coeff.re < 0) {
                os << " - ";
                coeff = -coeff;
            } else {
                os << " + ";
            }
        }
        first = false;
        std::string cs;
        if (coeff.is_real()) {
            cs = "(" + coeff.re.get_num().get_str() + "/" + coeff.re.get_den().get_str() + ")";
        } else {
            cs = "(" + coeff.re.get_num().get_str() + "/" + coeff.re.get_den().get_str() +
                 (coeff.im > 0 ? "+" : "-") + Rational(abs(coeff.im)).get_num().get_str() + "/" +
                 Rational(abs(coeff.im)).get_den().get_str() + "i)";
        }
        os << cs;
        for (int i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            os << "*z" << (i + 1);
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

}  // namespace fbt
