#pragma once

#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fbt/rational.hpp"

namespace fbt {

/// Exponent vector alpha in N^n.
using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

/// Graded-lexicographic order, descending: higher total degree first,
/// ties broken lexicographically with z1 heaviest. map::begin() is then
/// the leading term.
struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

using TermMap = std::map<Monomial, GaussianRational, GradedLexGreater>;

/// Exact multivariate polynomial over the Gaussian rationals, kept in
/// canonical form: no stored coefficient is zero, so equality of term
/// maps is equality of polynomials. Degree of the zero polynomial is -1.
class Polynomial {
public:
    explicit Polynomial(int nvars) : nvars_(check_nvars(nvars)) {}
    Polynomial(int nvars, TermMap terms) : nvars_(check_nvars(nvars)), terms_(std::move(terms)) {
        prune();
    }

    static Polynomial zero(int nvars) { return Polynomial(nvars); }
    static Polynomial constant(int nvars, GaussianRational c);
    /// The monomial c * z^alpha.
    static Polynomial term(int nvars, Monomial alpha, GaussianRational c);
    /// The variable z_i (1-based).
    static Polynomial variable(int nvars, int i);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0); }

    /// Total degree; -1 for the zero polynomial (sentinel, never fed to
    /// logarithms or exponents).
    int degree() const { return terms_.empty() ? -1 : total_degree(terms_.begin()->first); }
    /// Degree in variable i (1-based); -1 for the zero polynomial.
    int degree_in(int i) const;

    const GaussianRational& leading_coeff() const;
    const Monomial& leading_monomial() const;

    GaussianRational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? GaussianRational() : it->second;
    }

    void add_term(const Monomial& alpha, const GaussianRational& c);

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const GaussianRational& c, const Polynomial& a);
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Exact evaluation at a Gaussian-rational point.
    GaussianRational eval(const std::vector<GaussianRational>& w) const;
    /// Float evaluation at a complex point.
    std::complex<double> eval(const std::vector<std::complex<double>>& z) const;

    /// Formal partial derivative with respect to z_i (1-based).
    Polynomial partial(int i) const;

    /// q(z) = p(z + w), exact.
    Polynomial taylor_shift(const std::vector<GaussianRational>& w) const;

    /// Drop all terms of total degree > D.
    Polynomial truncate(int D) const;

    /// Text format: terms joined by +/-, coefficients `a/b` or
    /// `(a/b+c/di)`, variables z1..zn, exponents `^k`.
    std::string str() const;
    static Polynomial parse(const std::string& text, int nvars = 0);

private:
    static int check_nvars(int n) {
        if (n <= 0) throw std::invalid_argument("polynomial needs at least one variable");
        return n;
    }
    void prune();

    int nvars_;
    TermMap terms_;
};

void require_same_nvars(const Polynomial& a, const Polynomial& b);

/// A GCD of a and b, primitive, normalized to leading coefficient 1
/// under graded-lex. Throws if both inputs are zero.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Returns g with f = p * g exactly, or nullopt if p does not divide f.
/// Sound and complete for polynomials; throws on p = 0.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& p);

/// Coefficient of the highest power of z_i together with that power d.
/// Throws on the zero polynomial. The returned polynomial lives in the
/// same ambient variable set with z_i absent from its support.
struct LeadingCoeffResult {
    Polynomial coeff;
    int degree;
};
LeadingCoeffResult leading_coefficient(const Polynomial& p, int i);

/// Applies p as the constant-coefficient operator p(d/dz) to f.
Polynomial apply_operator(const Polynomial& op, const Polynomial& f);

/// Monic under graded-lex (leading coefficient 1); zero stays zero.
Polynomial normalize_monic(const Polynomial& p);

/// All monomials in n variables of total degree <= D, graded-lex
/// descending.
std::vector<Monomial> monomials_up_to(int nvars, int D);

/// dim P_{<=D} = C(n+D, n); 0 for D < 0.
long dim_poly_space(int nvars, int D);

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, size_t position)
        : std::runtime_error(msg + " at position " + std::to_string(position)), pos(position) {}
    size_t pos;
};

}  // namespace fbt
