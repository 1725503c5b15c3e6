#include "fbt/polynomial.hpp"

namespace fbt {
namespace {

// View of p as a univariate polynomial in z_x with coefficients free of z_x.
std::vector<Polynomial> coeffs_in(const Polynomial& p, int x) {
    int d = p.degree_in(x);
    std::vector<Polynomial> cs(d + 1, Polynomial::zero(p.nvars()));
    for (const auto& [m, c] : p.terms()) {
        Monomial rest = m;
        int e = rest[x - 1];
        rest[x - 1] = 0;
        cs[e].add_term(rest, c);
    }
    return cs;
}

Polynomial assemble(const std::vector<Polynomial>& cs, int x, int nvars) {
    Polynomial r(nvars);
    for (size_t e = 0; e < cs.size(); ++e) {
        Monomial xe(nvars, 0);
        xe[x - 1] = static_cast<int>(e);
        r = r + cs[e] * Polynomial::term(nvars, xe, GaussianRational{1});
    }
    return r;
}

Polynomial content_in(const Polynomial& p, int x) {
    Polynomial c = Polynomial::zero(p.nvars());
    for (const Polynomial& coeff : coeffs_in(p, x)) {
        if (coeff.is_zero()) continue;
        c = c.is_zero() ? normalize_monic(coeff) : gcd(c, coeff);
        if (c.is_constant()) break;
    }
    return c.is_zero() ? Polynomial::constant(p.nvars(), GaussianRational{1}) : c;
}

Polynomial primitive_part_in(const Polynomial& p, int x) {
    Polynomial c = content_in(p, x);
    auto q = divide_exact(p, c);
    if (!q) throw std::logic_error("content does not divide its polynomial");
    return normalize_monic(*q);
}

// Classical pseudo-remainder of a by b with respect to z_x.
Polynomial pseudo_rem(Polynomial a, const Polynomial& b, int x) {
    int db = b.degree_in(x);
    auto bc = coeffs_in(b, x);
    const Polynomial& lb = bc[db];
    while (!a.is_zero() && a.degree_in(x) >= db) {
        auto ac = coeffs_in(a, x);
        int da = a.degree_in(x);
        Monomial shift(a.nvars(), 0);
        shift[x - 1] = da - db;
        Polynomial xs = Polynomial::term(a.nvars(), shift, GaussianRational{1});
        a = lb * a - ac[da] * xs * b;
    }
    return a;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    require_same_nvars(a, b);
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
    if (a.is_zero()) return normalize_monic(b);
    if (b.is_zero()) return normalize_monic(a);
    if (a.is_constant() || b.is_constant())
        return Polynomial::constant(a.nvars(), GaussianRational{1});

    // main variable: first one appearing in either input
    int x = 0;
    for (int i = 1; i <= a.nvars(); ++i)
        if (a.degree_in(i) > 0 || b.degree_in(i) > 0) { x = i; break; }

    if (a.degree_in(x) == 0) return gcd(a, content_in(b, x));
    if (b.degree_in(x) == 0) return gcd(content_in(a, x), b);

    Polynomial ca = content_in(a, x);
    Polynomial cb = content_in(b, x);
    Polynomial cg = gcd(ca, cb);

    Polynomial u = primitive_part_in(a, x);
    Polynomial v = primitive_part_in(b, x);
    if (u.degree_in(x) < v.degree_in(x)) std::swap(u, v);
    while (!v.is_zero()) {
        Polynomial r = pseudo_rem(u, v, x);
        u = v;
        v = r.is_zero() ? r : primitive_part_in(r, x);
    }
    if (u.degree_in(x) == 0) return normalize_monic(cg);
    return normalize_monic(cg * primitive_part_in(u, x));
}

}  // namespace fbt
