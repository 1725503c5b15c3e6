#include "fbt/growth.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace fbt {

namespace {

using cd = std::complex<double>;

double abs_on_circle(const Polynomial& p, cd xi, double rho, double theta) {
    return std::abs(p.eval(std::vector<cd>{xi + rho * cd(std::cos(theta), std::sin(theta))}));
}

// Golden-section minimization of |p| in angle on a fixed circle.
double refine_circle_min(const Polynomial& p, cd xi, double rho, double theta0, double halfwidth,
                         int rounds) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = theta0 - halfwidth, hi = theta0 + halfwidth;
    double best = abs_on_circle(p, xi, rho, theta0);
    for (int round = 0; round < rounds; ++round) {
        double a = lo, b = hi;
        double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
        double f1 = abs_on_circle(p, xi, rho, x1), f2 = abs_on_circle(p, xi, rho, x2);
        for (int it = 0; it < 24; ++it) {
            if (f1 < f2) {
                b = x2; x2 = x1; f2 = f1;
                x1 = b - gr * (b - a);
                f1 = abs_on_circle(p, xi, rho, x1);
            } else {
                a = x1; x1 = x2; f1 = f2;
                x2 = a + gr * (b - a);
                f2 = abs_on_circle(p, xi, rho, x2);
            }
        }
        double mid = (a + b) / 2;
        best = std::min(best, abs_on_circle(p, xi, rho, mid));
        lo = mid - (hi - lo) * 0.25;
        hi = mid + (hi - lo) * 0.25;
    }
    return best;
}

double circle_min(const Polynomial& p, cd xi, double rho, int n_angles, double* argmin = nullptr) {
    double best = std::numeric_limits<double>::infinity();
    double best_theta = 0;
    for (int k = 0; k < n_angles; ++k) {
        double theta = 2.0 * M_PI * k / n_angles;
        double v = abs_on_circle(p, xi, rho, theta);
        if (v < best) { best = v; best_theta = theta; }
    }
    if (argmin) *argmin = best_theta;
    return best;
}

double leading_abs_univariate(const Polynomial& p, int* degree_out) {
    auto [coeff, d] = leading_coefficient(p, 1);
    *degree_out = d;
    return std::abs(coeff.leading_coeff().to_complex());
}

void require_univariate(const Polynomial& p) {
    if (p.nvars() != 1) throw std::invalid_argument("expected a univariate polynomial");
}

// Iterated leading-coefficient data: per-variable degrees d_i of the
// successive leading-coefficient polynomials, and the final constant.
struct IteratedLead {
    std::vector<int> degrees;  // d_n, d_{n-1}, ..., d_1
    GaussianRational a0;       // innermost leading constant
};

IteratedLead iterated_leading(const Polynomial& p) {
    IteratedLead out;
    Polynomial cur = p;
    for (int i = cur.nvars(); i >= 1; --i) {
        auto [coeff, d] = leading_coefficient(cur, i);
        out.degrees.push_back(d);
        cur = coeff;
    }
    if (!cur.is_constant() || cur.is_zero())
        throw std::logic_error("iterated leading coefficient did not reach a nonzero constant");
    out.a0 = cur.terms().begin()->second;
    return out;
}

std::vector<CPoint> polydisk_samples(const CPoint& xi, double r, std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    int n = static_cast<int>(xi.size());
    std::vector<CPoint> out;
    out.reserve(count);
    for (int k = 0; k < count; ++k) {
        CPoint z(n);
        for (int i = 0; i < n; ++i) {
            double rho = r * std::sqrt(uni(rng));
            double th = 2.0 * M_PI * uni(rng);
            z[i] = xi[i] + rho * cd(std::cos(th), std::sin(th));
        }
        out.push_back(std::move(z));
    }
    out.push_back(xi);
    return out;
}

double euclid_norm(const CPoint& z) {
    double s = 0;
    for (const cd& c : z) s += std::norm(c);
    return std::sqrt(s);
}

double fit_or_check_M(const Polynomial& p, const ExpPoly& f, double A,
                      const std::vector<CPoint>& pts, std::optional<double> M) {
    double fit = 0.0;
    for (const CPoint& z : pts) {
        double v = std::abs(p.eval(z) * f.eval(z)) * std::exp(-A * euclid_norm(z));
        fit = std::max(fit, v);
    }
    if (!M) return fit;
    if (fit > *M * (1.0 + 1e-9))
        throw std::invalid_argument("precondition |pf| <= M e^{A|z|} fails on the sampled disk");
    return *M;
}

}  // namespace

const char* statement_name(GrowthStatement s) {
    switch (s) {
        case GrowthStatement::lemma31: return "lemma31";
        case GrowthStatement::lemma32: return "lemma32";
        case GrowthStatement::prop33: return "prop33";
    }
    return "?";
}

Rational lemma31_constant(int d, const Rational& r) {
    Rational num = rational_pow(Rational(4), d);
    Rational den = 2 * rational_pow(r, d);
    return num / den;
}

PolyaSzegoResult polya_szego_radius(const Polynomial& p, cd xi, double r, int n_radii,
                                    int n_angles) {
    require_univariate(p);
    if (p.is_zero() || r <= 0) throw std::invalid_argument("need p != 0 and r > 0");
    int d = 0;
    double a0 = leading_abs_univariate(p, &d);
    PolyaSzegoResult res;
    res.threshold = 2.0 * a0 * std::pow(r / 4.0, d);
    res.n_angles = n_angles;

    double best_min = -1.0, best_rho = 0, best_theta = 0;
    for (int k = 1; k <= n_radii; ++k) {
        double rho = r * k / n_radii;
        double theta;
        double m = circle_min(p, xi, rho, n_angles, &theta);
        if (m > best_min) { best_min = m; best_rho = rho; best_theta = theta; }
    }
    res.rho = best_rho;
    res.min_on_circle =
        refine_circle_min(p, xi, best_rho, best_theta, 2.0 * M_PI / n_angles, 3);
    res.ok = res.min_on_circle >= res.threshold;
    return res;
}

bool polya_szego_validate(const Polynomial& p, cd xi, double rho, double threshold, int n_angles) {
    require_univariate(p);
    return circle_min(p, xi, rho, n_angles) >= threshold;
}

GrowthCertificate lemma31_check(const Polynomial& p, cd xi, const Rational& r, double A,
                                const ExpPoly& f, std::optional<double> M) {
    require_univariate(p);
    if (p.is_zero() || r <= 0 || A <= 0) throw std::invalid_argument("need p != 0, r > 0, A > 0");
    double rd = r.get_d();
    int d = 0;
    double a0 = leading_abs_univariate(p, &d);

    // disk sample grid: rings x angles plus the center
    std::vector<CPoint> pts;
    for (int i = 1; i <= 24; ++i)
        for (int k = 0; k < 48; ++k) {
            double rho = rd * i / 24, th = 2.0 * M_PI * k / 48;
            pts.push_back({xi + rho * cd(std::cos(th), std::sin(th))});
        }
    pts.push_back({xi});

    GrowthCertificate cert;
    cert.statement = GrowthStatement::lemma31;
    cert.A = A;
    cert.r = r;
    cert.d = d;
    cert.M = fit_or_check_M(p, f, A, pts, M);
    cert.constant_exact = lemma31_constant(d, r);
    cert.constant = cert.constant_exact.get_d();
    cert.samples_checked = static_cast<long>(pts.size());
    cert.attained = a0 * std::abs(f.eval({xi}));
    cert.bound = cert.constant * std::exp(A * (std::abs(xi) + rd)) * cert.M;
    cert.max_slack = cert.bound - cert.attained;
    cert.violated = cert.attained > cert.bound;
    if (cert.violated) cert.witness = {xi};
    return cert;
}

GrowthCertificate lemma32_check(const Polynomial& p, const CPoint& xi, const Rational& r, double A,
                                const ExpPoly& f, std::optional<double> M, std::uint64_t seed) {
    if (p.is_zero() || r <= 0 || A <= 0) throw std::invalid_argument("need p != 0, r > 0, A > 0");
    int n = p.nvars();
    if (xi.size() != static_cast<size_t>(n)) throw std::invalid_argument("arity mismatch");
    double rd = r.get_d();

    std::vector<CPoint> pts = polydisk_samples(xi, rd, seed, 2048);

    IteratedLead lead = iterated_leading(p);
    Rational chat_exact = 1;
    for (int d : lead.degrees)
        if (d > 0) chat_exact *= lemma31_constant(d, r);  // a degree-0 step costs nothing
    double chat = chat_exact.get_d() / std::abs(lead.a0.to_complex());

    GrowthCertificate cert;
    cert.statement = GrowthStatement::lemma32;
    cert.A = A;
    cert.r = r;
    cert.d = p.degree();
    cert.M = fit_or_check_M(p, f, A, pts, M);
    cert.constant_exact = chat_exact;
    cert.constant = chat;
    cert.samples_checked = static_cast<long>(pts.size());
    cert.attained = std::abs(f.eval(xi)) * std::exp(-std::sqrt(double(n)) * A * euclid_norm(xi));
    cert.bound = chat * std::exp(n * rd * A) * cert.M;
    cert.max_slack = cert.bound - cert.attained;
    cert.violated = cert.attained > cert.bound;
    if (cert.violated) cert.witness = xi;
    return cert;
}

GrowthCertificate prop33_check(const Polynomial& p, double A, const ExpPoly& F, double R_max,
                               int n_radii, int n_dirs, std::uint64_t seed, const Rational& r) {
    if (p.is_zero() || A <= 0 || R_max <= 0) throw std::invalid_argument("need p != 0, A > 0, R_max > 0");
    int n = p.nvars();
    double rd = r.get_d();

    IteratedLead lead = iterated_leading(p);
    Rational chat_exact = 1;
    for (int d : lead.degrees)
        if (d > 0) chat_exact *= lemma31_constant(d, r);  // a degree-0 step costs nothing
    double chat = chat_exact.get_d() / std::abs(lead.a0.to_complex());
    double cA = chat * std::exp(n * rd * A);

    // deterministic direction set on the unit sphere of C^n
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<CPoint> dirs;
    for (int k = 0; k < n_dirs; ++k) {
        CPoint u(n);
        double norm2 = 0;
        for (int i = 0; i < n; ++i) {
            u[i] = cd(gauss(rng), gauss(rng));
            norm2 += std::norm(u[i]);
        }
        double nm = std::sqrt(norm2);
        for (int i = 0; i < n; ++i) u[i] /= nm;
        dirs.push_back(std::move(u));
    }

    GrowthCertificate cert;
    cert.statement = GrowthStatement::prop33;
    cert.A = A;
    cert.r = r;
    cert.d = p.degree();
    cert.constant_exact = chat_exact;
    cert.constant = cA;

    double normF = std::abs(F.eval(CPoint(n)));  // z = 0
    double normpF = std::abs(p.eval(CPoint(n)) * F.eval(CPoint(n)));
    CPoint worst(n);
    long count = 1;
    for (int i = 1; i <= n_radii; ++i) {
        double R = R_max * std::pow(1e-3, 1.0 - double(i) / n_radii);
        for (const CPoint& u : dirs) {
            CPoint z(n);
            for (int j = 0; j < n; ++j) z[j] = R * u[j];
            double vF = std::abs(F.eval(z)) * std::exp(-std::sqrt(double(n)) * A * R);
            double vpF = std::abs(p.eval(z) * F.eval(z)) * std::exp(-A * R);
            if (!std::isfinite(vF) || !std::isfinite(vpF))
                throw std::overflow_error("norm sampling overflowed; lower R_max or raise A");
            if (vF > normF) { normF = vF; worst = z; }
            normpF = std::max(normpF, vpF);
            ++count;
        }
    }
    cert.M = normpF;
    cert.samples_checked = count;
    cert.attained = normF;
    cert.bound = cA * normpF;
    cert.max_slack = cert.bound - cert.attained;
    cert.violated = cert.attained > cert.bound;
    if (cert.violated) cert.witness = worst;
    return cert;
}

}  // namespace fbt
