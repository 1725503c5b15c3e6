#include "fbt/variety.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace fbt {

namespace {

using cd = std::complex<double>;

// p restricted to the line z = a + t b, as a dense polynomial in t.
std::vector<cd> restrict_to_line(const Polynomial& p, const CPoint& a, const CPoint& b) {
    int n = p.nvars();
    std::vector<cd> acc{cd(0.0)};
    for (const auto& [m, c] : p.terms()) {
        std::vector<cd> term{c.to_complex()};
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < m[i]; ++k) {
                // multiply by (a_i + t b_i)
                std::vector<cd> next(term.size() + 1, cd(0.0));
                for (size_t j = 0; j < term.size(); ++j) {
                    next[j] += term[j] * a[i];
                    next[j + 1] += term[j] * b[i];
                }
                term = std::move(next);
            }
        }
        if (term.size() > acc.size()) acc.resize(term.size(), cd(0.0));
        for (size_t j = 0; j < term.size(); ++j) acc[j] += term[j];
    }
    return acc;
}

cd horner(const std::vector<cd>& c, cd t) {
    cd v = 0;
    for (size_t i = c.size(); i-- > 0;) v = v * t + c[i];
    return v;
}

cd horner_deriv(const std::vector<cd>& c, cd t) {
    cd v = 0;
    for (size_t i = c.size(); i-- > 1;) v = v * t + c[i] * double(i);
    return v;
}

}  // namespace

std::vector<cd> univariate_roots(std::vector<cd> coeffs) {
    while (!coeffs.empty() && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
    if (coeffs.size() < 2) return {};
    int d = static_cast<int>(coeffs.size()) - 1;
    cd lead = coeffs.back();
    for (auto& c : coeffs) c /= lead;

    // Cauchy-style radius for initial guesses on a perturbed circle.
    double radius = 0.0;
    for (int i = 0; i < d; ++i) radius = std::max(radius, std::pow(std::abs(coeffs[i]), 1.0 / (d - i)));
    radius = 2.0 * std::max(radius, 0.5);

    std::vector<cd> roots(d);
    for (int k = 0; k < d; ++k) {
        double theta = 2.0 * M_PI * k / d + 0.4;  // offset breaks symmetries
        roots[k] = radius * cd(std::cos(theta), std::sin(theta));
    }
    for (int iter = 0; iter < 600; ++iter) {
        double shift = 0.0;
        for (int k = 0; k < d; ++k) {
            cd num = horner(coeffs, roots[k]);
            cd den = 1.0;
            for (int j = 0; j < d; ++j)
                if (j != k) den *= roots[k] - roots[j];
            if (std::abs(den) == 0.0) den = 1e-300;
            cd delta = num / den;
            roots[k] -= delta;
            shift = std::max(shift, std::abs(delta));
        }
        if (shift < 1e-14 * std::max(1.0, radius)) break;
    }
    // Newton polish per root.
    for (cd& r : roots) {
        for (int it = 0; it < 12; ++it) {
            cd dp = horner_deriv(coeffs, r);
            if (std::abs(dp) < 1e-14) break;
            cd step = horner(coeffs, r) / dp;
            r -= step;
            if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(r))) break;
        }
    }
    return roots;
}

double residual_scale(const Polynomial& p, const CPoint& z) {
    double s = 1.0;
    for (const auto& [m, c] : p.terms()) {
        double t = std::abs(c.to_complex());
        for (int i = 0; i < p.nvars(); ++i)
            for (int k = 0; k < m[i]; ++k) t *= std::abs(z[i]);
        s = std::max(s, t);
    }
    return s;
}

std::vector<VarietySample> sample_line(const Polynomial& p, std::uint64_t seed,
                                       const SamplerOptions& opt) {
    if (p.is_constant()) throw std::invalid_argument("cannot sample the variety of a constant");
    int n = p.nvars();

    for (int attempt = 0; attempt < opt.max_line_retries; ++attempt) {
        std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * attempt);
        std::normal_distribution<double> gauss(0.0, 1.0);
        CPoint a(n), b(n);
        double bnorm = 0.0;
        for (int i = 0; i < n; ++i) {
            a[i] = opt.line_radius * cd(gauss(rng), gauss(rng));
            b[i] = cd(gauss(rng), gauss(rng));
            bnorm += std::norm(b[i]);
        }
        bnorm = std::sqrt(bnorm);
        for (int i = 0; i < n; ++i) b[i] /= bnorm;

        std::vector<cd> q = restrict_to_line(p, a, b);
        while (q.size() > 1 && std::abs(q.back()) < 1e-12) q.pop_back();
        if (q.size() < 2) continue;  // degenerate line

        std::vector<VarietySample> out;
        for (cd t : univariate_roots(q)) {
            CPoint z(n);
            for (int i = 0; i < n; ++i) z[i] = a[i] + t * b[i];
            // Newton along the line, against the exact p.
            for (int it = 0; it < 8; ++it) {
                cd val = p.eval(z);
                cd dval = 0;
                for (int i = 0; i < n; ++i) dval += p.partial(i + 1).eval(z) * b[i];
                if (std::abs(dval) < 1e-14) break;
                t -= val / dval;
                for (int i = 0; i < n; ++i) z[i] = a[i] + t * b[i];
            }
            double res = std::abs(p.eval(z));
            double scale = residual_scale(p, z);
            double qscale = 0.0;
            for (const cd& qc : q) qscale = std::max(qscale, std::abs(qc));
            bool multiple = std::abs(horner_deriv(q, t)) < 1e-6 * qscale;
            double tol = multiple ? std::sqrt(opt.tol_rel) : opt.tol_rel;
            if (res <= tol * scale) out.push_back({z, res, scale, seed, multiple});
        }
        if (!out.empty()) return out;
    }
    throw std::runtime_error("variety sampler: retry cap exhausted (persistent validation failure)");
}

std::vector<VarietySample> sample_many(const Polynomial& p, int count, std::uint64_t seed,
                                       const SamplerOptions& opt) {
    if (count < 1) throw std::invalid_argument("sample count must be >= 1");
    std::vector<VarietySample> out;
    int budget = opt.max_line_retries * std::max(4, count);
    for (int line = 0; line < budget && static_cast<int>(out.size()) < count; ++line) {
        std::uint64_t line_seed = seed + 0x517cc1b727220a95ULL * (line + 1);
        std::vector<VarietySample> batch;
        try {
            batch = sample_line(p, line_seed, opt);
        } catch (const std::runtime_error&) {
            continue;
        }
        for (VarietySample& s : batch) {
            bool dup = false;
            for (const VarietySample& t : out) {
                double dist = 0.0;
                for (int i = 0; i < p.nvars(); ++i)
                    dist = std::max(dist, std::abs(s.point[i] - t.point[i]));
                if (dist < opt.dedupe_eps) { dup = true; break; }
            }
            if (!dup) {
                out.push_back(std::move(s));
                if (static_cast<int>(out.size()) == count) break;
            }
        }
    }
    if (static_cast<int>(out.size()) < count)
        throw std::runtime_error("variety sampler: could not collect the requested sample count");
    return out;
}

}  // namespace fbt
