#include "fbt/duality.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace fbt {

namespace {

// Row-reduced echelon form over the Gaussian rationals, pivoting by
// column order. Returns the pivot column of each reduced row.
std::vector<int> rref(std::vector<std::vector<GaussianRational>>& m) {
    std::vector<int> pivots;
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t sel = row;
        while (sel < rows && m[sel][col].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[row]);
        GaussianRational inv = GaussianRational{1} / m[row][col];
        for (size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            GaussianRational f = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    return pivots;
}

}  // namespace

GaussianRational FiniteFunctional::operator()(const Polynomial& f) const {
    if (f.nvars() != nvars) throw std::invalid_argument("variable-count mismatch");
    if (f.degree() > D) throw std::invalid_argument("polynomial degree exceeds the functional's bound");
    GaussianRational acc;
    for (const auto& [m, c] : f.terms()) {
        auto it = values.find(m);
        if (it != values.end()) acc += c * it->second;
    }
    return acc;
}

std::vector<Polynomial> kernel_basis(const Polynomial& p, int D) {
    if (D < 0) throw std::invalid_argument("degree bound must be nonnegative");
    if (p.is_constant()) throw std::invalid_argument("p must be nonconstant");
    int n = p.nvars();
    int m = p.degree();
    std::vector<Monomial> domain = monomials_up_to(n, D);
    std::vector<Monomial> image = monomials_up_to(n, D - m);
    std::map<Monomial, size_t, GradedLexGreater> image_index;
    for (size_t i = 0; i < image.size(); ++i) image_index.emplace(image[i], i);

    std::vector<std::vector<GaussianRational>> mat(
        image.size(), std::vector<GaussianRational>(domain.size()));
    for (size_t j = 0; j < domain.size(); ++j) {
        Polynomial g = apply_operator(p, Polynomial::term(n, domain[j], GaussianRational{1}));
        // components above degree D-m fall outside the truncated image
        // space (possible when p has terms below its top degree)
        for (const auto& [mono, c] : g.terms()) {
            auto it = image_index.find(mono);
            if (it != image_index.end()) mat[it->second][j] = c;
        }
    }

    std::vector<int> pivots = rref(mat);
    if (pivots.size() != image.size())
        throw std::logic_error("p(d) failed to be surjective onto the truncated image space");

    // one basis vector per free column
    std::vector<bool> is_pivot(domain.size(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<Polynomial> basis;
    for (size_t j = 0; j < domain.size(); ++j) {
        if (is_pivot[j]) continue;
        Polynomial b = Polynomial::term(n, domain[j], GaussianRational{1});
        for (size_t r = 0; r < pivots.size(); ++r) {
            const GaussianRational& e = mat[r][j];
            if (!e.is_zero())
                b = b - e * Polynomial::term(n, domain[pivots[r]], GaussianRational{1});
        }
        basis.push_back(std::move(b));
    }
    return basis;
}

RankReport exp_span_rank(const Polynomial& p, int D, const std::vector<VarietySample>& samples,
                         double tol) {
    int n = p.nvars();
    for (const VarietySample& s : samples)
        if (s.residual > 1e-4 * s.scale)
            throw std::invalid_argument("sample without a valid residual certificate");

    std::vector<Monomial> rows = monomials_up_to(n, D);
    Eigen::MatrixXcd m(rows.size(), samples.size());
    for (size_t k = 0; k < samples.size(); ++k) {
        for (size_t i = 0; i < rows.size(); ++i) {
            std::complex<double> v = 1.0;
            double fct = 1.0;
            for (int j = 0; j < n; ++j) {
                for (int e = 0; e < rows[i][j]; ++e) v *= samples[k].point[j];
                for (int e = 2; e <= rows[i][j]; ++e) fct *= e;
            }
            m(i, k) = v / std::sqrt(fct);
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    std::vector<double> sv(svd.singularValues().data(),
                           svd.singularValues().data() + svd.singularValues().size());
    long rank = 0;
    if (!sv.empty() && sv[0] > 0)
        for (double s : sv)
            if (s > tol * sv[0]) ++rank;

    long kdim = static_cast<long>(kernel_basis(p, D).size());
    return RankReport{p,
                      D,
                      kdim,
                      static_cast<long>(samples.size()),
                      rank,
                      std::move(sv),
                      tol,
                      rank == kdim ? RankVerdict::saturates : RankVerdict::deficient};
}

ShadowReport nullstellensatz_shadow(const Polynomial& p, const Polynomial& f,
                                    const std::vector<VarietySample>& samples,
                                    double vanish_tol) {
    if (p.is_constant()) throw std::invalid_argument("p must be nonconstant");
    double worst = 0.0;
    for (const VarietySample& s : samples) {
        double scale = residual_scale(f, s.point);
        worst = std::max(worst, std::abs(f.eval(s.point)) / scale);
    }
    if (worst > vanish_tol) return {ShadowVerdict::does_not_vanish, worst, std::nullopt};
    auto g = divide_exact(f, p);
    if (g) return {ShadowVerdict::vanishes_and_divides, worst, std::move(g)};
    return {ShadowVerdict::vanishes_division_fails, worst, std::nullopt};
}

std::optional<ExactPoint> find_exact_zero(const Polynomial& rp) {
    int n = rp.nvars();
    // candidate assignments for the remaining variables
    std::vector<GaussianRational> pool{GaussianRational{0}, GaussianRational{1},
                                       GaussianRational{-1}, GaussianRational{2},
                                       GaussianRational{5}};
    for (int j = 1; j <= n; ++j) {
        if (rp.degree_in(j) != 1) continue;
        // rp = A z_j + B with A, B free of z_j
        Polynomial a(n), b(n);
        for (const auto& [m, c] : rp.terms()) {
            Monomial rest = m;
            if (rest[j - 1] == 1) {
                rest[j - 1] = 0;
                a.add_term(rest, c);
            } else if (rest[j - 1] == 0) {
                b.add_term(rest, c);
            } else {
                a = Polynomial::zero(n);
                break;
            }
        }
        if (a.is_zero()) continue;
        for (const GaussianRational& fill : pool) {
            ExactPoint v(n, fill);
            v[j - 1] = GaussianRational{0};
            GaussianRational av = a.eval(v);
            if (av.is_zero()) continue;
            v[j - 1] = -b.eval(v) / av;
            if (rp.eval(v).is_zero()) return v;
        }
    }
    return std::nullopt;
}

CounterexampleRecord counterexample(const Polynomial& p, int D, const ExactPoint& v) {
    ReducednessReport rep = analyze_reducedness(p);
    if (rep.is_reduced)
        throw std::invalid_argument(
            "p is reduced: every functional annihilating <p> annihilates the whole "
            "vanishing ideal, so no gap functional exists");
    const Polynomial& q = rep.squarefree_part;
    const Polynomial& rp = rep.repeated_part;
    if (!rp.eval(v).is_zero())
        throw std::invalid_argument("v is not an exact zero of the repeated part");
    if (D < q.degree()) throw std::invalid_argument("degree bound below deg q");

    int n = p.nvars();
    std::vector<Monomial> basis = monomials_up_to(n, D);
    std::map<Monomial, size_t, GradedLexGreater> index;
    for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);

    std::vector<Monomial> hs = monomials_up_to(n, D - q.degree());
    // constraint rows S(q h) = h(v), augmented with the rhs
    std::vector<std::vector<GaussianRational>> aug(
        hs.size(), std::vector<GaussianRational>(basis.size() + 1));
    for (size_t r = 0; r < hs.size(); ++r) {
        Polynomial qh = q * Polynomial::term(n, hs[r], GaussianRational{1});
        for (const auto& [m, c] : qh.terms()) aug[r][index.at(m)] = c;
        GaussianRational rhs{1};
        for (int i = 0; i < n; ++i) rhs *= pow(v[i], hs[r][i]);
        aug[r][basis.size()] = rhs;
    }

    std::vector<int> pivots = rref(aug);
    // multiplication by q is injective, so every row must carry a pivot
    for (size_t r = pivots.size(); r < aug.size(); ++r)
        if (!aug[r][basis.size()].is_zero())
            throw std::logic_error("inconsistent extension system");
    if (pivots.size() != hs.size()) throw std::logic_error("rank-deficient extension system");

    CounterexampleRecord rec{FiniteFunctional{n, D, {}}, q, rp, v, true, false};
    for (const Monomial& m : basis) rec.S.values.emplace(m, GaussianRational{});
    for (size_t r = 0; r < pivots.size(); ++r)
        rec.S.values[basis[pivots[r]]] = aug[r][basis.size()];

    // verification record
    for (const Monomial& h : monomials_up_to(n, D - p.degree())) {
        Polynomial ph = p * Polynomial::term(n, h, GaussianRational{1});
        if (!rec.S(ph).is_zero()) { rec.kills_p_ideal = false; break; }
    }
    rec.unit_on_q = (rec.S(q) == GaussianRational{1});
    return rec;
}

}  // namespace fbt
