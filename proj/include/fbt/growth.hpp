#pragma once

#include <complex>
#include <optional>
#include <string>

#include "fbt/exppoly.hpp"
#include "fbt/variety.hpp"

namespace fbt {

enum class GrowthStatement { lemma31, lemma32, prop33 };

/// Verification record for one growth inequality. violated = false is
/// the only acceptable outcome on valid inputs: the inequalities are
/// theorems, so a violation is a bug report, not a tolerance event.
struct GrowthCertificate {
    GrowthStatement statement;
    double A = 0;
    Rational r = 0;          // radius, exact
    int d = 0;               // degree entering the constant
    Rational constant_exact; // c, c-hat or the rational part of c_A, before float conversion
    double constant = 0;     // the constant actually multiplied into the bound
    double M = 0;
    long samples_checked = 0;
    double bound = 0;
    double attained = 0;
    double max_slack = 0;    // bound - attained
    bool violated = false;
    CPoint witness;          // set when violated
};

struct PolyaSzegoResult {
    double rho = 0;
    double min_on_circle = 0;  // refined sampled minimum of |p| on |z-xi|=rho
    double threshold = 0;      // 2 |a0| (r/4)^d
    int n_angles = 0;
    bool ok = false;
};

/// Minimum-modulus radius search: finds rho in (0, r] whose circle about
/// xi carries |p| >= 2|a0|(r/4)^d. Scans a radius grid, then refines the
/// circle minimum by golden-section in angle.
PolyaSzegoResult polya_szego_radius(const Polynomial& p, std::complex<double> xi, double r,
                                    int n_radii = 256, int n_angles = 256);

/// Re-checks a found circle at a given angular density.
bool polya_szego_validate(const Polynomial& p, std::complex<double> xi, double rho,
                          double threshold, int n_angles);

/// Exact constant c = 4^d / (2 r^d) of the one-variable estimate.
Rational lemma31_constant(int d, const Rational& r);

/// |a0 f(xi)| <= c e^{A(|xi|+r)} M on a one-variable p. M is auto-fitted
/// as max |p f| e^{-A|z|} over disk samples when not supplied; a supplied
/// M that the precondition sampler refutes rejects the input.
GrowthCertificate lemma31_check(const Polynomial& p, std::complex<double> xi, const Rational& r,
                                double A, const ExpPoly& f, std::optional<double> M = std::nullopt);

/// |f(xi)| e^{-sqrt(n) A |xi|} <= chat e^{n r A} M on the polydisk, with
/// chat the product of the per-variable constants of the iterated
/// leading-coefficient argument.
GrowthCertificate lemma32_check(const Polynomial& p, const CPoint& xi, const Rational& r, double A,
                                const ExpPoly& f, std::optional<double> M = std::nullopt,
                                std::uint64_t seed = 1);

/// Sampled-norm check of ||F||_{sqrt(n) A} <= c_A ||p F||_A with
/// c_A = chat e^{n r A}. Sampled sup-norms are lower bounds of the true
/// sups: a violation is a genuine falsification, a pass is evidence.
GrowthCertificate prop33_check(const Polynomial& p, double A, const ExpPoly& F, double R_max,
                               int n_radii = 64, int n_dirs = 128, std::uint64_t seed = 1,
                               const Rational& r = Rational(1));

const char* statement_name(GrowthStatement s);

}  // namespace fbt
