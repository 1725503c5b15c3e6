#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "fbt/polynomial.hpp"

namespace fbt {

using CPoint = std::vector<std::complex<double>>;

/// A validated numerical point on V_p. residual <= tol_rel * scale holds
/// for every sample that is returned; rejected candidates never escape.
struct VarietySample {
    CPoint point;
    double residual;  // |p(point)|
    double scale;     // max(1, largest monomial magnitude of p at point)
    std::uint64_t seed;
    bool multiple;  // root with small |q'(t)| along the section line
};

struct SamplerOptions {
    double tol_rel = 1e-10;
    int max_line_retries = 64;
    double dedupe_eps = 1e-6;
    double line_radius = 2.0;  // scale of the random affine line
};

/// Roots of a dense univariate polynomial (coefficients low-to-high) by
/// Durand-Kerner simultaneous iteration with Newton polish.
std::vector<std::complex<double>> univariate_roots(std::vector<std::complex<double>> coeffs);

/// Samples V_p along one random affine complex line z = a + t b. Returns
/// up to deg p validated samples; throws after the retry cap.
std::vector<VarietySample> sample_line(const Polynomial& p, std::uint64_t seed,
                                       const SamplerOptions& opt = {});

/// Repeats sample_line over derived seeds until `count` deduplicated,
/// validated samples are collected.
std::vector<VarietySample> sample_many(const Polynomial& p, int count, std::uint64_t seed,
                                       const SamplerOptions& opt = {});

/// max(1, largest monomial magnitude of p at z); the normalizer of the
/// residual certificate.
double residual_scale(const Polynomial& p, const CPoint& z);

}  // namespace fbt
