#pragma once

#include "fbt/polynomial.hpp"

namespace fbt {

/// Result of the squarefree analysis of p. The factorization
/// squarefree_part * repeated_part equals p up to a nonzero scalar, and
/// is_reduced holds exactly when repeated_part is constant.
struct ReducednessReport {
    bool is_reduced;
    Polynomial squarefree_part;
    Polynomial repeated_part;
    Polynomial witness_gcd;  // gcd(p, d1 p, ..., dn p)
};

/// Characteristic-zero squarefree test: p is reduced iff
/// gcd(p, all partials) is constant. Rejects zero and constant inputs.
ReducednessReport analyze_reducedness(const Polynomial& p);

}  // namespace fbt
