#pragma once

#include <random>

#include "fbt/functional.hpp"

namespace fbt {

/// Seeded generators for random exact objects, shared by the CLI's
/// random suites and the tests. Coefficients are small Gaussian
/// rationals, so products stay desk-sized.
inline GaussianRational random_coeff(std::mt19937_64& rng, bool allow_imag = true) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    Rational re(num(rng), den(rng));
    re.canonicalize();
    if (!allow_imag || std::uniform_int_distribution<int>(0, 2)(rng) != 0)
        return GaussianRational{re};
    Rational im(num(rng), den(rng));
    im.canonicalize();
    return GaussianRational{re, im};
}

inline Polynomial random_polynomial(std::mt19937_64& rng, int nvars, int deg, int terms = 4,
                                    bool allow_imag = true) {
    Polynomial p(nvars);
    std::uniform_int_distribution<int> edist(0, deg);
    for (int t = 0; t < terms; ++t) {
        Monomial m(nvars, 0);
        int left = edist(rng);
        for (int i = 0; i < nvars && left > 0; ++i) {
            int e = std::uniform_int_distribution<int>(0, left)(rng);
            m[i] = e;
            left -= e;
        }
        p.add_term(m, random_coeff(rng, allow_imag));
    }
    if (p.is_zero()) p.add_term(Monomial(nvars, 0), GaussianRational{1});
    return p;
}

inline ExactPoint random_point(std::mt19937_64& rng, int nvars, bool allow_imag = true) {
    ExactPoint w(nvars);
    for (int i = 0; i < nvars; ++i) w[i] = random_coeff(rng, allow_imag);
    return w;
}

inline ExpFunctional random_functional(std::mt19937_64& rng, int nvars, int points, int qdeg) {
    std::vector<ExpFunctional::Term> ts;
    for (int k = 0; k < points; ++k)
        ts.push_back({random_polynomial(rng, nvars, qdeg, 3), random_point(rng, nvars)});
    return ExpFunctional(nvars, std::move(ts));
}

inline ExpPoly random_exppoly(std::mt19937_64& rng, int nvars, int terms, int qdeg) {
    std::vector<ExpPoly::Term> ts;
    for (int k = 0; k < terms; ++k)
        ts.push_back({random_polynomial(rng, nvars, qdeg, 3), random_point(rng, nvars)});
    return ExpPoly(nvars, std::move(ts));
}

}  // namespace fbt
