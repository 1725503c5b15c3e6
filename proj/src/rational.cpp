#include "fbt/rational.hpp"

namespace fbt {

std::string GaussianRational::str() const {
    if (im == 0) return re.get_str();
    return "(" + re.get_str() + (im > 0 ? "+" : "-") + Rational(abs(im)).get_str() + "i)";
}

GaussianRational pow(const GaussianRational& base, unsigned long e) {
    GaussianRational r{1};
    GaussianRational b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Rational factorial(unsigned long k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return Rational(f);
}

}  // namespace fbt
