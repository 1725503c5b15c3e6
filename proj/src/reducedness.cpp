#include "fbt/reducedness.hpp"

namespace fbt {

ReducednessReport analyze_reducedness(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("reducedness of the zero polynomial is undefined");
    if (p.is_constant()) throw std::invalid_argument("constant polynomial has no variety to speak of");

    Polynomial g = p;
    for (int i = 1; i <= p.nvars(); ++i) {
        Polynomial di = p.partial(i);
        if (di.is_zero()) continue;
        g = gcd(g, di);
        if (g.is_constant()) break;
    }
    g = normalize_monic(g);

    auto q = divide_exact(p, g);
    if (!q) throw std::logic_error("witness gcd does not divide p");
    ReducednessReport rep{g.is_constant(), normalize_monic(*q), g, g};
    return rep;
}

}  // namespace fbt
