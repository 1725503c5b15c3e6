#include <cctype>

#include "fbt/polynomial.hpp"

namespace fbt {
namespace {

// Recursive-descent parser for the polynomial text format.
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := coeff ['*' powers] | powers
//   coeff  := rational | '(' gauss ')'
//   gauss  := rational [('+'|'-') rational 'i']
//   powers := var ('^' nat)? ('*' var ('^' nat)?)*
//   var    := 'z' nat
// Whitespace-insensitive. Unknown variables and malformed rationals are
// rejected with the offending position.
class Parser {
public:
    Parser(const std::string& text, int nvars) : s_(text), nvars_(nvars) {}

    Polynomial run() {
        // nvars may be inferred: scan for the largest variable index first.
        if (nvars_ == 0) {
            nvars_ = scan_max_var();
            if (nvars_ == 0) nvars_ = 1;
        }
        Polynomial p(nvars_);
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (get() == '-');
        while (true) {
            Polynomial t = parse_term();
            p = neg ? p - t : p + t;
            skip_ws();
            if (at_end()) break;
            char c = get();
            if (c == '+')
                neg = false;
            else if (c == '-')
                neg = true;
            else
                fail("expected '+' or '-'", pos_ - 1);
        }
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg, size_t at) { throw ParseError(msg, at); }

    bool at_end() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    char get() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input", pos_);
        return s_[pos_++];
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    int scan_max_var() {
        int mx = 0;
        for (size_t i = 0; i + 1 < s_.size(); ++i) {
            if (s_[i] == 'z' && std::isdigit(static_cast<unsigned char>(s_[i + 1]))) {
                int v = 0;
                size_t j = i + 1;
                while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j])))
                    v = v * 10 + (s_[j++] - '0');
                mx = std::max(mx, v);
            }
        }
        return mx;
    }

    mpz_class parse_integer() {
        skip_ws();
        size_t start = pos_;
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = (s_[pos_++] == '-');
        size_t dstart = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == dstart) fail("malformed integer", start);
        mpz_class v(s_.substr(dstart, pos_ - dstart));
        return neg ? mpz_class(-v) : v;
    }

    Rational parse_rational() {
        size_t start = pos_;
        mpz_class num = parse_integer();
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            mpz_class den = parse_integer();
            if (den == 0) fail("zero denominator", start);
            Rational r(num, den);
            r.canonicalize();
            return r;
        }
        return Rational(num);
    }

    GaussianRational parse_coeff() {
        skip_ws();
        if (peek() != '(') return GaussianRational{parse_rational()};
        size_t open = pos_;
        get();  // '('
        Rational re = parse_rational();
        skip_ws();
        if (peek() == ')') {
            get();
            return GaussianRational{re};
        }
        char sign = get();
        if (sign != '+' && sign != '-') fail("expected '+', '-' or ')'", pos_ - 1);
        Rational im = parse_rational();
        skip_ws();
        if (get() != 'i') fail("expected 'i'", pos_ - 1);
        if (get() != ')') fail("expected ')'", open);
        return GaussianRational{re, sign == '-' ? Rational(-im) : im};
    }

    // var ('^' nat)?, accumulated into alpha
    void parse_power(Monomial& alpha) {
        size_t start = pos_;
        if (get() != 'z') fail("expected variable", start);
        mpz_class idx = parse_integer();
        if (idx < 1 || idx > nvars_)
            fail("unknown variable z" + idx.get_str() + " (nvars=" + std::to_string(nvars_) + ")", start);
        int e = 1;
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            mpz_class ev = parse_integer();
            if (ev < 0) fail("negative exponent", pos_);
            e = static_cast<int>(ev.get_si());
        }
        alpha[idx.get_si() - 1] += e;
    }

    Polynomial parse_term() {
        GaussianRational c{1};
        Monomial alpha(nvars_, 0);
        char p = peek();
        bool saw_coeff = false;
        if (p == '(' || std::isdigit(static_cast<unsigned char>(p))) {
            c = parse_coeff();
            saw_coeff = true;
        }
        skip_ws();
        bool expect_var = false;
        if (pos_ < s_.size() && s_[pos_] == '*') {
            ++pos_;
            expect_var = true;
        }
        if (peek() == 'z' || expect_var || !saw_coeff) {
            if (peek() != 'z') fail("expected variable or coefficient", pos_);
            parse_power(alpha);
            while (true) {
                skip_ws();
                if (pos_ < s_.size() && s_[pos_] == '*') {
                    ++pos_;
                    parse_power(alpha);
                } else if (pos_ < s_.size() && s_[pos_] == 'z') {
                    parse_power(alpha);
                } else {
                    break;
                }
            }
        }
        return Polynomial::term(nvars_, alpha, c);
    }

    const std::string& s_;
    int nvars_;
    size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text, int nvars) {
    return Parser(text, nvars).run();
}

}  // namespace fbt
