#include "qma/laurent.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qma {

LaurentPoly::LaurentPoly(const Rational& c) {
    if (c != 0) coeffs_[0] = c;
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exp) {
    LaurentPoly p;
    if (c != 0) p.coeffs_[exp] = c;
    return p;
}

LaurentPoly LaurentPoly::q(int exp) { return monomial(1, exp); }

bool LaurentPoly::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
           coeffs_.begin()->second == 1;
}

int LaurentPoly::low_exp() const {
    if (is_zero()) throw std::logic_error("low_exp of zero polynomial");
    return coeffs_.begin()->first;
}

int LaurentPoly::high_exp() const {
    if (is_zero()) throw std::logic_error("high_exp of zero polynomial");
    return coeffs_.rbegin()->first;
}

Rational LaurentPoly::coeff(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void LaurentPoly::set_coeff(int exp, const Rational& c) {
    if (c == 0)
        coeffs_.erase(exp);
    else
        coeffs_[exp] = c;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.coeffs_) r.set_coeff(e, r.coeff(e) + c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.coeffs_) r.set_coeff(e, r.coeff(e) - c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : o.coeffs_)
            r.set_coeff(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::shifted(int exp) const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e + exp] = c;
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [e, co] : coeffs_) r.coeffs_[e] = co * c;
    return r;
}

Rational LaurentPoly::eval(const Rational& q0) const {
    Rational acc = 0;
    for (const auto& [e, c] : coeffs_) {
        Rational p = 1;
        int n = e < 0 ? -e : e;
        for (int i = 0; i < n; ++i) p *= q0;
        if (e < 0) {
            if (q0 == 0) throw std::domain_error("eval at q=0 with negative exponent");
            p = 1 / p;
        }
        acc += c * p;
    }
    return acc;
}

void LaurentPoly::divmod(const LaurentPoly& a, const LaurentPoly& b,
                         LaurentPoly& quot, LaurentPoly& rem) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    quot = LaurentPoly();
    rem = a;
    const int db = b.high_exp();
    const Rational lb = b.coeff(db);
    while (!rem.is_zero() && rem.high_exp() >= db) {
        int e = rem.high_exp() - db;
        Rational c = rem.coeff(rem.high_exp()) / lb;
        LaurentPoly t = monomial(c, e);
        quot = quot + t;
        rem = rem - t * b;
    }
}

LaurentPoly LaurentPoly::poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly x = a.is_zero() ? a : a.shifted(-a.low_exp());
    LaurentPoly y = b.is_zero() ? b : b.shifted(-b.low_exp());
    while (!y.is_zero()) {
        LaurentPoly q, r;
        divmod(x, y, q, r);
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x.scaled(1 / x.coeff(x.high_exp())); // monic
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // descending exponents
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        Rational c = it->second;
        int e = it->first;
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (e == 0) {
            os << c;
        } else {
            if (c != 1) os << c << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

namespace {

struct Lexer {
    const std::string& s;
    size_t i = 0;
    explicit Lexer(const std::string& str) : s(str) {}
    void skip_ws() { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; }
    bool eof() { skip_ws(); return i >= s.size(); }
    char peek() { skip_ws(); return i < s.size() ? s[i] : '\0'; }
    char get() { skip_ws(); return s[i++]; }
};

Rational parse_rational(Lexer& lx) {
    std::string tok;
    lx.skip_ws();
    while (lx.i < lx.s.size() && std::isdigit((unsigned char)lx.s[lx.i])) tok += lx.s[lx.i++];
    if (tok.empty()) throw std::invalid_argument("expected number");
    if (lx.i < lx.s.size() && lx.s[lx.i] == '/') {
        tok += lx.s[lx.i++];
        std::string den;
        while (lx.i < lx.s.size() && std::isdigit((unsigned char)lx.s[lx.i])) den += lx.s[lx.i++];
        if (den.empty()) throw std::invalid_argument("expected denominator");
        tok += den;
    }
    return Rational(tok);
}

int parse_int(Lexer& lx) {
    std::string tok;
    if (lx.peek() == '-') { tok += lx.get(); }
    while (lx.i < lx.s.size() && std::isdigit((unsigned char)lx.s[lx.i])) tok += lx.s[lx.i++];
    if (tok.empty() || tok == "-") throw std::invalid_argument("expected integer exponent");
    return std::stoi(tok);
}

} // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
    Lexer lx(text);
    LaurentPoly result;
    bool first = true;
    while (!lx.eof()) {
        int sign = 1;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            lx.get();
            sign = (c == '-') ? -1 : 1;
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' between terms");
        }
        first = false;
        Rational coef = 1;
        bool have_coef = false;
        if (std::isdigit((unsigned char)lx.peek())) {
            coef = parse_rational(lx);
            have_coef = true;
        }
        if (lx.peek() == '*') lx.get();
        int exp = 0;
        if (lx.peek() == 'q') {
            lx.get();
            exp = 1;
            if (lx.peek() == '^') {
                lx.get();
                exp = parse_int(lx);
            }
        } else if (!have_coef) {
            throw std::invalid_argument("expected term");
        }
        LaurentPoly term = monomial(sign * coef, exp);
        result = result + term;
    }
    if (first) throw std::invalid_argument("empty polynomial text");
    return result;
}

} // namespace qma
