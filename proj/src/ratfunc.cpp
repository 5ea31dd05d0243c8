#include "qma/ratfunc.hpp"

#include <stdexcept>

namespace qma {

HSeries HSeries::inverse() const {
    if (c0 == 0) throw std::domain_error("HSeries inverse: constant term is zero");
    Rational i0 = 1 / c0;
    Rational i1 = -c1 * i0 * i0;
    Rational i2 = (c1 * c1 / c0 - c2) * i0 * i0;
    return {i0, i1, i2};
}

RatFunc::RatFunc(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(Rational(1));
        return;
    }
    // Pull q-power content out of the denominator into the numerator.
    int dlow = den_.low_exp();
    if (dlow != 0) {
        den_ = den_.shifted(-dlow);
        num_ = num_.shifted(-dlow);
    }
    LaurentPoly g = LaurentPoly::poly_gcd(num_, den_);
    if (!g.is_one() && !g.is_zero()) {
        int nlow = num_.low_exp();
        LaurentPoly q, r;
        LaurentPoly::divmod(num_.shifted(-nlow), g, q, r);
        num_ = q.shifted(nlow);
        LaurentPoly q2, r2;
        LaurentPoly::divmod(den_, g, q2, r2);
        den_ = q2;
        if (den_.low_exp() != 0) {
            num_ = num_.shifted(-den_.low_exp());
            den_ = den_.shifted(-den_.low_exp());
        }
    }
    Rational lead = den_.coeff(den_.high_exp());
    if (lead != 1) {
        den_ = den_.scaled(1 / lead);
        num_ = num_.scaled(1 / lead);
    }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
}

Rational RatFunc::eval(const Rational& q0) const {
    Rational d = den_.eval(q0);
    if (d == 0) throw std::domain_error("RatFunc: denominator vanishes at sample point");
    return num_.eval(q0) / d;
}

namespace {
// (exp(h/2))^k = 1 + (k/2) h + (k^2/8) h^2 + O(h^3)
HSeries expand_poly(const LaurentPoly& p) {
    HSeries acc;
    for (const auto& [e, c] : p.coeffs()) {
        Rational k(e);
        acc = acc + HSeries(c, c * k / 2, c * k * k / 8);
    }
    return acc;
}
} // namespace

HSeries RatFunc::hbar_expand() const {
    HSeries d = expand_poly(den_);
    if (d.c0 == 0)
        throw std::domain_error("hbar_expand: pole at q = 1 in denominator " + den_.to_string());
    return expand_poly(num_) / d;
}

Rational RatFunc::at_one() const { return eval(Rational(1)); }

std::string RatFunc::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

RatFunc RatFunc::parse(const std::string& text) {
    auto slash = text.find(") / (");
    if (text.size() > 1 && text.front() == '(' && slash != std::string::npos) {
        std::string n = text.substr(1, slash - 1);
        std::string d = text.substr(slash + 5);
        if (!d.empty() && d.back() == ')') d.pop_back();
        return RatFunc(LaurentPoly::parse(n), LaurentPoly::parse(d));
    }
    return RatFunc(LaurentPoly::parse(text));
}

} // namespace qma
