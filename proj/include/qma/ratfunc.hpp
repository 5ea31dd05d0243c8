#pragma once

#include <string>

#include "qma/laurent.hpp"

namespace qma {

/// Truncated power series a0 + a1*h + a2*h^2 (mod h^3) in the formal
/// deformation parameter, under the substitution q = exp(h/2).
struct HSeries {
    Rational c0, c1, c2;

    HSeries() : c0(0), c1(0), c2(0) {}
    HSeries(Rational a0, Rational a1, Rational a2)
        : c0(std::move(a0)), c1(std::move(a1)), c2(std::move(a2)) {}

    HSeries operator+(const HSeries& o) const { return {c0 + o.c0, c1 + o.c1, c2 + o.c2}; }
    HSeries operator-(const HSeries& o) const { return {c0 - o.c0, c1 - o.c1, c2 - o.c2}; }
    HSeries operator-() const { return {-c0, -c1, -c2}; }
    HSeries operator*(const HSeries& o) const {
        return {c0 * o.c0, c0 * o.c1 + c1 * o.c0, c0 * o.c2 + c1 * o.c1 + c2 * o.c0};
    }
    HSeries inverse() const; // requires c0 != 0
    HSeries operator/(const HSeries& o) const { return *this * o.inverse(); }
    bool operator==(const HSeries& o) const = default;
};

/// Element of Q(q) kept in reduced canonical form: gcd(num, den) is a unit,
/// den is an ordinary polynomial with nonzero constant term and leading
/// coefficient 1.
class RatFunc {
public:
    RatFunc() : num_(), den_(LaurentPoly(Rational(1))) {}
    RatFunc(const LaurentPoly& num, const LaurentPoly& den);
    explicit RatFunc(const Rational& c) : num_(LaurentPoly(c)), den_(LaurentPoly(Rational(1))) {}
    explicit RatFunc(const LaurentPoly& p) : num_(p), den_(LaurentPoly(Rational(1))) {}

    static RatFunc q(int exp = 1) { return RatFunc(LaurentPoly::q(exp)); }
    static RatFunc one() { return RatFunc(Rational(1)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const; // throws on division by zero
    RatFunc inverse() const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    Rational eval(const Rational& q0) const; // throws if den(q0) == 0

    /// Taylor expansion of f(exp(h/2)) mod h^3. Throws if den(1) == 0.
    HSeries hbar_expand() const;

    /// Value at q = 1; throws if the denominator vanishes there.
    Rational at_one() const;

    std::string to_string() const;
    static RatFunc parse(const std::string& text);

private:
    void reduce();
    LaurentPoly num_, den_;
};

} // namespace qma
