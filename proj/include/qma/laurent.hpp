#pragma once

#include <map>
#include <string>

#include "qma/rational.hpp"

namespace qma {

/// Laurent polynomial in the formal variable q with rational coefficients.
/// Canonical form: no zero coefficients are stored, so value equality is
/// representation equality.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& c); // constant
    static LaurentPoly monomial(const Rational& c, int exp);
    static LaurentPoly q(int exp = 1);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    int low_exp() const;  // smallest exponent; requires nonzero
    int high_exp() const; // largest exponent; requires nonzero
    Rational coeff(int exp) const;
    const std::map<int, Rational>& coeffs() const { return coeffs_; }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    bool operator<(const LaurentPoly& o) const { return coeffs_ < o.coeffs_; }

    /// Multiply by the monomial c*q^exp.
    LaurentPoly shifted(int exp) const;
    LaurentPoly scaled(const Rational& c) const;

    Rational eval(const Rational& q0) const; // q0 must be nonzero if negative exps

    /// Exact quotient and remainder of ordinary polynomials (low_exp >= 0 on
    /// both sides). Division follows descending degree.
    static void divmod(const LaurentPoly& a, const LaurentPoly& b,
                       LaurentPoly& quot, LaurentPoly& rem);

    /// Monic gcd of the underlying ordinary polynomials (q-power content of
    /// the inputs is ignored).
    static LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

    std::string to_string() const;
    static LaurentPoly parse(const std::string& text);

    void set_coeff(int exp, const Rational& c);

private:
    std::map<int, Rational> coeffs_;
};

} // namespace qma
