#pragma once

#include "yangian/rational.hpp"

#include <string>
#include <vector>

namespace yangian {

// Coefficients of the N-th cyclotomic polynomial, constant term first,
// monic. Computed by dividing x^N - 1 by Phi_d over the proper divisors d.
std::vector<Rational> cyclotomic_polynomial(int n);

int euler_phi(int n);

// An element of Q(w) with w a primitive `order`-th root of unity,
// stored as a polynomial of degree < phi(order) in the power basis,
// reduced mod Phi_order. Reduced form is canonical: two values are equal
// as field elements iff their coefficient vectors are equal.
//
// Values of order 1 are plain rationals and lift transparently into any
// other order; mixing two orders >= 2 is an error.
class CycNum {
  public:
    CycNum();  // rational zero (order 1)
    CycNum(int order, std::vector<Rational> coeffs);

    static CycNum zero(int order);
    static CycNum one(int order);
    static CycNum from_rational(int order, const Rational& r);
    static CycNum omega(int order);

    int order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    CycNum zero_like() const { return zero(order_); }
    CycNum one_like() const { return one(order_); }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const;  // throws unless is_rational()

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);
    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }

    CycNum scaled(const Rational& r) const;
    CycNum scaled(const CycNum& s) const {
        CycNum r = *this;
        r *= s;
        return r;
    }
    CycNum inverse() const;  // throws std::domain_error on zero
    CycNum conjugate() const;  // the automorphism w -> w^{order-1}

    friend bool operator==(const CycNum& a, const CycNum& b);
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    std::string str() const;

  private:
    CycNum lifted(int order) const;

    int order_;
    std::vector<Rational> c_;  // length phi(order_)
};

// w^(k mod N) in canonical form.
CycNum omega_power(int n, long k);

// Sum_{i=0}^{N-1} w^{ik}, computed by summation. Equals N when N | k and
// 0 otherwise; used as a self-test of the reduction.
CycNum geometric_character_sum(int n, long k);

}  // namespace yangian
