#pragma once

#include "yangian/cyclotomic.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace yangian {

// Sparse polynomial in two commuting indeterminates with CycNum
// coefficients and nonnegative exponents. Zero coefficients are never
// stored, so equal polynomials have equal term maps.
//
// Two roles, one representation: ParamPoly reads the variables as the
// evaluation parameters (a, b); LaurentPoly reads them as u^-1, v^-1.
class BiPoly {
  public:
    using Key = std::pair<int, int>;

    explicit BiPoly(int order) : order_(order) {}

    static BiPoly constant(CycNum c) {
        BiPoly p(c.order());
        p.add_term(0, 0, std::move(c));
        return p;
    }
    static BiPoly monomial(int dx, int dy, CycNum c) {
        BiPoly p(c.order());
        p.add_term(dx, dy, std::move(c));
        return p;
    }
    static BiPoly var_x(int order) { return monomial(1, 0, CycNum::one(order)); }
    static BiPoly var_y(int order) { return monomial(0, 1, CycNum::one(order)); }

    int order() const { return order_; }
    const std::map<Key, CycNum>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    BiPoly zero_like() const { return BiPoly(order_); }
    BiPoly one_like() const { return constant(CycNum::one(order_)); }

    void add_term(int dx, int dy, const CycNum& c) {
        if (dx < 0 || dy < 0) throw std::invalid_argument("negative exponent in polynomial");
        if (c.is_zero()) return;
        auto it = terms_.find({dx, dy});
        if (it == terms_.end()) {
            terms_.emplace(Key{dx, dy}, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    BiPoly operator-() const {
        BiPoly r(order_);
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }
    BiPoly& operator+=(const BiPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
        return *this;
    }
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r(std::max(a.order_, b.order_));
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }

    BiPoly scaled(const CycNum& s) const {
        BiPoly r(order_);
        if (s.is_zero()) return r;
        r.order_ = std::max(order_, s.order());
        for (const auto& [k, c] : terms_) r.add_term(k.first, k.second, c * s);
        return r;
    }
    BiPoly scaled(const Rational& s) const {
        BiPoly r(order_);
        if (s == 0) return r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, c.scaled(s));
        return r;
    }

    // Total substitution of both variables.
    CycNum eval(const CycNum& x, const CycNum& y) const {
        CycNum acc = CycNum::zero(order_);
        for (const auto& [k, c] : terms_) {
            CycNum t = c;
            for (int i = 0; i < k.first; ++i) t *= x;
            for (int i = 0; i < k.second; ++i) t *= y;
            acc += t;
        }
        return acc;
    }

    int degree_x() const {
        int d = 0;
        for (const auto& [k, c] : terms_) d = std::max(d, k.first);
        return d;
    }
    int degree_y() const {
        int d = 0;
        for (const auto& [k, c] : terms_) d = std::max(d, k.second);
        return d;
    }

    CycNum coefficient(int dx, int dy) const {
        auto it = terms_.find({dx, dy});
        return it == terms_.end() ? CycNum::zero(order_) : it->second;
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    std::string str(const char* xname = "a", const char* yname = "b") const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first) os << " + ";
            os << "(" << c.str() << ")";
            if (k.first) os << "*" << xname << (k.first > 1 ? "^" + std::to_string(k.first) : "");
            if (k.second) os << "*" << yname << (k.second > 1 ? "^" + std::to_string(k.second) : "");
            first = false;
        }
        return os.str();
    }

  private:
    int order_;
    std::map<Key, CycNum> terms_;
};

// The two domain readings of BiPoly.
using ParamPoly = BiPoly;    // variables a, b (evaluation parameters)
using LaurentPoly = BiPoly;  // variables u^-1, v^-1 (or u, v after clearing)

}  // namespace yangian
