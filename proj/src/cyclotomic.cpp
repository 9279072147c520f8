#include "yangian/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace yangian {

namespace {

using Poly = std::vector<Rational>;  // dense, constant term first

void strip(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    strip(c);
    return c;
}

// Returns (quotient, remainder); exact rational division by the leading
// coefficient of b.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    Poly q;
    strip(a);
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
    const Rational& lead = b.back();
    while (a.size() >= b.size()) {
        Rational f = a.back() / lead;
        size_t shift = a.size() - b.size();
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        strip(a);
    }
    return {q, a};
}

// Per-order tables: Phi_N, reduced powers of x, reduced powers of omega.
struct CycContext {
    int n = 0;
    int phi = 0;
    Poly min_poly;
    std::vector<std::vector<Rational>> xpow;      // x^k reduced, k in [0, 2*phi-2]
    std::vector<std::vector<Rational>> omega_pow; // w^k reduced, k in [0, n-1]
};

std::shared_ptr<const CycContext> make_context(int n) {
    auto ctx = std::make_shared<CycContext>();
    ctx->n = n;
    ctx->min_poly = cyclotomic_polynomial(n);
    ctx->phi = static_cast<int>(ctx->min_poly.size()) - 1;
    const int phi = ctx->phi;

    // x^{phi} = -(low-order part of Phi), then keep multiplying by x.
    int kmax = std::max(2 * phi - 2, n - 1);
    std::vector<std::vector<Rational>> pow(kmax + 1, std::vector<Rational>(phi, Rational(0)));
    for (int k = 0; k < std::min(phi, kmax + 1); ++k) pow[k][k] = 1;
    for (int k = phi; k <= kmax; ++k) {
        const auto& prev = pow[k - 1];
        std::vector<Rational> cur(phi, Rational(0));
        for (int d = 0; d + 1 < phi; ++d) cur[d + 1] = prev[d];
        const Rational& top = prev[phi - 1];
        if (top != 0)
            for (int d = 0; d < phi; ++d) cur[d] -= top * ctx->min_poly[d];
        pow[k] = std::move(cur);
    }
    ctx->xpow.assign(pow.begin(), pow.begin() + std::max(2 * phi - 1, 1));
    ctx->omega_pow.assign(pow.begin(), pow.begin() + n);
    return ctx;
}

const CycContext& context(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const CycContext>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_context(n)).first;
    return *it->second;
}

}  // namespace

std::vector<Rational> cyclotomic_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
    if (n == 1) return {Rational(-1), Rational(1)};  // x - 1
    Poly num(n + 1, Rational(0));
    num[0] = -1;
    num[n] = 1;  // x^n - 1
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto [q, r] = poly_divmod(num, cyclotomic_polynomial(d));
        if (!r.empty()) throw std::logic_error("cyclotomic division not exact");
        num = std::move(q);
    }
    return num;
}

int euler_phi(int n) { return context(n).phi; }

CycNum::CycNum() : order_(1), c_(1, Rational(0)) {}

CycNum::CycNum(int order, std::vector<Rational> coeffs) : order_(order), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != context(order).phi)
        throw std::invalid_argument("cyclotomic coefficient vector has wrong length");
}

CycNum CycNum::zero(int order) {
    return CycNum(order, std::vector<Rational>(context(order).phi, Rational(0)));
}

CycNum CycNum::one(int order) { return from_rational(order, Rational(1)); }

CycNum CycNum::from_rational(int order, const Rational& r) {
    std::vector<Rational> c(context(order).phi, Rational(0));
    c[0] = r;
    return CycNum(order, std::move(c));
}

CycNum CycNum::omega(int order) { return omega_power(order, 1); }

bool CycNum::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (size_t d = 1; d < c_.size(); ++d)
        if (c_[d] != 0) return false;
    return true;
}

Rational CycNum::rational_value() const {
    if (!is_rational()) throw std::domain_error("cyclotomic value is not rational: " + str());
    return c_[0];
}

CycNum CycNum::lifted(int order) const {
    if (order_ == order) return *this;
    if (order_ == 1) return from_rational(order, c_[0]);
    throw std::invalid_argument("mixing cyclotomic fields of different orders");
}

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
    if (order_ != o.order_) return *this = lifted(std::max(order_, o.order_)) += o.lifted(std::max(order_, o.order_));
    for (size_t d = 0; d < c_.size(); ++d) c_[d] += o.c_[d];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
    if (order_ != o.order_) return *this = lifted(std::max(order_, o.order_)) -= o.lifted(std::max(order_, o.order_));
    for (size_t d = 0; d < c_.size(); ++d) c_[d] -= o.c_[d];
    return *this;
}

CycNum& CycNum::operator*=(const CycNum& o) {
    if (order_ != o.order_) return *this = lifted(std::max(order_, o.order_)) *= o.lifted(std::max(order_, o.order_));
    const auto& ctx = context(order_);
    const int phi = ctx.phi;
    std::vector<Rational> conv(2 * phi - 1, Rational(0));
    for (int i = 0; i < phi; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < phi; ++j) {
            if (o.c_[j] == 0) continue;
            conv[i + j] += c_[i] * o.c_[j];
        }
    }
    std::vector<Rational> red(phi, Rational(0));
    for (int d = 0; d < phi; ++d) red[d] = conv[d];
    for (int k = phi; k < 2 * phi - 1; ++k) {
        if (conv[k] == 0) continue;
        for (int d = 0; d < phi; ++d) red[d] += conv[k] * ctx.xpow[k][d];
    }
    c_ = std::move(red);
    return *this;
}

CycNum CycNum::scaled(const Rational& r) const {
    CycNum out = *this;
    for (auto& x : out.c_) x *= r;
    return out;
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero cyclotomic number");
    if (is_rational()) return from_rational(order_, 1 / c_[0]);
    // Extended Euclid in Q[x]: u*a + v*Phi = g with g a nonzero constant.
    Poly a(c_.begin(), c_.end());
    strip(a);
    Poly b = context(order_).min_poly;
    Poly u0 = {Rational(1)}, u1 = {};
    Poly r0 = a, r1 = b;
    while (!r1.empty()) {
        auto [q, r] = poly_divmod(r0, r1);
        Poly u2 = u0;
        Poly qu = poly_mul(q, u1);
        if (u2.size() < qu.size()) u2.resize(qu.size(), Rational(0));
        for (size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
        strip(u2);
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r0.size() != 1)
        throw std::logic_error("cyclotomic element shares a factor with Phi_N");
    const Rational& g = r0[0];
    std::vector<Rational> inv(context(order_).phi, Rational(0));
    for (size_t i = 0; i < u0.size(); ++i) inv[i] = u0[i] / g;
    return CycNum(order_, std::move(inv));
}

CycNum CycNum::conjugate() const {
    const auto& ctx = context(order_);
    CycNum out = zero(order_);
    for (int d = 0; d < ctx.phi; ++d) {
        if (c_[d] == 0) continue;
        int e = (order_ - d) % order_;
        for (int i = 0; i < ctx.phi; ++i) out.c_[i] += c_[d] * ctx.omega_pow[e][i];
    }
    return out;
}

bool operator==(const CycNum& a, const CycNum& b) {
    if (a.order_ != b.order_) {
        if (a.order_ == 1 || b.order_ == 1) {
            int n = std::max(a.order_, b.order_);
            return a.lifted(n) == b.lifted(n);
        }
        return false;
    }
    return a.c_ == b.c_;
}

std::string CycNum::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t d = 0; d < c_.size(); ++d) {
        if (c_[d] == 0) continue;
        if (!first) os << " + ";
        os << rat_str(c_[d]);
        if (d >= 1) os << "*w" << (d > 1 ? "^" + std::to_string(d) : "");
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

CycNum omega_power(int n, long k) {
    const auto& ctx = context(n);
    long e = k % n;
    if (e < 0) e += n;
    return CycNum(n, ctx.omega_pow[static_cast<size_t>(e)]);
}

CycNum geometric_character_sum(int n, long k) {
    CycNum s = CycNum::zero(n);
    for (long i = 0; i < n; ++i) s += omega_power(n, i * k);
    return s;
}

}  // namespace yangian
