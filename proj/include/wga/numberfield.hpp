#pragma once

#include <memory>
#include <mutex>
#include <sstream>

#include "wga/intpoly.hpp"
#include "wga/rational.hpp"

namespace wga {

// Shared context for the real cyclotomic field Q(2cos(pi/m)). Elements are
// coefficient vectors w.r.t. the power basis 1, g, ..., g^(deg-1) where g is
// the field generator 2cos(pi/m) with minimal polynomial `minpoly`.
struct NumberFieldContext {
    int m = 0;
    IntPoly minpoly;
    int deg = 0;
    // reduction[k] = coefficients of g^(deg+k) w.r.t. the power basis.
    std::vector<std::vector<Rational>> reduction;
};

using FieldCtx = std::shared_ptr<const NumberFieldContext>;

inline FieldCtx field_context(int m) {
    static std::map<int, FieldCtx> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    auto ctx = std::make_shared<NumberFieldContext>();
    ctx->m = m;
    ctx->minpoly = minimal_cos_polynomial(m);
    ctx->deg = ctx->minpoly.degree();
    const int d = ctx->deg;
    // g^d = -(p_0 + p_1 g + ... + p_{d-1} g^{d-1}) since the minimal
    // polynomial is monic; higher powers follow by shifting and reducing.
    std::vector<Rational> gd(d);
    for (int i = 0; i < d; ++i) gd[i] = -Rational(ctx->minpoly.coeff(i));
    ctx->reduction.push_back(gd);
    for (int k = 1; k <= d - 2; ++k) {
        const auto& prev = ctx->reduction.back();
        std::vector<Rational> next(d, Rational(0));
        for (int i = 0; i < d - 1; ++i) next[i + 1] += prev[i];
        if (prev[d - 1] != 0)
            for (int i = 0; i < d; ++i) next[i] += prev[d - 1] * gd[i];
        ctx->reduction.push_back(std::move(next));
    }
    FieldCtx out = ctx;
    cache.emplace(m, out);
    return out;
}

class NumberFieldElem {
public:
    NumberFieldElem() = default;
    NumberFieldElem(FieldCtx ctx, std::vector<Rational> coeffs)
        : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
        if (static_cast<int>(c_.size()) != ctx_->deg)
            throw std::invalid_argument("NumberFieldElem: coefficient count != degree");
    }
    NumberFieldElem(FieldCtx ctx, const Rational& r) : ctx_(std::move(ctx)), c_(ctx_->deg, Rational(0)) {
        c_[0] = r;
    }

    static NumberFieldElem zero(const FieldCtx& ctx) { return NumberFieldElem(ctx, Rational(0)); }
    static NumberFieldElem one(const FieldCtx& ctx) { return NumberFieldElem(ctx, Rational(1)); }
    static NumberFieldElem generator(const FieldCtx& ctx) {
        std::vector<Rational> c(ctx->deg, Rational(0));
        if (ctx->deg == 1) {
            // degenerate degree-1 field: g is the rational root of the
            // minimal polynomial x - r.
            c[0] = Rational(-ctx->minpoly.coeff(0));
        } else {
            c[1] = 1;
        }
        return NumberFieldElem(ctx, std::move(c));
    }

    const FieldCtx& ctx() const { return ctx_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    const Rational& rational_value() const {
        if (!is_rational()) throw std::logic_error("rational_value: element not rational");
        return c_[0];
    }

    friend NumberFieldElem operator+(const NumberFieldElem& a, const NumberFieldElem& b) {
        a.check(b);
        std::vector<Rational> c(a.c_);
        for (size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
        return NumberFieldElem(a.ctx_, std::move(c));
    }
    friend NumberFieldElem operator-(const NumberFieldElem& a, const NumberFieldElem& b) {
        a.check(b);
        std::vector<Rational> c(a.c_);
        for (size_t i = 0; i < c.size(); ++i) c[i] -= b.c_[i];
        return NumberFieldElem(a.ctx_, std::move(c));
    }
    NumberFieldElem operator-() const {
        std::vector<Rational> c(c_);
        for (auto& x : c) x = -x;
        return NumberFieldElem(ctx_, std::move(c));
    }
    friend NumberFieldElem operator*(const NumberFieldElem& a, const NumberFieldElem& b) {
        a.check(b);
        const int d = a.ctx_->deg;
        int da = a.top(), db = b.top();
        if (da < 0 || db < 0) return zero(a.ctx_);
        if (da == 0 && db == 0) {
            std::vector<Rational> c(d, Rational(0));
            c[0] = a.c_[0] * b.c_[0];
            return NumberFieldElem(a.ctx_, std::move(c));
        }
        std::vector<Rational> prod(da + db + 1, Rational(0));
        for (int i = 0; i <= da; ++i) {
            if (a.c_[i] == 0) continue;
            for (int j = 0; j <= db; ++j) {
                if (b.c_[j] == 0) continue;
                prod[i + j] += a.c_[i] * b.c_[j];
            }
        }
        std::vector<Rational> c(d, Rational(0));
        for (int i = 0; i < static_cast<int>(prod.size()); ++i) {
            if (prod[i] == 0) continue;
            if (i < d) {
                c[i] += prod[i];
            } else {
                const auto& red = a.ctx_->reduction[i - d];
                for (int j = 0; j < d; ++j) c[j] += prod[i] * red[j];
            }
        }
        return NumberFieldElem(a.ctx_, std::move(c));
    }
    friend NumberFieldElem operator*(const NumberFieldElem& a, const Rational& s) {
        std::vector<Rational> c(a.c_);
        for (auto& x : c) x *= s;
        return NumberFieldElem(a.ctx_, std::move(c));
    }
    friend NumberFieldElem operator*(const Rational& s, const NumberFieldElem& a) { return a * s; }

    // Field inverse via the extended Euclidean algorithm in Q[x] against the
    // (irreducible) minimal polynomial.
    NumberFieldElem inverse() const {
        if (is_zero()) throw division_by_zero_error("inverse of zero field element");
        if (is_rational()) {
            NumberFieldElem r = zero(ctx_);
            r.c_[0] = rational_inverse(c_[0]);
            return r;
        }
        using QP = std::vector<Rational>;  // dense poly over Q
        auto deg = [](const QP& p) {
            int d = static_cast<int>(p.size()) - 1;
            while (d >= 0 && p[d] == 0) --d;
            return d;
        };
        // remainder chain a, b with cofactors sa, sb: x = ?*minpoly + s*elem
        QP a(ctx_->deg + 1);
        for (int i = 0; i <= ctx_->deg; ++i) a[i] = Rational(ctx_->minpoly.coeff(i));
        QP b(c_);
        QP sa{Rational(0)}, sb{Rational(1)};
        while (deg(b) > 0) {
            int db = deg(b);
            while (deg(a) >= db) {
                int da = deg(a);
                Rational f = a[da] / b[db];
                int shift = da - db;
                for (int i = 0; i <= db; ++i) a[i + shift] -= f * b[i];
                if (sa.size() < sb.size() + shift) sa.resize(sb.size() + shift, Rational(0));
                for (size_t i = 0; i < sb.size(); ++i) sa[i + shift] -= f * sb[i];
            }
            std::swap(a, b);
            std::swap(sa, sb);
        }
        if (deg(b) < 0) throw std::logic_error("inverse: gcd not constant (minpoly reducible?)");
        // b is a nonzero constant with sb * elem = b (mod minpoly)
        Rational inv_c = rational_inverse(b[0]);
        std::vector<Rational> c(ctx_->deg, Rational(0));
        for (size_t i = 0; i < sb.size(); ++i) {
            if (sb[i] == 0) continue;
            if (i >= c.size()) throw std::logic_error("inverse: cofactor degree out of range");
            c[i] = sb[i] * inv_c;
        }
        return NumberFieldElem(ctx_, std::move(c));
    }
    friend NumberFieldElem operator/(const NumberFieldElem& a, const NumberFieldElem& b) {
        return a * b.inverse();
    }
    friend bool operator==(const NumberFieldElem& a, const NumberFieldElem& b) {
        a.check(b);
        return a.c_ == b.c_;
    }

    long double approx() const {
        const long double pi = 3.14159265358979323846264338327950288L;
        long double g = 2.0L * std::cos(pi / ctx_->m);
        long double acc = 0;
        for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) acc = acc * g + c_[i].get_d();
        return acc;
    }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (!first) os << " + ";
            os << to_string(c_[i]);
            if (i >= 1) os << "*g";
            if (i >= 2) os << "^" << i;
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }

private:
    void check(const NumberFieldElem& o) const {
        if (!ctx_ || !o.ctx_ || ctx_->m != o.ctx_->m)
            throw context_mismatch_error("number field contexts differ");
    }
    int top() const {
        int t = static_cast<int>(c_.size()) - 1;
        while (t >= 0 && c_[t] == 0) --t;
        return t;
    }

    FieldCtx ctx_;
    std::vector<Rational> c_;
};

// 2cos(k*pi/m) inside Q(2cos(pi/m)), via the recursion D_0 = 2, D_1 = g,
// D_k = g*D_{k-1} - D_{k-2} (so D_k(2cos t) = 2cos(k t)).
inline NumberFieldElem two_cos(const FieldCtx& ctx, long k) {
    if (k < 0) k = -k;
    NumberFieldElem prev = NumberFieldElem(ctx, Rational(2));
    if (k == 0) return prev;
    NumberFieldElem g = NumberFieldElem::generator(ctx);
    NumberFieldElem cur = g;
    for (long i = 2; i <= k; ++i) {
        NumberFieldElem next = g * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// 4cos(a*pi/n)^2 expressed in a context whose m is divisible by n.
inline NumberFieldElem sigma_in(const FieldCtx& ctx, long a, long n) {
    if (ctx->m % n != 0) throw context_mismatch_error("sigma_in: n does not divide field index m");
    NumberFieldElem c = two_cos(ctx, a * (ctx->m / n));
    return c * c;
}

// sigma_a = 4cos(a*pi/m)^2 for 1 <= a <= floor(m/2), as an element of
// Q(2cos(pi/m)).
inline NumberFieldElem sigma(int a, int m) {
    if (a < 1 || 2 * a > m) throw std::invalid_argument("sigma: need 1 <= a <= m/2");
    return sigma_in(field_context(m), a, m);
}

}  // namespace wga
