#pragma once

#include <gmpxx.h>

#include <cmath>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <vector>

#include "wga/common.hpp"

namespace wga {

// Dense integer polynomial in one central variable. Coefficient i is the
// coefficient of T^i; the vector carries no trailing zeros.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(long v) { return IntPoly({mpz_class(v)}); }
    static IntPoly variable() { return IntPoly({mpz_class(0), mpz_class(1)}); }
    static IntPoly monomial(int k, long v = 1) {
        std::vector<mpz_class> c(k + 1, mpz_class(0));
        c[k] = v;
        return IntPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const mpz_class& coeff(int i) const {
        static const mpz_class z(0);
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : z;
    }
    const mpz_class& leading() const { return c_.back(); }
    const std::vector<mpz_class>& coeffs() const { return c_; }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return IntPoly(std::move(c));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
        return IntPoly(std::move(c));
    }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1, mpz_class(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return IntPoly(std::move(c));
    }
    IntPoly operator-() const {
        std::vector<mpz_class> c(c_);
        for (auto& x : c) x = -x;
        return IntPoly(std::move(c));
    }
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    // Substitute -T for T.
    IntPoly negate_variable() const {
        std::vector<mpz_class> c(c_);
        for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
        return IntPoly(std::move(c));
    }

    // Exact division by a monic divisor; nullopt when the remainder is
    // nonzero. Used to certify minimal-polynomial candidates.
    static std::optional<IntPoly> divide_exact(const IntPoly& num, const IntPoly& den) {
        if (den.is_zero() || den.leading() != 1) return std::nullopt;
        if (num.is_zero()) return IntPoly();
        if (num.degree() < den.degree()) return std::nullopt;
        std::vector<mpz_class> rem(num.c_);
        std::vector<mpz_class> quot(num.degree() - den.degree() + 1, mpz_class(0));
        for (int k = num.degree() - den.degree(); k >= 0; --k) {
            mpz_class q = rem[k + den.degree()];
            quot[k] = q;
            if (q == 0) continue;
            for (int i = 0; i <= den.degree(); ++i) rem[k + i] -= q * den.c_[i];
        }
        for (const auto& r : rem)
            if (r != 0) return std::nullopt;
        return IntPoly(std::move(quot));
    }

    // Horner evaluation in any ring; from_int maps an mpz coefficient into
    // the ring (typically scaling the ring unit).
    template <class T, class FromInt>
    T evaluate(const T& x, FromInt from_int) const {
        T acc = from_int(mpz_class(0));
        for (int i = degree(); i >= 0; --i) {
            acc = acc * x;
            if (c_[i] != 0) acc = acc + from_int(c_[i]);
        }
        return acc;
    }

    long double evaluate_double(long double x) const {
        long double acc = 0;
        for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i].get_d();
        return acc;
    }

    std::string str(const std::string& var = "T") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            if (c_[i] == 0) continue;
            mpz_class a = c_[i];
            if (!first) os << (a < 0 ? " - " : " + ");
            else if (a < 0) os << "-";
            mpz_class mag = abs(a);
            if (mag != 1 || i == 0) os << mag.get_str();
            if (i >= 1) os << var;
            if (i >= 2) os << "^" << i;
            first = false;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<mpz_class> c_;
};

// tau_{-1} = 0, tau_0 = 1, tau_r = T*tau_{r-1} - tau_{r-2}. Monic of degree r
// for r >= 0, with tau_r(-T) = (-1)^r tau_r(T); the roots of tau_r are
// 2cos(a*pi/(r+1)), a = 1..r.
inline IntPoly tau_poly(int r) {
    if (r < -1) throw std::invalid_argument("tau_poly: r must be >= -1");
    if (r == -1) return IntPoly::zero();
    IntPoly prev = IntPoly::zero();      // tau_{-1}
    IntPoly cur = IntPoly::constant(1);  // tau_0
    const IntPoly t = IntPoly::variable();
    for (int i = 1; i <= r; ++i) {
        IntPoly next = t * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// The even-variable companion of tau_n: tau_n(X) = tt_n(X^2) for even n and
// tau_n(X) = tt_n(X^2)*X for odd n. Monic of degree ceil(n/2); its roots are
// 4cos(a*pi/(n+1))^2.
inline IntPoly tau_tilde(int n) {
    if (n < 0) throw std::invalid_argument("tau_tilde: n must be >= 0");
    IntPoly t = tau_poly(n);
    int par = n % 2;
    std::vector<mpz_class> c((n - par) / 2 + 1, mpz_class(0));
    for (int j = 0; 2 * j + par <= n; ++j) c[j] = t.coeff(2 * j + par);
    return IntPoly(std::move(c));
}

inline long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace detail {
inline long gcd_long(long a, long b) {
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}
}  // namespace detail

// Minimal polynomial of 2cos(pi/m) over the rationals. The conjugates of
// 2cos(pi/m) are 2cos(k*pi/m) for gcd(k, 2m) = 1, so the monic product over
// those roots is expanded at high precision, rounded to integers, and then
// certified by exact division into tau_{m-1} (whose roots contain every
// conjugate). Degree phi(2m)/2. Results are cached.
inline IntPoly minimal_cos_polynomial(int m) {
    if (m < 3) throw std::invalid_argument("minimal_cos_polynomial: m must be >= 3");
    static std::map<int, IntPoly> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
    }
    const long double pi = 3.14159265358979323846264338327950288L;
    std::vector<long double> roots;
    for (int k = 1; k <= m; ++k)
        if (detail::gcd_long(k, 2L * m) == 1) roots.push_back(2.0L * std::cos(k * pi / m));
    std::vector<long double> poly{1.0L};  // expand prod (x - root)
    for (long double r : roots) {
        std::vector<long double> next(poly.size() + 1, 0.0L);
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= r * poly[i];
        }
        poly = std::move(next);
    }
    std::vector<mpz_class> c(poly.size());
    for (size_t i = 0; i < poly.size(); ++i) {
        long double rounded = std::round(poly[i]);
        if (std::fabs(poly[i] - rounded) > 0.25L)
            throw std::runtime_error("minimal_cos_polynomial: rounding not certain");
        std::ostringstream os;
        os << static_cast<long long>(rounded);
        c[i] = mpz_class(os.str());
    }
    IntPoly candidate{std::move(c)};
    if (candidate.degree() != euler_phi(2L * m) / 2)
        throw std::runtime_error("minimal_cos_polynomial: unexpected degree");
    if (!IntPoly::divide_exact(tau_poly(m - 1), candidate))
        throw std::runtime_error("minimal_cos_polynomial: division certificate failed");
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(m, candidate);
    return candidate;
}

}  // namespace wga
