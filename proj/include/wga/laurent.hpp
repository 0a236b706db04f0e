#pragma once

#include <map>

#include "wga/numberfield.hpp"

namespace wga {

// Sparse Laurent polynomial in the indeterminate v; the exponent map never
// stores zero coefficients. The coefficient ring C needs +, -, *, is_zero.
template <class C>
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly from_const(const C& c) {
        LaurentPoly p;
        p.set(0, c);
        return p;
    }
    static LaurentPoly v_power(const C& one, int k) {
        LaurentPoly p;
        p.set(k, one);
        return p;
    }
    // z = v + v^-1
    static LaurentPoly z(const C& one) {
        LaurentPoly p;
        p.set(1, one);
        p.set(-1, one);
        return p;
    }

    bool is_zero() const { return t_.empty(); }
    const std::map<int, C>& terms() const { return t_; }
    C coeff(int k, const C& zero) const {
        auto it = t_.find(k);
        return it == t_.end() ? zero : it->second;
    }
    void set(int k, const C& c) {
        if (c.is_zero()) t_.erase(k);
        else t_[k] = c;
    }
    void add_term(int k, const C& c) {
        auto it = t_.find(k);
        if (it == t_.end()) {
            if (!c.is_zero()) t_.emplace(k, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r(a);
        for (const auto& [k, c] : b.t_) r.add_term(k, c);
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r(a);
        for (const auto& [k, c] : b.t_) r.add_term(k, -c);
        return r;
    }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [k, c] : t_) r.t_.emplace(k, -c);
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [k1, c1] : a.t_)
            for (const auto& [k2, c2] : b.t_) r.add_term(k1 + k2, c1 * c2);
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const C& s) {
        LaurentPoly r;
        for (const auto& [k, c] : a.t_) {
            C p = c * s;
            if (!p.is_zero()) r.t_.emplace(k, p);
        }
        return r;
    }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.t_ == b.t_; }

    // Defined only for monomials c*v^k with invertible c.
    LaurentPoly inverse() const {
        if (t_.size() != 1) throw non_unit_error("Laurent inverse: not a monomial");
        const auto& [k, c] = *t_.begin();
        LaurentPoly r;
        r.t_.emplace(-k, c.inverse());
        return r;
    }

    std::string str() const {
        if (t_.empty()) return "0";
        std::string s;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            if (!s.empty()) s += " + ";
            s += "(" + it->second.str() + ")";
            if (it->first != 0) s += "*v^" + std::to_string(it->first);
        }
        return s;
    }

private:
    std::map<int, C> t_;
};

using Laurent = LaurentPoly<NumberFieldElem>;

inline Laurent laurent_const(const FieldCtx& ctx, const Rational& r) {
    return Laurent::from_const(NumberFieldElem(ctx, r));
}
inline Laurent laurent_v(const FieldCtx& ctx, int k = 1) {
    return Laurent::v_power(NumberFieldElem::one(ctx), k);
}
// v - v^-1, the parameter in the quadratic relation T^2 = 1 + (v - v^-1)T.
inline Laurent laurent_quad_param(const FieldCtx& ctx) {
    return laurent_v(ctx, 1) - laurent_v(ctx, -1);
}

}  // namespace wga
