#include "doctest.h"

#include <random>

#include "wga/intpoly.hpp"
#include "wga/laurent.hpp"
#include "wga/numberfield.hpp"

using namespace wga;

TEST_CASE("rationals are canonical") {
    Rational a = rational(2, 4);
    CHECK(a.get_num() == 1);
    CHECK(a.get_den() == 2);
    CHECK(rational_from_string("-6/8") == rational(-3, 4));
    CHECK(denominator_is_power_of_two(rational(5, 8)));
    CHECK(denominator_is_power_of_two(rational(7, 1)));
    CHECK(!denominator_is_power_of_two(rational(1, 3)));
    CHECK_THROWS_AS(rational_inverse(Rational(0)), division_by_zero_error);
}

TEST_CASE("tau recursion base cases and known values") {
    CHECK(tau_poly(-1).is_zero());
    CHECK(tau_poly(0) == IntPoly::constant(1));
    CHECK(tau_poly(1) == IntPoly::variable());
    // tau_3 = T^3 - 2T
    CHECK(tau_poly(3) == IntPoly({mpz_class(0), mpz_class(-2), mpz_class(0), mpz_class(1)}));
    // tau_4 = T^4 - 3T^2 + 1
    CHECK(tau_poly(4) ==
          IntPoly({mpz_class(1), mpz_class(0), mpz_class(-3), mpz_class(0), mpz_class(1)}));
}

TEST_CASE("tau parity and degree") {
    for (int r = 0; r <= 20; ++r) {
        IntPoly t = tau_poly(r);
        CHECK(t.degree() == r);
        CHECK(t.leading() == 1);
        IntPoly neg = t.negate_variable();
        CHECK(neg == (r % 2 == 0 ? t : -t));
    }
}

TEST_CASE("tau product form over the splitting field") {
    // tau_r(x) = prod_{a=1..r} (x - 2cos(a pi/(r+1))), checked exactly in
    // Q(2cos(pi/(r+1)))[x] by expanding the product.
    for (int r = 1; r <= 8; ++r) {
        int M = (r + 1 >= 3) ? r + 1 : 2 * (r + 1);
        FieldCtx ctx = field_context(M);
        std::vector<NumberFieldElem> prod{NumberFieldElem::one(ctx)};  // coefficients, low to high
        for (int a = 1; a <= r; ++a) {
            NumberFieldElem root = two_cos(ctx, a * (M / (r + 1)));
            std::vector<NumberFieldElem> next(prod.size() + 1, NumberFieldElem::zero(ctx));
            for (size_t i = 0; i < prod.size(); ++i) {
                next[i + 1] = next[i + 1] + prod[i];
                next[i] = next[i] - root * prod[i];
            }
            prod = std::move(next);
        }
        IntPoly t = tau_poly(r);
        REQUIRE(static_cast<int>(prod.size()) == r + 1);
        for (int i = 0; i <= r; ++i)
            CHECK(prod[i] == NumberFieldElem(ctx, Rational(t.coeff(i))));
    }
}

TEST_CASE("tau_tilde matches tau via parity split") {
    CHECK(tau_tilde(0) == IntPoly::constant(1));
    // tau_3 = T^3 - 2T = (T^2 - 2) T -> X - 2
    CHECK(tau_tilde(3) == IntPoly({mpz_class(-2), mpz_class(1)}));
    // tau_4 -> X^2 - 3X + 1
    CHECK(tau_tilde(4) == IntPoly({mpz_class(1), mpz_class(-3), mpz_class(1)}));
    for (int n = 0; n <= 12; ++n) {
        IntPoly tt = tau_tilde(n);
        CHECK(tt.degree() == n / 2);
        CHECK(tt.leading() == 1);
        // substitute X = T^2 and compare against tau_n (times T for odd n)
        IntPoly x2 = IntPoly::monomial(2);
        IntPoly lhs = IntPoly::constant(0);
        for (int i = tt.degree(); i >= 0; --i)
            lhs = lhs * x2 + IntPoly::constant(0) + IntPoly({tt.coeff(i)});
        if (n % 2 == 1) lhs = lhs * IntPoly::variable();
        CHECK(lhs == tau_poly(n));
    }
}

TEST_CASE("minimal polynomials of 2cos(pi/m)") {
    CHECK(minimal_cos_polynomial(3) == IntPoly({mpz_class(-1), mpz_class(1)}));  // x - 1
    CHECK(minimal_cos_polynomial(4) == IntPoly({mpz_class(-2), mpz_class(0), mpz_class(1)}));
    CHECK(minimal_cos_polynomial(5) == IntPoly({mpz_class(-1), mpz_class(-1), mpz_class(1)}));
    CHECK(minimal_cos_polynomial(6) == IntPoly({mpz_class(-3), mpz_class(0), mpz_class(1)}));
    // m = 7: x^3 - x^2 - 2x + 1
    CHECK(minimal_cos_polynomial(7) ==
          IntPoly({mpz_class(1), mpz_class(-2), mpz_class(-1), mpz_class(1)}));
    // m = 8: x^4 - 4x^2 + 2
    CHECK(minimal_cos_polynomial(8) ==
          IntPoly({mpz_class(2), mpz_class(0), mpz_class(-4), mpz_class(0), mpz_class(1)}));
    // m = 12: x^4 - 4x^2 + 1
    CHECK(minimal_cos_polynomial(12) ==
          IntPoly({mpz_class(1), mpz_class(0), mpz_class(-4), mpz_class(0), mpz_class(1)}));
    for (int m = 3; m <= 30; ++m) {
        IntPoly p = minimal_cos_polynomial(m);
        CHECK(p.degree() == euler_phi(2 * m) / 2);
        CHECK(IntPoly::divide_exact(tau_poly(m - 1), p).has_value());
        CHECK(std::fabs(p.evaluate_double(2.0L * std::cos(3.14159265358979323846L / m))) < 1e-9L);
    }
}

TEST_CASE("sigma values") {
    CHECK(sigma(1, 3) == NumberFieldElem::one(field_context(3)));
    CHECK(sigma(2, 4).is_zero());
    {
        // sigma_1(5) = (3+sqrt5)/2 = 2 + golden ratio element: in the basis
        // {1, g} with g = 2cos(pi/5), g^2 = g + 1, so sigma_1 = g^2 = 1 + g.
        FieldCtx ctx = field_context(5);
        NumberFieldElem expect(ctx, {Rational(1), Rational(1)});
        CHECK(sigma(1, 5) == expect);
        CHECK(std::abs((double)(sigma(1, 5).approx() - 2.618033988749895)) < 1e-12);
    }
    CHECK_THROWS(sigma(3, 5));
}

TEST_CASE("cosine product identities") {
    // prod_{1 <= a < m/2} (2cos(a pi/m))^2 = 1 (m odd) or m/2 (m even)
    for (int m = 3; m <= 10; ++m) {
        FieldCtx ctx = field_context(m);
        NumberFieldElem prod = NumberFieldElem::one(ctx);
        for (int a = 1; 2 * a < m; ++a) {
            NumberFieldElem c = two_cos(ctx, a);
            prod = prod * c * c;
        }
        CHECK(prod == NumberFieldElem(ctx, m % 2 == 1 ? rational(1) : rational(m, 2)));
    }
    // prod_{a=1}^{m-1} 4sin^2(a pi/m) = m^2, with 4sin^2 = 4 - 4cos^2
    for (int m = 3; m <= 10; ++m) {
        FieldCtx ctx = field_context(m);
        NumberFieldElem prod = NumberFieldElem::one(ctx);
        for (int a = 1; a <= m - 1; ++a) {
            NumberFieldElem c = two_cos(ctx, a);
            prod = prod * (NumberFieldElem(ctx, Rational(4)) - c * c);
        }
        CHECK(prod == NumberFieldElem(ctx, Rational(static_cast<long>(m) * m)));
    }
}

TEST_CASE("sigma differences are invertible") {
    for (int m = 3; m <= 9; ++m) {
        for (int a = 1; 2 * a <= m; ++a)
            for (int b = a + 1; 2 * b <= m; ++b) {
                NumberFieldElem d = sigma(a, m) - sigma(b, m);
                NumberFieldElem inv = d.inverse();  // must not throw
                CHECK(d * inv == NumberFieldElem::one(field_context(m)));
            }
    }
}

TEST_CASE("number field arithmetic is a field") {
    std::mt19937 rng(12345);
    for (int m : {5, 7, 8, 12}) {
        FieldCtx ctx = field_context(m);
        auto rand_elem = [&] {
            std::vector<Rational> c(ctx->deg);
            for (auto& x : c) x = rational(static_cast<long>(rng() % 19) - 9, 1 + rng() % 4);
            return NumberFieldElem(ctx, std::move(c));
        };
        for (int it = 0; it < 25; ++it) {
            NumberFieldElem x = rand_elem(), y = rand_elem(), z = rand_elem();
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            if (!x.is_zero()) CHECK(x * x.inverse() == NumberFieldElem::one(ctx));
        }
        CHECK_THROWS_AS(NumberFieldElem::zero(ctx).inverse(), division_by_zero_error);
    }
    // inverse of 2cos(pi/5) is 2cos(pi/5) - 1 (from g^2 = g + 1)
    FieldCtx ctx = field_context(5);
    NumberFieldElem g = NumberFieldElem::generator(ctx);
    CHECK(g.inverse() == g - NumberFieldElem::one(ctx));
}

TEST_CASE("laurent polynomial arithmetic") {
    FieldCtx ctx = field_context(3);
    Laurent v = laurent_v(ctx, 1), vinv = laurent_v(ctx, -1);
    CHECK((v + vinv) * (v - vinv) == laurent_v(ctx, 2) - laurent_v(ctx, -2));
    CHECK((v * vinv) == laurent_const(ctx, 1));
    CHECK(v.inverse() == vinv);
    CHECK_THROWS_AS((v + vinv).inverse(), non_unit_error);
    Laurent z = Laurent::z(NumberFieldElem::one(ctx));
    CHECK(z == v + vinv);
}
