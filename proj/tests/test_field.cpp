#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "coxroots/errors.hpp"
#include "coxroots/field.hpp"

using namespace coxroots;

namespace {

// Independent numeric oracle for 2cos(k pi / N).
double two_cos(double k, double N) { return 2.0 * std::cos(k * M_PI / N); }

Rat pow2_inv(unsigned bits) { return Rat(1, mpz_class(1) << bits); }

double approx_of(const AlgebraicReal& a) { return a.enclosure(pow2_inv(128)).mid().get_d(); }

// Brute-force totient, oracle for the context degree.
unsigned long phi_brute(unsigned long n) {
    unsigned long count = 0;
    for (unsigned long k = 1; k <= n; ++k) {
        unsigned long a = k, b = n;
        while (b) {
            unsigned long t = a % b;
            a = b;
            b = t;
        }
        if (a == 1) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("context for label 3 is rational with theta = 1") {
    auto ctx = build_field_context({3});
    CHECK(ctx->modulus() == 3);
    CHECK(ctx->degree() == 1);
    // minpoly x - 1
    REQUIRE(ctx->min_poly().c.size() == 2);
    CHECK(ctx->min_poly().c[0] == -1);
    CHECK(ctx->min_poly().c[1] == 1);
    CHECK(AlgebraicReal::theta(ctx).rational_value() == 1);
}

TEST_CASE("context for label 4 is Q(sqrt 2)") {
    auto ctx = build_field_context({4});
    CHECK(ctx->modulus() == 4);
    CHECK(ctx->degree() == 2);
    REQUIRE(ctx->min_poly().c.size() == 3);
    CHECK(ctx->min_poly().c[0] == -2);
    CHECK(ctx->min_poly().c[1] == 0);
    CHECK(ctx->min_poly().c[2] == 1);
    CHECK(approx_of(AlgebraicReal::theta(ctx)) == doctest::Approx(two_cos(1, 4)).epsilon(1e-12));
}

TEST_CASE("context for labels {3,4} has modulus 12 and degree phi(24)/2") {
    auto ctx = build_field_context({3, 4});
    CHECK(ctx->modulus() == 12);
    CHECK(ctx->degree() == phi_brute(24) / 2);
    // theta = 2cos(pi/12) isolated numerically
    CHECK(approx_of(AlgebraicReal::theta(ctx)) == doctest::Approx(two_cos(1, 12)).epsilon(1e-12));
    // the isolating interval excludes the next conjugate 2cos(5 pi/12)
    RatInterval iv = ctx->isolating_interval();
    CHECK(iv.lo.get_d() > two_cos(5, 12));
}

TEST_CASE("degrees follow the totient for larger moduli") {
    for (int extra : {5, 7, 30}) {
        auto ctx = build_field_context({3, 4, extra});
        CHECK(ctx->degree() == phi_brute(2 * ctx->modulus()) / 2);
        CHECK(approx_of(AlgebraicReal::theta(ctx)) ==
              doctest::Approx(two_cos(1, ctx->modulus())).epsilon(1e-12));
    }
}

TEST_CASE("labels below 3 are rejected") {
    CHECK_THROWS_AS(build_field_context({2}), ValidationError);
    CHECK_THROWS_AS(build_field_context({3, 1}), ValidationError);
}

TEST_CASE("embedded form values") {
    auto ctx = build_field_context({3, 4});
    CHECK(embed_minus_cos(2, ctx).is_zero());
    CHECK(embed_minus_cos(label_infinity, ctx).rational_value() == -1);
    CHECK(embed_minus_cos(3, ctx).rational_value() == Rat(-1, 2));
    for (int m : {3, 4, 6, 12}) {
        AlgebraicReal e = embed_minus_cos(m, ctx);
        CHECK(approx_of(e) == doctest::Approx(-std::cos(M_PI / m)).epsilon(1e-12));
    }
    // 5 does not divide 12
    CHECK_THROWS_AS(embed_minus_cos(5, ctx), ContextMismatchError);
    CHECK_THROWS_AS(embed_minus_cos(1, ctx), ValidationError);
}

TEST_CASE("half-angle identity ties embedded cosines together") {
    // 4 cos(pi/m)^2 = 2 + 2cos(2pi/m), with the right side embedded through
    // an independent recurrence index.
    auto ctx = build_field_context({3, 4});
    auto two_cos_k = [&](unsigned k) {
        AlgebraicReal p_prev = AlgebraicReal::from_rat(ctx, Rat(2));
        AlgebraicReal p = AlgebraicReal::theta(ctx);
        for (unsigned i = 1; i < k; ++i) {
            AlgebraicReal next = AlgebraicReal::theta(ctx) * p - p_prev;
            p_prev = p;
            p = next;
        }
        return k == 0 ? p_prev : p;
    };
    for (int m : {3, 4, 6, 12}) {
        AlgebraicReal lhs = embed_minus_cos(m, ctx) * embed_minus_cos(m, ctx) *
                            AlgebraicReal::from_rat(ctx, Rat(4));
        AlgebraicReal rhs = AlgebraicReal::from_rat(ctx, Rat(2)) + two_cos_k(2 * 12 / m);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("exact arithmetic basics") {
    auto ctx = build_field_context({4});
    AlgebraicReal t = AlgebraicReal::theta(ctx);
    CHECK((t * t).rational_value() == 2);
    AlgebraicReal a = t + AlgebraicReal::from_rat(ctx, Rat(3, 7));
    CHECK(a + AlgebraicReal::zero(ctx) == a);
    AlgebraicReal half = AlgebraicReal::from_rat(ctx, Rat(1, 2));
    CHECK((half / half) == AlgebraicReal::one(ctx));
    CHECK((a / a) == AlgebraicReal::one(ctx));
    CHECK_THROWS_AS(a / AlgebraicReal::zero(ctx), DivisionByZeroError);

    auto other = build_field_context({3});
    CHECK_THROWS_AS(a + AlgebraicReal::theta(other), ContextMismatchError);
}

TEST_CASE("sign is exact and total") {
    auto ctx = build_field_context({4});
    CHECK(AlgebraicReal::zero(ctx).sign() == Sign::zero);
    AlgebraicReal t = AlgebraicReal::theta(ctx);
    // 2cos(pi/4) - 1 > 0, numerically about 0.4142
    CHECK((t - AlgebraicReal::one(ctx)).sign() == Sign::positive);
    CHECK(embed_minus_cos(3, build_field_context({3})).sign() == Sign::negative);
    // tiny but nonzero: theta^2 - 2 + 1/2^80
    AlgebraicReal tiny = t * t - AlgebraicReal::from_rat(ctx, Rat(2) - pow2_inv(80));
    CHECK(tiny.sign() == Sign::positive);
    CHECK((-tiny).sign() == Sign::negative);
}

TEST_CASE("sign agrees with zero test for random elements") {
    auto ctx = build_field_context({3, 4});
    std::mt19937_64 rng(20240517);
    std::uniform_int_distribution<int> num(-12, 12), den(1, 9);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Rat> coeffs;
        for (unsigned i = 0; i < ctx->degree(); ++i)
            coeffs.emplace_back(num(rng), den(rng));
        AlgebraicReal a(ctx, coeffs);
        CHECK((a.sign() == Sign::zero) == a.is_zero());
        if (!a.is_zero()) {
            RatInterval enc = a.enclosure(pow2_inv(200));
            if (!enc.contains_zero())
                CHECK((a.sign() == Sign::positive) == (rat_sign(enc.lo) > 0));
        }
    }
}

TEST_CASE("products match interval evaluation") {
    auto ctx = build_field_context({3, 4});
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
    const Rat eps = pow2_inv(200);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Rat> ca, cb;
        for (unsigned i = 0; i < ctx->degree(); ++i) {
            ca.emplace_back(num(rng), den(rng));
            cb.emplace_back(num(rng), den(rng));
        }
        AlgebraicReal a(ctx, ca), b(ctx, cb);
        RatInterval ia = a.enclosure(eps), ib = b.enclosure(eps);
        RatInterval prod = interval_mul(ia, ib);
        RatInterval exact = (a * b).enclosure(eps);
        // the exact product reduced mod the minimal polynomial must land in
        // the numeric product interval (floats within 1e-9 follows a fortiori)
        CHECK(exact.lo <= prod.hi);
        CHECK(prod.lo <= exact.hi);
        CHECK(std::abs(Rat(exact.mid() - prod.mid()).get_d()) < 1e-9);
    }
}

TEST_CASE("coefficient order is a strict total order") {
    auto ctx = build_field_context({4});
    AlgebraicReal t = AlgebraicReal::theta(ctx);
    AlgebraicReal one = AlgebraicReal::one(ctx);
    CHECK(AlgebraicReal::cmp_coeffs(one, t) != 0);
    CHECK(AlgebraicReal::cmp_coeffs(one, t) == -AlgebraicReal::cmp_coeffs(t, one));
    CHECK(AlgebraicReal::cmp_coeffs(t, t) == 0);
}
