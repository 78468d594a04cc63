#ifndef COXROOTS_FIELD_HPP
#define COXROOTS_FIELD_HPP

#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "coxroots/polynomial.hpp"
#include "coxroots/rational.hpp"

namespace coxroots {

enum class Sign { negative = -1, zero = 0, positive = 1 };

// Closed rational interval; endpoints exact.
struct RatInterval {
    Rat lo, hi;

    bool contains_zero() const { return rat_sign(lo) <= 0 && rat_sign(hi) >= 0; }
    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
};

RatInterval interval_add(const RatInterval& a, const RatInterval& b);
RatInterval interval_sub(const RatInterval& a, const RatInterval& b);
RatInterval interval_mul(const RatInterval& a, const RatInterval& b);
// b must not contain zero.
RatInterval interval_div(const RatInterval& a, const RatInterval& b);

// The real cyclotomic ground field Q(theta), theta = 2cos(pi/N).
//
// All bond labels m >= 3 of one Coxeter system share a single context with
// N = lcm of the finite labels, so every form entry -cos(pi/m) and every
// root coordinate is a fixed-length rational vector in the basis
// 1, theta, ..., theta^(d-1). The context keeps an isolating interval for
// theta that separates it from all the other real roots of the minimal
// polynomial; the interval only ever shrinks.
class FieldContext {
public:
    // labels: the finite m >= 3 appearing in the Coxeter matrix. Empty set
    // gives N = 1 (the rational field). Labels < 3 are rejected.
    static std::shared_ptr<const FieldContext> create(const std::set<int>& finite_labels);

    unsigned modulus() const { return n_; }  // N
    unsigned degree() const { return d_; }
    const Poly& min_poly() const { return minpoly_; }

    // Current isolating interval (thread-safe snapshot).
    RatInterval isolating_interval() const;
    // Shrinks the shared interval until width <= eps and returns it.
    RatInterval theta_interval(const Rat& eps) const;

    // theta as a double, for diagnostics only.
    double theta_approx() const;

private:
    FieldContext() = default;

    unsigned n_ = 1;
    unsigned d_ = 1;
    Poly minpoly_;

    mutable std::mutex mutex_;
    mutable RatInterval interval_;

    void refine_locked(const Rat& eps) const;
};

using FieldContextPtr = std::shared_ptr<const FieldContext>;

// An exact element of Q(theta): rational coordinates in the power basis.
// A null context is the rational field itself (degree 1); mixed-context
// arithmetic promotes rationals and rejects everything else.
class AlgebraicReal {
public:
    AlgebraicReal() : coeffs_(1, Rat(0)) {}
    explicit AlgebraicReal(Rat r) : coeffs_{std::move(r)} {}
    AlgebraicReal(FieldContextPtr ctx, std::vector<Rat> coeffs);

    static AlgebraicReal zero(const FieldContextPtr& ctx);
    static AlgebraicReal one(const FieldContextPtr& ctx);
    static AlgebraicReal from_rat(const FieldContextPtr& ctx, const Rat& r);
    static AlgebraicReal theta(const FieldContextPtr& ctx);

    const FieldContextPtr& context() const { return ctx_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    // Only valid when is_rational().
    const Rat& rational_value() const;

    AlgebraicReal operator-() const;
    AlgebraicReal operator+(const AlgebraicReal& o) const;
    AlgebraicReal operator-(const AlgebraicReal& o) const;
    AlgebraicReal operator*(const AlgebraicReal& o) const;
    AlgebraicReal operator/(const AlgebraicReal& o) const;
    AlgebraicReal& operator+=(const AlgebraicReal& o) { return *this = *this + o; }
    AlgebraicReal& operator-=(const AlgebraicReal& o) { return *this = *this - o; }
    AlgebraicReal& operator*=(const AlgebraicReal& o) { return *this = *this * o; }

    // Exact: the power-basis representation is canonical.
    bool operator==(const AlgebraicReal& o) const;
    bool operator!=(const AlgebraicReal& o) const { return !(*this == o); }

    // Exact real sign, by interval evaluation with on-demand refinement of
    // the isolating interval. Total: terminates for every element because a
    // nonzero element has nonzero value at theta.
    Sign sign() const;
    bool is_positive() const { return sign() == Sign::positive; }
    bool is_negative() const { return sign() == Sign::negative; }

    // Enclosure of the real value, evaluated after refining theta to
    // width <= theta_eps.
    RatInterval enclosure(const Rat& theta_eps) const;

    // Diagnostic double approximation (never used in the exact path).
    double approx() const;

    // Deterministic container/report order: lexicographic on the rational
    // coefficient tuple. Unrelated to the real-number order.
    static int cmp_coeffs(const AlgebraicReal& a, const AlgebraicReal& b);

    std::string to_string() const;

private:
    FieldContextPtr ctx_;           // null = plain rational
    std::vector<Rat> coeffs_;       // size = ctx ? ctx->degree() : 1

    static const FieldContextPtr& join_contexts(const AlgebraicReal& a, const AlgebraicReal& b);
};

// Builds the shared field for a set of finite labels (m >= 3 each).
// N = lcm(labels), N = 1 for the empty set.
FieldContextPtr build_field_context(const std::set<int>& finite_labels);

// The form entry -cos(pi/m) as an exact field element. m == 2 gives 0 and
// m == label_infinity gives -1 without touching the field; finite m >= 3
// must divide N. Uses 2cos(k pi/N) = P_k(theta) with the Chebyshev-style
// recurrence P_0 = 2, P_1 = theta, P_k = theta P_{k-1} - P_{k-2}.
AlgebraicReal embed_minus_cos(int m, const FieldContextPtr& ctx);

// Coxeter-matrix entry value for "infinity".
inline constexpr int label_infinity = -1;

}  // namespace coxroots

#endif
