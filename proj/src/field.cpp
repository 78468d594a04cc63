#include "coxroots/field.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "coxroots/errors.hpp"

namespace coxroots {

std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << r.get_num();
    if (r.get_den() != 1) os << "/" << r.get_den();
    return os.str();
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw ValidationError("empty rational literal");
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ValidationError("bad rational literal: '" + s + "'");
    }
}

RatInterval interval_add(const RatInterval& a, const RatInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

RatInterval interval_sub(const RatInterval& a, const RatInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
}

RatInterval interval_mul(const RatInterval& a, const RatInterval& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

RatInterval interval_div(const RatInterval& a, const RatInterval& b) {
    if (b.contains_zero()) throw DivisionByZeroError("interval division by interval containing zero");
    RatInterval inv{Rat(1) / b.hi, Rat(1) / b.lo};
    return interval_mul(a, inv);
}

namespace {

RatInterval horner_interval(const std::vector<Rat>& coeffs, const RatInterval& x) {
    RatInterval acc{Rat(0), Rat(0)};
    for (size_t i = coeffs.size(); i-- > 0;) {
        acc = interval_mul(acc, x);
        acc.lo += coeffs[i];
        acc.hi += coeffs[i];
    }
    return acc;
}

}  // namespace

std::shared_ptr<const FieldContext> FieldContext::create(const std::set<int>& finite_labels) {
    for (int m : finite_labels)
        if (m < 3) throw ValidationError("invalid label " + std::to_string(m) + ": finite field labels must be >= 3");
    unsigned long N = 1;
    for (int m : finite_labels) N = std::lcm(N, static_cast<unsigned long>(m));

    auto ctx = std::shared_ptr<FieldContext>(new FieldContext());
    ctx->n_ = static_cast<unsigned>(N);
    ctx->minpoly_ = theta_minimal_polynomial(ctx->n_);
    ctx->d_ = static_cast<unsigned>(ctx->minpoly_.degree());
    if (ctx->n_ >= 2 && ctx->d_ != totient(2 * N) / 2)
        throw InvariantError("field degree disagrees with totient");

    if (ctx->d_ == 1) {
        // theta is rational: the exact root of the linear minimal polynomial.
        Rat theta = -ctx->minpoly_.c[0];
        ctx->interval_ = {theta, theta};
        return ctx;
    }

    // theta = 2cos(pi/N) is the largest real root; every other conjugate is
    // 2cos(j pi/N) for some odd j >= 3, hence <= 2cos(3 pi/N). Any rational
    // strictly between the two top conjugates isolates theta in (lo, 2].
    const double c1 = 2.0 * std::cos(M_PI / static_cast<double>(N));
    const double c3 = 2.0 * std::cos(3.0 * M_PI / static_cast<double>(N));
    Rat lo(Rat((c1 + c3) / 2.0));
    Rat hi(2);
    if (rat_sign(poly_eval(ctx->minpoly_, lo)) >= 0 || rat_sign(poly_eval(ctx->minpoly_, hi)) <= 0)
        throw InvariantError("isolating interval for theta failed its sign certificate");
    ctx->interval_ = {lo, hi};
    ctx->refine_locked(Rat(1, mpz_class(1) << 64));
    return ctx;
}

RatInterval FieldContext::isolating_interval() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return interval_;
}

void FieldContext::refine_locked(const Rat& eps) const {
    // Bisection keeps minpoly(lo) < 0 < minpoly(hi), so theta stays inside.
    while (interval_.width() > eps) {
        Rat mid = interval_.mid();
        int s = rat_sign(poly_eval(minpoly_, mid));
        if (s == 0) {  // rational root: cannot happen for an irreducible d >= 2
            interval_ = {mid, mid};
            return;
        }
        if (s < 0)
            interval_.lo = mid;
        else
            interval_.hi = mid;
    }
}

RatInterval FieldContext::theta_interval(const Rat& eps) const {
    std::lock_guard<std::mutex> lock(mutex_);
    if (d_ > 1) refine_locked(eps);
    return interval_;
}

double FieldContext::theta_approx() const {
    return theta_interval(Rat(1, mpz_class(1) << 64)).mid().get_d();
}

AlgebraicReal::AlgebraicReal(FieldContextPtr ctx, std::vector<Rat> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
    const size_t want = ctx_ ? ctx_->degree() : 1;
    if (coeffs_.size() != want) throw InvariantError("field element with wrong coefficient count");
}

AlgebraicReal AlgebraicReal::zero(const FieldContextPtr& ctx) {
    return from_rat(ctx, Rat(0));
}

AlgebraicReal AlgebraicReal::one(const FieldContextPtr& ctx) {
    return from_rat(ctx, Rat(1));
}

AlgebraicReal AlgebraicReal::from_rat(const FieldContextPtr& ctx, const Rat& r) {
    std::vector<Rat> c(ctx ? ctx->degree() : 1, Rat(0));
    c[0] = r;
    return AlgebraicReal(ctx, std::move(c));
}

AlgebraicReal AlgebraicReal::theta(const FieldContextPtr& ctx) {
    if (!ctx) throw ContextMismatchError("theta requires a field context");
    if (ctx->degree() == 1) {
        // theta itself is rational here (e.g. N = 1 or 3).
        return from_rat(ctx, -ctx->min_poly().c[0]);
    }
    std::vector<Rat> c(ctx->degree(), Rat(0));
    c[1] = 1;
    return AlgebraicReal(ctx, std::move(c));
}

bool AlgebraicReal::is_zero() const {
    for (const auto& x : coeffs_)
        if (x != 0) return false;
    return true;
}

bool AlgebraicReal::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

const Rat& AlgebraicReal::rational_value() const {
    if (!is_rational()) throw InvariantError("rational_value() on an irrational element");
    return coeffs_[0];
}

const FieldContextPtr& AlgebraicReal::join_contexts(const AlgebraicReal& a, const AlgebraicReal& b) {
    if (!a.ctx_) return b.ctx_;
    if (!b.ctx_) return a.ctx_;
    if (a.ctx_ != b.ctx_) throw ContextMismatchError("field elements from different contexts");
    return a.ctx_;
}

namespace {

std::vector<Rat> lift_coeffs(const AlgebraicReal& a, size_t d) {
    std::vector<Rat> c(d, Rat(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i) c[i] = a.coeffs()[i];
    return c;
}

}  // namespace

AlgebraicReal AlgebraicReal::operator-() const {
    AlgebraicReal r = *this;
    for (auto& x : r.coeffs_) x = -x;
    return r;
}

AlgebraicReal AlgebraicReal::operator+(const AlgebraicReal& o) const {
    const FieldContextPtr& ctx = join_contexts(*this, o);
    const size_t d = ctx ? ctx->degree() : 1;
    std::vector<Rat> c = lift_coeffs(*this, d);
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return AlgebraicReal(ctx, std::move(c));
}

AlgebraicReal AlgebraicReal::operator-(const AlgebraicReal& o) const {
    const FieldContextPtr& ctx = join_contexts(*this, o);
    const size_t d = ctx ? ctx->degree() : 1;
    std::vector<Rat> c = lift_coeffs(*this, d);
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
    return AlgebraicReal(ctx, std::move(c));
}

AlgebraicReal AlgebraicReal::operator*(const AlgebraicReal& o) const {
    const FieldContextPtr& ctx = join_contexts(*this, o);
    const size_t d = ctx ? ctx->degree() : 1;
    std::vector<Rat> a = lift_coeffs(*this, d);
    std::vector<Rat> b = lift_coeffs(o, d);
    std::vector<Rat> prod(2 * d - 1, Rat(0));
    for (size_t i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < d; ++j) {
            if (b[j] == 0) continue;
            prod[i + j] += a[i] * b[j];
        }
    }
    if (ctx) {
        const auto& m = ctx->min_poly().c;  // monic, degree d
        for (size_t k = prod.size(); k-- > d;) {
            if (prod[k] == 0) continue;
            Rat lead = prod[k];
            prod[k] = 0;
            for (size_t j = 0; j < d; ++j) prod[k - d + j] -= lead * m[j];
        }
    }
    prod.resize(d);
    return AlgebraicReal(ctx, std::move(prod));
}

AlgebraicReal AlgebraicReal::operator/(const AlgebraicReal& o) const {
    if (o.is_zero()) throw DivisionByZeroError("division by zero field element");
    const FieldContextPtr& ctx = join_contexts(*this, o);
    const size_t d = ctx ? ctx->degree() : 1;
    if (d == 1) return AlgebraicReal(ctx, {coeffs_[0] / o.coeffs_[0]});
    // Inverse by the extended Euclidean algorithm in Q[x] mod the minimal
    // polynomial; gcd is 1 because the minimal polynomial is irreducible.
    Poly r0 = ctx->min_poly();
    Poly r1 = poly_from(lift_coeffs(o, d));
    Poly t0{};                      // coefficient of o in r0
    Poly t1 = poly_from({Rat(1)});  // coefficient of o in r1
    while (!(r1.degree() <= 0)) {
        auto [q, r] = poly_divmod(r0, r1);
        Poly t2 = poly_sub(t0, poly_mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r1.is_zero()) throw InvariantError("minimal polynomial is not irreducible");
    Poly inv = poly_scale(t1, Rat(1) / r1.c[0]);
    auto [q, rem] = poly_divmod(inv, ctx->min_poly());
    (void)q;
    std::vector<Rat> c(d, Rat(0));
    for (size_t i = 0; i < rem.c.size(); ++i) c[i] = rem.c[i];
    return *this * AlgebraicReal(ctx, std::move(c));
}

bool AlgebraicReal::operator==(const AlgebraicReal& o) const {
    if (ctx_ && o.ctx_ && ctx_ != o.ctx_)
        throw ContextMismatchError("comparing field elements from different contexts");
    const size_t d = std::max(coeffs_.size(), o.coeffs_.size());
    for (size_t i = 0; i < d; ++i) {
        const Rat& a = i < coeffs_.size() ? coeffs_[i] : Rat(0);
        const Rat& b = i < o.coeffs_.size() ? o.coeffs_[i] : Rat(0);
        if (a != b) return false;
    }
    return true;
}

Sign AlgebraicReal::sign() const {
    if (is_zero()) return Sign::zero;
    if (!ctx_ || ctx_->degree() == 1) {
        // Degree-1 basis: the value is the constant coefficient.
        return rat_sign(coeffs_[0]) > 0 ? Sign::positive : Sign::negative;
    }
    RatInterval x = ctx_->isolating_interval();
    Rat eps = x.width();
    for (int iter = 0; iter < 20000; ++iter) {
        RatInterval v = horner_interval(coeffs_, x);
        if (rat_sign(v.lo) > 0) return Sign::positive;
        if (rat_sign(v.hi) < 0) return Sign::negative;
        eps /= 2;
        x = ctx_->theta_interval(eps);
    }
    throw InvariantError("sign refinement did not terminate");
}

RatInterval AlgebraicReal::enclosure(const Rat& theta_eps) const {
    RatInterval x = ctx_ && ctx_->degree() > 1
                        ? ctx_->theta_interval(theta_eps)
                        : (ctx_ ? ctx_->isolating_interval() : RatInterval{Rat(0), Rat(0)});
    return horner_interval(coeffs_, x);
}

double AlgebraicReal::approx() const {
    return enclosure(Rat(1, mpz_class(1) << 80)).mid().get_d();
}

int AlgebraicReal::cmp_coeffs(const AlgebraicReal& a, const AlgebraicReal& b) {
    const size_t d = std::max(a.coeffs_.size(), b.coeffs_.size());
    for (size_t i = 0; i < d; ++i) {
        const Rat& x = i < a.coeffs_.size() ? a.coeffs_[i] : Rat(0);
        const Rat& y = i < b.coeffs_.size() ? b.coeffs_[i] : Rat(0);
        int c = cmp(x, y);
        if (c != 0) return c;
    }
    return 0;
}

std::string AlgebraicReal::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ";";
        os << rat_to_string(coeffs_[i]);
    }
    os << ")";
    return os.str();
}

FieldContextPtr build_field_context(const std::set<int>& finite_labels) {
    return FieldContext::create(finite_labels);
}

AlgebraicReal embed_minus_cos(int m, const FieldContextPtr& ctx) {
    if (m == label_infinity) return AlgebraicReal::from_rat(ctx, Rat(-1));
    if (m == 2) return AlgebraicReal::zero(ctx);
    if (m < 2) throw ValidationError("bond label must be >= 2 or infinity");
    if (!ctx || ctx->modulus() % static_cast<unsigned>(m) != 0)
        throw ContextMismatchError("label " + std::to_string(m) + " does not divide the field modulus");
    const unsigned k = ctx->modulus() / static_cast<unsigned>(m);
    // P_k(theta) = 2cos(k pi / N)
    AlgebraicReal p_prev = AlgebraicReal::from_rat(ctx, Rat(2));
    AlgebraicReal p = AlgebraicReal::theta(ctx);
    for (unsigned i = 1; i < k; ++i) {
        AlgebraicReal next = AlgebraicReal::theta(ctx) * p - p_prev;
        p_prev = p;
        p = next;
    }
    return -(p * AlgebraicReal::from_rat(ctx, Rat(1, 2)));
}

}  // namespace coxroots
