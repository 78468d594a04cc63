#include "coxroots/polynomial.hpp"

#include <map>
#include <mutex>

#include "coxroots/errors.hpp"

namespace coxroots {

void Poly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Poly poly_from(std::vector<Rat> coeffs) {
    Poly p{std::move(coeffs)};
    p.normalize();
    return p;
}

Poly poly_add(const Poly& a, const Poly& b) {
    std::vector<Rat> c(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) c[i] += b.c[i];
    return poly_from(std::move(c));
}

Poly poly_sub(const Poly& a, const Poly& b) {
    std::vector<Rat> c(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) c[i] -= b.c[i];
    return poly_from(std::move(c));
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> c(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
    return poly_from(std::move(c));
}

Poly poly_scale(const Poly& a, const Rat& s) {
    if (s == 0) return {};
    Poly r = a;
    for (auto& x : r.c) x *= s;
    return r;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    Poly rem = a;
    std::vector<Rat> q;
    if (a.degree() >= b.degree()) q.assign(a.degree() - b.degree() + 1, Rat(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const int shift = rem.degree() - b.degree();
        Rat f = rem.leading() / b.leading();
        q[shift] = f;
        for (size_t i = 0; i < b.c.size(); ++i) rem.c[shift + i] -= f * b.c[i];
        rem.normalize();
    }
    return {poly_from(std::move(q)), rem};
}

Rat poly_eval(const Poly& p, const Rat& x) {
    Rat v(0);
    for (size_t i = p.c.size(); i-- > 0;) v = v * x + p.c[i];
    return v;
}

unsigned long totient(unsigned long n) {
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

Poly cyclotomic(unsigned n) {
    if (n == 0) throw ValidationError("cyclotomic index must be positive");
    static std::mutex cache_mutex;
    static std::map<unsigned, Poly> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    // x^n - 1
    std::vector<Rat> xn(n + 1, Rat(0));
    xn[0] = -1;
    xn[n] = 1;
    Poly acc = poly_from(std::move(xn));
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto [q, r] = poly_divmod(acc, cyclotomic(d));
        if (!r.is_zero()) throw InvariantError("cyclotomic division left a remainder");
        acc = std::move(q);
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(n, std::move(acc)).first->second;
}

Poly theta_minimal_polynomial(unsigned N) {
    if (N == 0) throw ValidationError("field modulus must be positive");
    if (N == 1) return poly_from({Rat(2), Rat(1)});  // theta = -2
    const Poly phi = cyclotomic(2 * N);
    const int deg = phi.degree();
    if (deg % 2 != 0) throw InvariantError("cyclotomic polynomial of odd degree");
    const int m = deg / 2;
    for (int k = 0; k <= deg; ++k)
        if (phi.c[k] != phi.c[deg - k])
            throw InvariantError("cyclotomic polynomial not palindromic");
    // Phi(x) / x^m = a_m + sum_k a_{m+k} (x^k + x^-k), and x^k + x^-k = P_k(y)
    // with P_0 = 2, P_1 = y, P_k = y P_{k-1} - P_{k-2}.
    Poly pk_prev = poly_from({Rat(2)});
    Poly pk = poly_from({Rat(0), Rat(1)});
    Poly psi = poly_scale(pk_prev, phi.c[m] / 2);  // a_m * 1  (P_0 / 2)
    for (int k = 1; k <= m; ++k) {
        psi = poly_add(psi, poly_scale(pk, phi.c[m + k]));
        Poly next = poly_sub(poly_mul(poly_from({Rat(0), Rat(1)}), pk), pk_prev);
        pk_prev = std::move(pk);
        pk = std::move(next);
    }
    if (psi.degree() != m || psi.leading() != 1)
        throw InvariantError("halved cyclotomic polynomial is not monic of half degree");
    return psi;
}

}  // namespace coxroots
