#ifndef COXROOTS_POLYNOMIAL_HPP
#define COXROOTS_POLYNOMIAL_HPP

#include <vector>

#include "coxroots/rational.hpp"

namespace coxroots {

// Dense univariate polynomial over Q, coefficients low degree first,
// normalized so that the leading coefficient is nonzero (empty = zero).
struct Poly {
    std::vector<Rat> c;

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Rat& leading() const { return c.back(); }

    void normalize();
};

Poly poly_from(std::vector<Rat> coeffs);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Rat& s);
// Exact division with remainder; b must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Rat poly_eval(const Poly& p, const Rat& x);

// Cyclotomic polynomial Phi_n, integer coefficients, computed by the
// recursive division x^n - 1 = prod_{d|n} Phi_d.
Poly cyclotomic(unsigned n);

// Minimal polynomial of theta = 2cos(pi/N) over Q, monic with integer
// coefficients. For N >= 2 it is obtained from Phi_{2N}(x) through the
// palindromic substitution y = x + 1/x; for N = 1, theta = -2.
Poly theta_minimal_polynomial(unsigned N);

// Euler totient.
unsigned long totient(unsigned long n);

}  // namespace coxroots

#endif
