#ifndef COXROOTS_RATIONAL_HPP
#define COXROOTS_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace coxroots {

// Arbitrary-precision rational; GMP keeps values canonicalized, so
// equality and ordering are exact.
using Rat = mpq_class;

inline int rat_sign(const Rat& r) { return sgn(r); }

// "p" for integers, "p/q" otherwise.
std::string rat_to_string(const Rat& r);

// Accepts "p" and "p/q"; throws ValidationError on anything else.
Rat rat_from_string(const std::string& s);

}  // namespace coxroots

#endif
