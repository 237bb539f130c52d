#ifndef RKC_INTEGER_HPP
#define RKC_INTEGER_HPP

#include <string>

#include <gmpxx.h>

namespace rkc {

// Exact integer and rational scalars used everywhere in the library.
using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

// Renders p/q in lowest terms, "p" when q == 1.
inline std::string to_string(const Rational& v)
{
    Rational c = v;
    c.canonicalize();
    return c.get_str();
}

} // namespace rkc

#endif
