#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace finsum {

// Exact arithmetic everywhere: sparse generator sequences grow like (2k)^n,
// so fixed-width integers are not an option.
using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_decimal(const BigInt& x) { return x.get_str(10); }

// Canonical "p/q" form; whole numbers render without the "/1".
inline std::string to_fraction(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str(10);
}

// Parses a decimal integer string, rejecting anything mpz would silently
// tolerate (empty strings, whitespace, hex prefixes).
BigInt parse_decimal(const std::string& text);

Rational parse_fraction(const std::string& text);

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// x^e for small non-negative exponents.
inline BigInt big_pow(const BigInt& x, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), e);
    return r;
}

std::vector<std::string> to_decimal_list(const std::vector<BigInt>& xs);

}  // namespace finsum
