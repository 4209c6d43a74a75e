#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "mckay/errors.hpp"

namespace mckay {

// Exact rational scalar. GMP's mpq_class already maintains the two
// invariants we need (lowest terms, positive denominator) as long as
// every value is canonicalized on construction; arithmetic preserves
// canonical form.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw semantic_error("division by zero");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// "p" when the denominator is 1, "p/q" otherwise.
std::string rational_to_string(const Rational& q);

// Accepts "p", "-p", "p/q". Throws a parse error on anything else.
Rational rational_from_string(std::string_view s);

}  // namespace mckay
