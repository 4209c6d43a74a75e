#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mckay/rational.hpp"

namespace mckay {

// Dense coefficient vector of the m-th cyclotomic polynomial Phi_m
// (monic, integer coefficients, degree phi(m)). Computed once per
// conductor by dividing x^m - 1 by the Phi_d for proper divisors d,
// then cached. Thread safe.
const std::vector<Integer>& cyclotomic_polynomial(unsigned m);

unsigned euler_phi(unsigned m);

// Element of Q(zeta_m) in the power basis {1, zeta, ..., zeta^(phi(m)-1)}
// reduced modulo Phi_m. Representation is canonical for a fixed
// conductor; equality across conductors lifts both sides into the
// compositum Q(zeta_lcm).
class Cyclotomic {
public:
    Cyclotomic() : conductor_(1), coeffs_(1) {}  // zero
    explicit Cyclotomic(const Rational& q) : conductor_(1), coeffs_{q} {}
    explicit Cyclotomic(long v) : Cyclotomic(Rational(v)) {}

    // zeta_m^k (k taken mod m).
    static Cyclotomic root_of_unity(unsigned m, long k);

    // Sum of c_k * zeta_m^k over the given exponent -> coefficient map;
    // exponents are wrapped mod m, then the sum is reduced mod Phi_m.
    static Cyclotomic make(unsigned m, const std::map<long, Rational>& terms);

    unsigned conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;

    // Constant coefficient if the value lies in Q, error otherwise.
    Rational to_rational() const;

    // Galois conjugation zeta^k -> zeta^(m-k) (complex conjugation).
    Cyclotomic conj() const;

    // Multiplicative inverse via the extended Euclidean algorithm in
    // Q[x]/(Phi_m). Error on zero.
    Cyclotomic inverse() const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& rhs);
    Cyclotomic& operator-=(const Cyclotomic& rhs);
    Cyclotomic& operator*=(const Cyclotomic& rhs);
    Cyclotomic& operator*=(const Rational& scalar);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Rational& s) { return a *= s; }
    friend Cyclotomic operator*(const Rational& s, Cyclotomic a) { return a *= s; }

    bool operator==(const Cyclotomic& rhs) const;
    bool operator!=(const Cyclotomic& rhs) const { return !(*this == rhs); }

    // Same value expressed in Q(zeta_M); M must be a multiple of the
    // current conductor.
    Cyclotomic lifted_to(unsigned M) const;

    // "p/q" for rational values, otherwise "cyc(m; k1:c1, k2:c2, ...)"
    // listing the nonzero reduced coefficients with ascending exponents.
    std::string to_string() const;

    // Parses either a plain rational or the cyc(...) form. Arbitrary
    // exponents are accepted and reduced.
    static Cyclotomic from_string(std::string_view s);

private:
    Cyclotomic(unsigned m, std::vector<Rational> coeffs)
        : conductor_(m), coeffs_(std::move(coeffs)) {}

    static unsigned common_conductor(const Cyclotomic& a, const Cyclotomic& b);

    unsigned conductor_;
    std::vector<Rational> coeffs_;  // size phi(conductor_)
};

}  // namespace mckay
