#pragma once

#include <map>
#include <vector>

#include "mckay/rational.hpp"

namespace mckay {

// Dominant weight of the double cover of U(n); entries are
// half-odd-integers, non-increasing.
struct HighestWeight {
    int n = 0;
    std::vector<Rational> mu;
};

// prod_{i<j} (mu_i - mu_j + j - i)/(j - i), an exact positive integer.
// Error "not dominant" when mu is not non-increasing.
Integer weyl_dim(const HighestWeight& w);

// One Dirac eigenspace on round S^(2n-1): the highest weight family it
// came from, parameters (a, b, r), eigenvalue and multiplicity.
struct SpectrumEntry {
    Rational eigenvalue;
    Integer multiplicity;
    int family = 0;  // 1, 2, 3
    long a = 0, b = 0, r = 0;
    HighestWeight weight;
};

// Enumerates all eigenspaces with |eigenvalue| <= cutoff, deduplicated
// by (weight, eigenvalue). Everything stays exact.
std::vector<SpectrumEntry> dirac_spectrum(int n, const Rational& cutoff);

// eigenvalue -> total multiplicity.
std::map<Rational, Integer> aggregate_spectrum(const std::vector<SpectrumEntry>& entries);

// True iff aggregated multiplicities are invariant under eigenvalue
// negation within the cutoff.
bool spectrum_symmetry(int n, const Rational& cutoff);

}  // namespace mckay
