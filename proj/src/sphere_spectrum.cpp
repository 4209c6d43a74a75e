#include "mckay/sphere_spectrum.hpp"

#include <algorithm>
#include <set>

#include "mckay/errors.hpp"

namespace mckay {

Integer weyl_dim(const HighestWeight& w) {
    const size_t n = w.mu.size();
    if (w.n < 2 || n != static_cast<size_t>(w.n)) throw semantic_error("bad highest weight");
    for (size_t i = 0; i + 1 < n; ++i)
        if (w.mu[i] < w.mu[i + 1]) throw semantic_error("not dominant");

    Rational dim(1);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            long dist = static_cast<long>(j - i);
            dim *= (w.mu[i] - w.mu[j] + Rational(dist)) / Rational(dist);
        }
    if (!is_integer(dim)) throw internal_error("Weyl dimension not integral");
    return dim.get_num();
}

namespace {

const Rational kHalf = make_rational(1, 2);

HighestWeight family_weight(int n, int family, long a, long b, long r) {
    // family 1: (a+1/2, 1/2, ..., 1/2)
    // family 2: (-1/2, ..., -1/2, -b-1/2)
    // family 3: (a+1/2, 1/2 x (n-2-r), -1/2 x r, -b-1/2)
    HighestWeight w;
    w.n = n;
    switch (family) {
        case 1:
            w.mu.assign(static_cast<size_t>(n), kHalf);
            w.mu[0] += Rational(a);
            break;
        case 2:
            w.mu.assign(static_cast<size_t>(n), -kHalf);
            w.mu.back() -= Rational(b);
            break;
        case 3:
            w.mu.push_back(Rational(a) + kHalf);
            for (long i = 0; i < n - 2 - r; ++i) w.mu.push_back(kHalf);
            for (long i = 0; i < r; ++i) w.mu.push_back(-kHalf);
            w.mu.push_back(-Rational(b) - kHalf);
            break;
        default:
            throw internal_error("bad spectrum family");
    }
    return w;
}

}  // namespace

std::vector<SpectrumEntry> dirac_spectrum(int n, const Rational& cutoff) {
    if (n < 2) throw semantic_error("sphere dimension requires n >= 2");
    const Rational lower = make_rational(2 * n - 1, 2);
    if (cutoff < lower) throw semantic_error("cutoff below the spectral gap");

    const int sign_n = (n % 2 == 0) ? 1 : -1;
    std::vector<SpectrumEntry> out;
    std::set<std::pair<std::vector<Rational>, Rational>> seen;

    auto emit = [&](int family, long a, long b, long r, const Rational& lambda) {
        if (abs(lambda) > cutoff) return;
        HighestWeight w = family_weight(n, family, a, b, r);
        if (!seen.insert({w.mu, lambda}).second) return;  // dedup by (weight, eigenvalue)
        SpectrumEntry e;
        e.eigenvalue = lambda;
        e.multiplicity = weyl_dim(w);
        e.family = family;
        e.a = a;
        e.b = b;
        e.r = r;
        e.weight = std::move(w);
        out.push_back(std::move(e));
    };

    // families 1 and 2: eigenvalue magnitude (2n-1+2a)/2
    for (long a = 0;; ++a) {
        Rational lambda = make_rational(2 * n - 1 + 2 * a, 2);
        if (lambda > cutoff) break;
        emit(1, a, 0, 0, Rational(sign_n) * lambda);
        emit(2, 0, a, 0, lambda);
    }

    // family 3: eigenvalues ((-1)^{n+r} +- 2(n+a+b))/2, r in 0..n-2
    for (long r = 0; r <= n - 2; ++r) {
        const int sig = ((n + r) % 2 == 0) ? 1 : -1;
        for (long s = 0;; ++s) {  // s = a + b
            Rational big = Rational(n + s);  // (2(n+a+b))/2
            Rational plus = Rational(sig) * kHalf + big;
            Rational minus = Rational(sig) * kHalf - big;
            if (abs(minus) > cutoff && abs(plus) > cutoff) break;
            for (long a = 0; a <= s; ++a) {
                emit(3, a, s - a, r, plus);
                emit(3, a, s - a, r, minus);
            }
        }
    }

    std::sort(out.begin(), out.end(), [](const SpectrumEntry& x, const SpectrumEntry& y) {
        if (x.eigenvalue != y.eigenvalue) return x.eigenvalue < y.eigenvalue;
        if (x.family != y.family) return x.family < y.family;
        return std::tie(x.a, x.b, x.r) < std::tie(y.a, y.b, y.r);
    });
    return out;
}

std::map<Rational, Integer> aggregate_spectrum(const std::vector<SpectrumEntry>& entries) {
    std::map<Rational, Integer> agg;
    for (const auto& e : entries) agg[e.eigenvalue] += e.multiplicity;
    return agg;
}

bool spectrum_symmetry(int n, const Rational& cutoff) {
    auto agg = aggregate_spectrum(dirac_spectrum(n, cutoff));
    for (const auto& [lambda, mult] : agg) {
        auto it = agg.find(-lambda);
        if (it == agg.end() || it->second != mult) return false;
    }
    return true;
}

}  // namespace mckay
