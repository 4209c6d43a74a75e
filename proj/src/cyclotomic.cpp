#include "mckay/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace mckay {

namespace {

// ---- dense polynomial helpers (coefficient index = exponent) ----

int poly_degree(const std::vector<Rational>& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[static_cast<size_t>(i)] != 0) return i;
    return -1;
}

// p mod q for monic q with integer coefficients; trims p to deg(q) slots.
void poly_mod_monic(std::vector<Rational>& p, const std::vector<Integer>& q) {
    const size_t d = q.size() - 1;  // deg q
    for (size_t i = p.size(); i-- > d;) {
        if (p[i] == 0) continue;
        Rational lead = p[i];
        p[i] = 0;
        for (size_t j = 0; j < d; ++j) {
            if (q[j] == 0) continue;
            p[i - d + j] -= lead * Rational(q[j]);
        }
    }
    p.resize(d);
}

// Quotient and remainder of a by b over Q (b nonzero).
void poly_divmod(const std::vector<Rational>& a, const std::vector<Rational>& b,
                 std::vector<Rational>& quot, std::vector<Rational>& rem) {
    int db = poly_degree(b);
    rem = a;
    quot.assign(a.size(), Rational(0));
    const Rational& lead = b[static_cast<size_t>(db)];
    for (int i = poly_degree(rem); i >= db; i = poly_degree(rem)) {
        Rational c = rem[static_cast<size_t>(i)] / lead;
        quot[static_cast<size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<size_t>(i - db + j)] -= c * b[static_cast<size_t>(j)];
    }
}

// Exact division of integer polynomials (remainder known to vanish).
std::vector<Integer> int_poly_divide(const std::vector<Integer>& a,
                                     const std::vector<Integer>& b) {
    std::vector<Integer> rem = a;
    const size_t db = b.size() - 1;
    std::vector<Integer> quot(a.size() - db, 0);
    for (size_t i = rem.size(); i-- > db;) {
        if (rem[i] == 0) continue;
        Integer c = rem[i] / b[db];
        quot[i - db] = c;
        for (size_t j = 0; j <= db; ++j) rem[i - db + j] -= c * b[j];
    }
    return quot;
}

std::mutex g_phi_mutex;
std::map<unsigned, std::vector<Integer>> g_phi_cache;

}  // namespace

unsigned euler_phi(unsigned m) {
    unsigned result = m, n = m;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

const std::vector<Integer>& cyclotomic_polynomial(unsigned m) {
    if (m == 0) throw semantic_error("conductor must be positive");
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    auto it = g_phi_cache.find(m);
    if (it != g_phi_cache.end()) return it->second;

    // Fill the cache for all divisors in increasing order so each step
    // only divides by already-known polynomials.
    for (unsigned d = 1; d <= m; ++d) {
        if (m % d != 0 || g_phi_cache.count(d)) continue;
        std::vector<Integer> num(d + 1, 0);  // x^d - 1
        num[0] = -1;
        num[d] = 1;
        for (unsigned e = 1; e < d; ++e) {
            if (d % e != 0) continue;
            num = int_poly_divide(num, g_phi_cache.at(e));
        }
        g_phi_cache.emplace(d, std::move(num));
    }
    return g_phi_cache.at(m);
}

// ---- Cyclotomic ----

Cyclotomic Cyclotomic::root_of_unity(unsigned m, long k) {
    std::map<long, Rational> t;
    t[k] = Rational(1);
    return make(m, t);
}

Cyclotomic Cyclotomic::make(unsigned m, const std::map<long, Rational>& terms) {
    if (m == 0) throw semantic_error("conductor must be positive");
    const auto& phi_poly = cyclotomic_polynomial(m);
    std::vector<Rational> dense(m, Rational(0));
    for (const auto& [exp, coeff] : terms) {
        long k = ((exp % static_cast<long>(m)) + static_cast<long>(m)) % static_cast<long>(m);
        dense[static_cast<size_t>(k)] += coeff;
    }
    poly_mod_monic(dense, phi_poly);
    return Cyclotomic(m, std::move(dense));
}

bool Cyclotomic::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c == 0; });
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational Cyclotomic::to_rational() const {
    if (!is_rational()) throw semantic_error("not rational");
    return coeffs_[0];
}

Cyclotomic Cyclotomic::conj() const {
    std::map<long, Rational> t;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        long e = (static_cast<long>(conductor_) - static_cast<long>(k)) %
                 static_cast<long>(conductor_);
        t[e] += coeffs_[k];
    }
    return make(conductor_, t);
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw semantic_error("division by zero");
    if (is_rational()) return Cyclotomic(Rational(1) / coeffs_[0]);

    // Extended Euclid on (Phi_m, f): maintain s with s*f = r (mod Phi_m).
    const auto& phi_int = cyclotomic_polynomial(conductor_);
    std::vector<Rational> r0(phi_int.begin(), phi_int.end());
    std::vector<Rational> r1 = coeffs_;
    std::vector<Rational> s0(phi_int.size(), Rational(0));
    std::vector<Rational> s1(phi_int.size(), Rational(0));
    s1[0] = 1;

    std::vector<Rational> quot, rem;
    while (poly_degree(r1) > 0) {
        poly_divmod(r0, r1, quot, rem);
        r0.swap(r1);
        r1 = rem;
        // s_next = s0 - quot * s1 (reduced sizes stay bounded by phi+1)
        std::vector<Rational> snext = s0;
        snext.resize(std::max(snext.size(), quot.size() + s1.size()), Rational(0));
        for (size_t i = 0; i < quot.size(); ++i) {
            if (quot[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) {
                if (s1[j] == 0) continue;
                snext[i + j] -= quot[i] * s1[j];
            }
        }
        s0.swap(s1);
        s1 = snext;
    }
    if (poly_degree(r1) != 0)
        throw internal_error("cyclotomic inverse: gcd not constant");
    Rational c = r1[0];
    poly_mod_monic(s1, phi_int);
    for (auto& v : s1) v /= c;
    return Cyclotomic(conductor_, std::move(s1));
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

unsigned Cyclotomic::common_conductor(const Cyclotomic& a, const Cyclotomic& b) {
    unsigned long m = std::lcm<unsigned long>(a.conductor_, b.conductor_);
    if (m > 1000000ul) throw semantic_error("conductor too large");
    return static_cast<unsigned>(m);
}

Cyclotomic Cyclotomic::lifted_to(unsigned M) const {
    if (M == conductor_) return *this;
    if (M % conductor_ != 0)
        throw internal_error("conductor lift requires a multiple");
    const unsigned stride = M / conductor_;
    std::vector<Rational> dense(M, Rational(0));
    for (size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) dense[k * stride] = coeffs_[k];
    poly_mod_monic(dense, cyclotomic_polynomial(M));
    return Cyclotomic(M, std::move(dense));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
    if (conductor_ == rhs.conductor_) {
        for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
        return *this;
    }
    unsigned m = common_conductor(*this, rhs);
    *this = lifted_to(m);
    Cyclotomic other = rhs.lifted_to(m);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) {
    return *this += -rhs;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
    if (conductor_ != rhs.conductor_) {
        unsigned m = common_conductor(*this, rhs);
        *this = lifted_to(m);
        return *this *= rhs.lifted_to(m);
    }
    const auto& a = coeffs_;
    const auto& b = rhs.coeffs_;
    std::vector<Rational> prod(a.size() + b.size(), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            prod[i + j] += a[i] * b[j];
        }
    }
    poly_mod_monic(prod, cyclotomic_polynomial(conductor_));
    coeffs_ = std::move(prod);
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

bool Cyclotomic::operator==(const Cyclotomic& rhs) const {
    if (conductor_ == rhs.conductor_) return coeffs_ == rhs.coeffs_;
    unsigned m = common_conductor(*this, rhs);
    return lifted_to(m).coeffs_ == rhs.lifted_to(m).coeffs_;
}

std::string Cyclotomic::to_string() const {
    if (is_rational()) return rational_to_string(coeffs_[0]);
    std::ostringstream out;
    out << "cyc(" << conductor_ << ";";
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        out << (first ? " " : ", ") << k << ":" << rational_to_string(coeffs_[k]);
        first = false;
    }
    out << ")";
    return out.str();
}

Cyclotomic Cyclotomic::from_string(std::string_view s) {
    auto trim = [](std::string_view t) {
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
        return t;
    };
    s = trim(s);
    if (s.substr(0, 4) != "cyc(") return Cyclotomic(rational_from_string(s));
    if (s.back() != ')') throw parse_error("bad cyclotomic literal '" + std::string(s) + "'");
    std::string_view body = s.substr(4, s.size() - 5);
    auto semi = body.find(';');
    if (semi == std::string_view::npos)
        throw parse_error("bad cyclotomic literal '" + std::string(s) + "'");
    unsigned m = 0;
    try {
        m = static_cast<unsigned>(std::stoul(std::string(trim(body.substr(0, semi)))));
    } catch (const std::exception&) {
        throw parse_error("bad conductor in '" + std::string(s) + "'");
    }
    std::map<long, Rational> terms;
    std::string_view rest = body.substr(semi + 1);
    while (!rest.empty()) {
        auto comma = rest.find(',');
        std::string_view item = trim(rest.substr(0, comma));
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        if (item.empty()) continue;
        auto colon = item.find(':');
        if (colon == std::string_view::npos)
            throw parse_error("bad cyclotomic term '" + std::string(item) + "'");
        long exp = 0;
        try {
            exp = std::stol(std::string(trim(item.substr(0, colon))));
        } catch (const std::exception&) {
            throw parse_error("bad exponent in '" + std::string(item) + "'");
        }
        terms[exp] += rational_from_string(trim(item.substr(colon + 1)));
    }
    return make(m, terms);
}

}  // namespace mckay
