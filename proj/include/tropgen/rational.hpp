#pragma once

/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision rational and integer scalars plus small
 *        helpers shared across the library.
 *
 * All arithmetic in this project is exact. Rationals are GMP-backed;
 * nothing here ever rounds.
 */

#include <boost/multiprecision/gmp.hpp>

#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropgen {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline Rat make_rat(const Int& n, const Int& d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    Rat q(n);
    q /= Rat(d);
    return q;
}

inline std::string to_string(const Rat& q) { return q.str(); }
inline std::string to_string(const Int& z) { return z.str(); }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat b = e > 0 ? base : Rat(1) / base;
    unsigned long k = e > 0 ? e : -e;
    Rat r(1);
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

/// Least common multiple of the denominators of a rational vector.
inline Int common_denominator(const std::vector<Rat>& v) {
    Int l(1);
    for (const auto& q : v) l = lcm(l, den(q));
    return l;
}

/// Scale a rational vector to a coprime integer vector (empty/zero stays zero).
inline std::vector<Int> clear_denominators_vec(const std::vector<Rat>& v) {
    Int l = common_denominator(v);
    std::vector<Int> w;
    w.reserve(v.size());
    Int g(0);
    for (const auto& q : v) {
        Int z = num(q) * (l / den(q));
        g = gcd(g, z);
        w.push_back(z);
    }
    if (g > 1)
        for (auto& z : w) z /= g;
    return w;
}

/// Primitive integer vector with positive leading nonzero entry.
inline std::vector<Int> primitive_vector(const std::vector<Rat>& v) {
    std::vector<Int> w = clear_denominators_vec(v);
    for (const auto& z : w) {
        if (z == 0) continue;
        if (z < 0)
            for (auto& y : w) y = -y;
        break;
    }
    return w;
}

inline std::vector<Rat> to_rat_vec(const std::vector<Int>& v) {
    std::vector<Rat> w;
    w.reserve(v.size());
    for (const auto& z : v) w.emplace_back(z);
    return w;
}

inline Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace tropgen
