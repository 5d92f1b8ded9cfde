// Test-only reference implementations, deliberately independent of the
// production series pipeline: literal truncated products, full dense
// convolution and long division with no sparse shortcuts, plus random
// series generators for the property suites.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "tcore/series.hpp"

namespace tcore_test {

using tcore::TruncatedSeries;

// Dense coefficient vectors over exact integers.
using Vec = std::vector<mpz_class>;

inline Vec naive_mul(const Vec& a, const Vec& b) {
    std::size_t t = std::min(a.size(), b.size());
    Vec c(t, mpz_class(0));
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; i + j < t; ++j) c[i + j] += a[i] * b[j];
    return c;
}

inline Vec naive_div(const Vec& a, const Vec& b) {
    std::size_t t = std::min(a.size(), b.size());
    Vec c(t, mpz_class(0));
    for (std::size_t n = 0; n < t; ++n) {
        mpz_class acc = a[n];
        for (std::size_t j = 1; j <= n; ++j) acc -= b[j] * c[n - j];
        c[n] = acc / b[0];  // b[0] must be +-1
    }
    return c;
}

// (q^s; q^s)_inf by multiplying out (1 - q^{s j}) one factor at a time.
inline Vec naive_euler(uint64_t s, std::size_t t) {
    Vec f(t, mpz_class(0));
    f[0] = 1;
    for (uint64_t j = 1; s * j < t; ++j)
        for (std::size_t n = t; n-- > s * j;) f[n] -= f[n - s * j];
    return f;
}

inline Vec naive_pow(const Vec& a, uint64_t e) {
    Vec r(a.size(), mpz_class(0));
    r[0] = 1;
    for (uint64_t i = 0; i < e; ++i) r = naive_mul(r, a);
    return r;
}

inline TruncatedSeries to_series(const Vec& v, uint64_t modulus) {
    TruncatedSeries s(modulus, v.size());
    for (std::size_t i = 0; i < v.size(); ++i) s.set_coeff(i, v[i]);
    return s;
}

inline Vec from_series(const TruncatedSeries& s) {
    Vec v(s.trunc());
    for (std::size_t i = 0; i < s.trunc(); ++i)
        v[i] = s.exact() ? s.coeff_exact(i) : mpz_class(s.coeff_res(i));
    return v;
}

inline TruncatedSeries random_series(std::mt19937_64& rng, std::size_t trunc,
                                     uint64_t modulus) {
    TruncatedSeries s(modulus, trunc);
    if (modulus == 0) {
        std::uniform_int_distribution<long> d(-50, 50);
        for (std::size_t i = 0; i < trunc; ++i) s.set_coeff(i, mpz_class(d(rng)));
    } else {
        std::uniform_int_distribution<uint64_t> d(0, modulus - 1);
        for (std::size_t i = 0; i < trunc; ++i) s.set_coeff(i, mpz_class(d(rng)));
    }
    return s;
}

// Random series whose constant term is a unit (so it can divide).
inline TruncatedSeries random_unit_series(std::mt19937_64& rng,
                                          std::size_t trunc, uint64_t modulus) {
    TruncatedSeries s = random_series(rng, trunc, modulus);
    if (modulus == 0) {
        s.set_coeff(0, (rng() & 1) ? 1 : -1);
    } else {
        uint64_t u;
        do {
            u = std::uniform_int_distribution<uint64_t>(1, modulus - 1)(rng);
        } while (std::gcd(u, modulus) != 1);
        s.set_coeff(0, mpz_class(u));
    }
    return s;
}

}  // namespace tcore_test
