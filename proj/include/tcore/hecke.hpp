// Hecke operator T_p acting on integer-exponent q-expansions carrying
// weight / character / level metadata, plus the annihilation-depth and
// multiplicative-congruence experiments built on the F(1,1,k) family.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tcore/etaq.hpp"
#include "tcore/series.hpp"

namespace tcore {

struct HeckeForm {
    TruncatedSeries series;
    uint64_t weight;            // integral weight l >= 1
    int64_t character_kernel;   // chi(d) = kronecker_symbol(kernel, d)
    uint64_t level;

    uint64_t modulus() const { return series.modulus(); }
};

// (f | T_p)(n) = a(pn) + chi(p) p^{l-1} a(n/p), with a(n/p) = 0 when
// p does not divide n. Output truncation floor(T / p). Requires p prime
// with gcd(p, level) = 1.
HeckeForm apply_tp(const HeckeForm& f, uint64_t p);

// The form F(1,1,k) as a q-expansion mod `modulus` to `trunc` terms,
// with its weight, character kernel and level attached.
HeckeForm hecke_form_f11k(uint32_t k, std::size_t trunc, uint64_t modulus);

struct NilpotencyStep {
    uint64_t prime;
    std::size_t trunc;                          // coefficients still valid
    std::size_t nonzero_count;                  // within that truncation
    std::optional<std::size_t> first_nonzero;
};

struct NilpotencyResult {
    std::vector<NilpotencyStep> steps;
    std::optional<std::size_t> annihilated_depth;  // 0 = already zero
    bool truncation_exhausted = false;  // stopped before the prime list ran out
    std::size_t final_trunc = 0;
};

// Apply T_{q_1}, T_{q_2}, ... to `start` in order, recording the
// surviving-coefficient trace, until the expansion is zero mod its
// modulus, the prime list is exhausted, or the next step would leave
// fewer than `min_window` verified coefficients. Primes must be
// distinct and coprime to 6.
NilpotencyResult nilpotency_search_on(HeckeForm start,
                                      const std::vector<uint64_t>& primes,
                                      std::size_t min_window = 50);

// Same experiment started from F(1,1,k) mod 2^v truncated at `trunc`.
NilpotencyResult nilpotency_search(uint32_t k, uint32_t v,
                                   const std::vector<uint64_t>& primes,
                                   std::size_t trunc,
                                   std::size_t min_window = 50);

struct CongruenceInstanceResult {
    bool pass = false;      // no violations among tested arguments
    bool vacuous = false;   // no admissible n at all
    bool truncated = false; // some admissible n exceeded the series range
    std::size_t tested = 0;
    std::vector<uint64_t> violations;  // offending n values
};

// Check coeffs((Q n - 24)/24) == 0 mod the series modulus for all
// n <= nmax with gcd(n, Q) = 1 and (Q n - 24)/24 a nonnegative integer,
// where Q = prod(q_list). `series` plays the role of the b-bar-3
// coefficient stream reduced mod 2^v.
CongruenceInstanceResult verify_congruence_instance(
    const TruncatedSeries& series, const std::vector<uint64_t>& q_list,
    uint64_t nmax);

// Convenience wrapper building b-bar-3 mod 2^v at truncation `trunc`.
CongruenceInstanceResult verify_bbar3_instance(
    const std::vector<uint64_t>& q_list, uint32_t v, uint64_t nmax,
    std::size_t trunc);

}  // namespace tcore
