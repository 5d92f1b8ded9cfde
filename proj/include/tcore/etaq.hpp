// Symbolic eta-quotients prod_{delta | N} eta(delta z)^{r_delta} with
// exact weight / level-condition / character / cusp-order arithmetic,
// plus the quotient families used for the b-bar congruence experiments:
//
//   E(alpha,m) = eta^2(2^4 3^{a+1} m z) / eta(2^5 3^{a+1} m z)
//   G(alpha,m) = eta^3(2^5 3^{a+1} m z) / eta(2^5 3^{a+2} m z)
//   A(p,a)    = eta^{p^a}(24 z) / eta(24 p^a z)
//   F(alpha,m,k), H(alpha,m,k), B(primes, i, k): the combined quotients
//   congruent to shifted b-bar generating functions modulo 2^{k+1},
//   3^{k+1} and p_i^{k+1} respectively.
//
// All order and weight computations use exact rational arithmetic; no
// floating point enters any verdict.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "tcore/series.hpp"

namespace tcore {

class EtaQuotient {
  public:
    // Terms are merged by delta and zero exponents dropped; every
    // surviving delta must divide the level.
    EtaQuotient(uint64_t level,
                const std::vector<std::pair<uint64_t, int64_t>>& terms);

    uint64_t level() const { return level_; }
    const std::map<uint64_t, int64_t>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    // Same terms, exponents multiplied by e.
    EtaQuotient pow(uint64_t e) const;
    // Same terms reattached to a (multiple) level.
    EtaQuotient with_level(uint64_t level) const;

    // sum delta * r_delta: 24 times the leading exponent at infinity.
    int64_t offset24() const;

  private:
    uint64_t level_;
    std::map<uint64_t, int64_t> terms_;
};

struct ModularityReport {
    mpq_class weight;
    uint64_t level = 1;
    bool condition_a = false;  // sum delta r_delta   == 0 mod 24
    bool condition_b = false;  // sum (N/delta) r_delta == 0 mod 24
    std::optional<int64_t> character_kernel;  // absent if weight not integral
    std::vector<std::pair<uint64_t, mpq_class>> cusp_orders;  // ascending d
    bool holomorphic = false;
};

struct EtaExpansion {
    int64_t offset24;        // leading exponent in units of 1/24
    TruncatedSeries series;  // prod f_delta^{r_delta}, exponents relative
                             // to offset24/24
};

// (1/2) sum r_delta as an exact rational.
mpq_class weight(const EtaQuotient& eq);

// The two 24-divisibility flags at the quotient's own level.
std::pair<bool, bool> check_level_conditions(const EtaQuotient& eq);

// Smallest N = level * M with M in 1..24 satisfying both level
// conditions; throws if no such M exists.
uint64_t minimal_level(const EtaQuotient& eq);

// Kronecker symbol (a|n), full domain including even and negative n.
int kronecker_symbol(int64_t a, int64_t n);

// Squarefree kernel D of (-1)^l * prod delta^{r_delta}; the character is
// d -> kronecker_symbol(D, d). Requires integral weight.
int64_t character_kernel(const EtaQuotient& eq);

// Character value at d; requires gcd(d, level) == 1.
int character_eval(const EtaQuotient& eq, uint64_t d);

// Exact order of vanishing at the cusp with denominator d | N:
//   (N/24) sum_delta gcd(d,delta)^2 r_delta / (gcd(d, N/d) d delta).
mpq_class cusp_order(const EtaQuotient& eq, uint64_t d);

ModularityReport modularity_report(const EtaQuotient& eq);

// Series expansion: offset24 plus prod f_delta^{r_delta} to `trunc`.
EtaExpansion expand(const EtaQuotient& eq, std::size_t trunc, uint64_t modulus);

// Integer-exponent expansion q^{offset24/24} * prod f_delta^{r_delta}
// truncated at `trunc`; requires offset24 >= 0 and divisible by 24.
TruncatedSeries integer_expansion(const EtaQuotient& eq, std::size_t trunc,
                                  uint64_t modulus);

// Quotient families. alpha >= 0; gcd(m, 6) = 1; k >= 1; primes >= 5.
EtaQuotient family_E(uint32_t alpha, uint64_t m);
EtaQuotient family_G(uint32_t alpha, uint64_t m);
EtaQuotient family_A(uint64_t p, uint32_t a);
EtaQuotient family_F(uint32_t alpha, uint64_t m, uint32_t k);
EtaQuotient family_H(uint32_t alpha, uint64_t m, uint32_t k);

// B is indexed by the prime-power factorization t = prod p_j^{a_j}
// (p_j >= 5, distinct), the position `index` of the distinguished prime,
// and k >= 1.
EtaQuotient family_B(const std::vector<std::pair<uint64_t, uint32_t>>& factors,
                     std::size_t index, uint32_t k);

std::vector<uint64_t> divisors(uint64_t n);
bool is_prime_u64(uint64_t n);

}  // namespace tcore
