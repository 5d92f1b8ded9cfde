// Truncated formal power series in q with coefficients either in Z
// (arbitrary precision) or in Z/M for a machine-word modulus M.
//
// A series knows its own truncation T: coefficients are defined for
// exponents 0..T-1 and every binary operation truncates to the shorter
// operand. Values are immutable after construction; all operations
// return new series.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace tcore {

// Largest admissible modulus: products of two reduced residues must fit
// in an unsigned 128-bit intermediate with headroom for accumulation.
inline constexpr uint64_t kMaxModulus = (uint64_t{1} << 62) - 1;

class TruncatedSeries {
  public:
    // Zero series of length `trunc`. modulus == 0 selects exact integer
    // coefficients; otherwise residues in [0, modulus).
    TruncatedSeries(uint64_t modulus, std::size_t trunc);

    static TruncatedSeries constant(const mpz_class& c, std::size_t trunc,
                                    uint64_t modulus);

    uint64_t modulus() const { return modulus_; }
    std::size_t trunc() const { return trunc_; }
    bool exact() const { return modulus_ == 0; }

    // Residue access; series must be in residue mode.
    uint64_t coeff_res(std::size_t n) const;
    // Exact access; series must be in exact mode.
    const mpz_class& coeff_exact(std::size_t n) const;
    // Coefficient rendered in decimal, either mode.
    std::string coeff_str(std::size_t n) const;

    // In-place coefficient setup for constructors and tests. `v` is
    // reduced into [0, modulus) in residue mode.
    void set_coeff(std::size_t n, const mpz_class& v);
    void add_to_coeff(std::size_t n, long delta);

    bool is_zero() const;
    std::size_t nonzero_count() const;
    // Smallest exponent with a nonzero coefficient, or trunc() if none.
    std::size_t first_nonzero() const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

    // Internal storage views used by the arithmetic kernels.
    const std::vector<uint64_t>& res_data() const { return res_; }
    const std::vector<mpz_class>& exact_data() const { return z_; }
    std::vector<uint64_t>& res_data() { return res_; }
    std::vector<mpz_class>& exact_data() { return z_; }

  private:
    uint64_t modulus_;
    std::size_t trunc_;
    std::vector<uint64_t> res_;  // residue mode
    std::vector<mpz_class> z_;   // exact mode
};

TruncatedSeries make_constant(const mpz_class& c, std::size_t trunc,
                              uint64_t modulus);

// Cauchy product truncated at min(A.trunc, B.trunc). The factor with
// fewer nonzero coefficients drives the outer loop, so multiplying by a
// theta-sparse series costs O(T * nnz).
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

// Quotient C with mul(C, B) == A up to the common truncation. B must
// have an invertible constant term (a unit mod M, or +-1 in exact
// mode). Cost O(T * nnz(B)).
TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b);

// Binary exponentiation; e == 0 yields the constant one series.
TruncatedSeries pow(const TruncatedSeries& a, uint64_t e);

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);

// q -> q^d relabeling: coefficient a(n) moves to exponent d*n. Output
// truncation is d * A.trunc unless a smaller positive cap is given.
TruncatedSeries scale_exponents(const TruncatedSeries& a, std::size_t d,
                                std::size_t cap = 0);

// Reduce an exact series mod M (or re-reduce a residue series whose
// modulus is a multiple of M).
TruncatedSeries reduce_mod(const TruncatedSeries& a, uint64_t m);

// First `n` coefficients agree (n must not exceed either truncation).
bool prefix_equal(const TruncatedSeries& a, const TruncatedSeries& b,
                  std::size_t n);

}  // namespace tcore
