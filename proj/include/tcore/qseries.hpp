// Constructors for the q-series this project revolves around: the Euler
// products f_n = (q^n; q^n)_inf, the theta functions phi(-q), psi(-q),
// f(-q), and the three t-core-style generating functions
//
//   c_t:    f_t^t / f_1
//   abar_t: f_2 f_t^{2t} / (f_1^2 f_{2t}^t)
//   bbar_t: f_2 f_t^t f_{4t}^t / (f_1 f_4 f_{2t}^t)
//
// Sparse sum forms are filled directly from their exponent formulas;
// product forms go through series arithmetic. Constructors that admit
// two independent routes compute both and hard-error on disagreement.

#pragma once

#include "tcore/series.hpp"

namespace tcore {

// f_{nscale} truncated at T, via the pentagonal number expansion
// sum_j (-1)^j q^{nscale * j(3j-1)/2} over all integers j.
TruncatedSeries euler_f(uint64_t nscale, std::size_t trunc, uint64_t modulus);

// phi(-q) = sum_n (-1)^n q^{n^2} = f_1^2 / f_2.
TruncatedSeries phi_neg(std::size_t trunc, uint64_t modulus);

// psi(-q) = sum_j (-1)^j q^{j(2j-1)} = f_1 f_4 / f_2.
TruncatedSeries psi_neg(std::size_t trunc, uint64_t modulus);

// f(-q) = f_1.
TruncatedSeries f_neg(std::size_t trunc, uint64_t modulus);

// Sum-form fills, exposed for cross-checks and tests.
TruncatedSeries phi_neg_sum(std::size_t trunc, uint64_t modulus);
TruncatedSeries psi_neg_sum(std::size_t trunc, uint64_t modulus);

// Coefficients c_t(n): partitions of n that are t-cores. t >= 2.
TruncatedSeries ct_series(uint64_t t, std::size_t trunc, uint64_t modulus);

// Coefficients of phi^t(-q^t) / phi(-q). t >= 1.
TruncatedSeries abar_series(uint64_t t, std::size_t trunc, uint64_t modulus);

// Coefficients of psi^t(-q^t) / psi(-q). t >= 1. Computed from the
// Euler-product form and cross-checked against the theta sum form.
TruncatedSeries bbar_series(uint64_t t, std::size_t trunc, uint64_t modulus);

}  // namespace tcore
