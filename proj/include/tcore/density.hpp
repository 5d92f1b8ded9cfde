// Residue-class counting over coefficient streams: the empirical side
// of the divisibility statements, plus a heuristic scanner for
// arithmetic-progression congruences.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tcore/series.hpp"

namespace tcore {

struct DensityReport {
    uint64_t modulus = 0;
    uint64_t residue = 0;
    std::vector<uint64_t> checkpoints;  // ascending X values
    std::vector<uint64_t> counts;       // #{0 <= n <= X : a(n) = r mod M}
    std::vector<mpq_class> ratios;      // count / (X + 1), exact
};

// Exact single-pass counts of a(n) = r (mod m) at each checkpoint.
// Checkpoints must be ascending and below the series truncation; the
// series modulus must be 0 or a multiple of m.
DensityReport density_report(const TruncatedSeries& series, uint64_t m,
                             uint64_t r, const std::vector<uint64_t>& checkpoints);

// Deterministic decimal rendering of an exact ratio (truncated, not
// rounded) so golden files reproduce bit-exactly.
std::string ratio_decimal(const mpq_class& ratio, unsigned digits = 9);

struct ScanHit {
    uint64_t a = 0;  // progression step
    uint64_t b = 0;  // progression offset, 0 <= b < a
};

// Candidate progressions (A, B) with coeff(A n + B) = 0 mod m for every
// n <= nmax. Candidates only: verified up to nmax, nothing more.
std::vector<ScanHit> congruence_scan(const TruncatedSeries& series, uint64_t m,
                                     uint64_t amax, uint64_t nmax);

// Convenience: scan the b-bar-t stream mod m.
std::vector<ScanHit> congruence_scan_bbar(uint64_t t, uint64_t m, uint64_t amax,
                                          uint64_t nmax);

}  // namespace tcore
