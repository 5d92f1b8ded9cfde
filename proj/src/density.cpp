#include "tcore/density.hpp"

#include <stdexcept>

#include "tcore/qseries.hpp"

namespace tcore {

namespace {

uint64_t residue_at(const TruncatedSeries& s, std::size_t n, uint64_t m) {
    if (s.exact()) {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), s.coeff_exact(n).get_mpz_t(), m);
        return mpz_get_ui(r.get_mpz_t());
    }
    return s.coeff_res(n) % m;
}

}  // namespace

DensityReport density_report(const TruncatedSeries& series, uint64_t m,
                             uint64_t r,
                             const std::vector<uint64_t>& checkpoints) {
    if (m < 2) throw std::invalid_argument("density modulus must be >= 2");
    if (r >= m) throw std::invalid_argument("residue must lie in [0, modulus)");
    if (!series.exact() && series.modulus() % m != 0)
        throw std::invalid_argument("series modulus must be a multiple of the density modulus");
    if (checkpoints.empty()) throw std::invalid_argument("no checkpoints given");
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        if (i > 0 && checkpoints[i] <= checkpoints[i - 1])
            throw std::invalid_argument("checkpoints must be strictly ascending");
        if (checkpoints[i] >= series.trunc())
            throw std::invalid_argument("checkpoint exceeds series truncation");
    }

    DensityReport rep;
    rep.modulus = m;
    rep.residue = r;
    rep.checkpoints = checkpoints;
    uint64_t count = 0;
    std::size_t next = 0;
    for (uint64_t n = 0; next < checkpoints.size(); ++n) {
        if (residue_at(series, n, m) == r) ++count;
        while (next < checkpoints.size() && n == checkpoints[next]) {
            rep.counts.push_back(count);
            mpq_class ratio(count, checkpoints[next] + 1);
            ratio.canonicalize();
            rep.ratios.push_back(ratio);
            ++next;
        }
    }
    return rep;
}

std::string ratio_decimal(const mpq_class& ratio, unsigned digits) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    mpz_class scaled = ratio.get_num() * scale / ratio.get_den();
    mpz_class whole = scaled / scale;
    mpz_class frac = scaled % scale;
    std::string f = frac.get_str();
    return whole.get_str() + "." + std::string(digits - f.size(), '0') + f;
}

std::vector<ScanHit> congruence_scan(const TruncatedSeries& series, uint64_t m,
                                     uint64_t amax, uint64_t nmax) {
    if (m < 2) throw std::invalid_argument("scan modulus must be >= 2");
    if (amax < 1) throw std::invalid_argument("amax must be >= 1");
    if (amax * nmax + (amax - 1) >= series.trunc())
        throw std::invalid_argument("scan range exceeds series truncation");

    std::vector<ScanHit> hits;
    for (uint64_t a = 1; a <= amax; ++a) {
        for (uint64_t b = 0; b < a; ++b) {
            bool all_zero = true;
            for (uint64_t n = 0; n <= nmax; ++n) {
                if (residue_at(series, a * n + b, m) != 0) {
                    all_zero = false;
                    break;
                }
            }
            if (all_zero) hits.push_back({a, b});
        }
    }
    return hits;
}

std::vector<ScanHit> congruence_scan_bbar(uint64_t t, uint64_t m, uint64_t amax,
                                          uint64_t nmax) {
    std::size_t need = static_cast<std::size_t>(amax * nmax + amax);
    return congruence_scan(bbar_series(t, need, m), m, amax, nmax);
}

}  // namespace tcore
