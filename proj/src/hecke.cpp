#include "tcore/hecke.hpp"

#include <numeric>
#include <stdexcept>

#include "tcore/qseries.hpp"

namespace tcore {

namespace {

uint64_t pow_mod(uint64_t base, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    base %= m;
    while (e > 0) {
        if (e & 1) r = static_cast<uint64_t>((unsigned __int128)r * base % m);
        base = static_cast<uint64_t>((unsigned __int128)base * base % m);
        e >>= 1;
    }
    return r;
}

void validate_prime_list(const std::vector<uint64_t>& primes) {
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (!is_prime_u64(primes[i]) || primes[i] % 2 == 0 || primes[i] % 3 == 0)
            throw std::invalid_argument("operator primes must be primes coprime to 6");
        for (std::size_t j = i + 1; j < primes.size(); ++j)
            if (primes[i] == primes[j])
                throw std::invalid_argument("operator primes must be distinct");
    }
}

}  // namespace

HeckeForm apply_tp(const HeckeForm& f, uint64_t p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("T_p requires p prime");
    if (std::gcd(p, f.level) != 1)
        throw std::domain_error("T_p undefined: p divides the level");
    if (f.weight < 1) throw std::invalid_argument("weight must be >= 1");

    int chi = kronecker_symbol(f.character_kernel, static_cast<int64_t>(p));
    std::size_t t_out = f.series.trunc() / p;
    if (t_out == 0)
        throw std::invalid_argument("truncation too small for T_p");

    TruncatedSeries out(f.series.modulus(), t_out);
    if (f.series.exact()) {
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), p, f.weight - 1);
        if (chi < 0) pw = -pw;
        for (std::size_t n = 0; n < t_out; ++n) {
            mpz_class v = f.series.coeff_exact(n * p);
            if (n % p == 0) v += pw * f.series.coeff_exact(n / p);
            out.set_coeff(n, v);
        }
    } else {
        const uint64_t m = f.series.modulus();
        uint64_t pw = pow_mod(p, f.weight - 1, m);
        if (chi < 0) pw = (m - pw) % m;
        for (std::size_t n = 0; n < t_out; ++n) {
            uint64_t v = f.series.coeff_res(n * p);
            if (n % p == 0) {
                uint64_t add = static_cast<uint64_t>(
                    (unsigned __int128)pw * f.series.coeff_res(n / p) % m);
                v += add;
                if (v >= m) v -= m;
            }
            out.res_data()[n] = v;
        }
    }
    return HeckeForm{std::move(out), f.weight, f.character_kernel, f.level};
}

HeckeForm hecke_form_f11k(uint32_t k, std::size_t trunc, uint64_t modulus) {
    EtaQuotient eq = family_F(1, 1, k);
    mpq_class w = weight(eq);
    if (w.get_den() != 1 || w <= 0)
        throw std::logic_error("F(1,1,k) must have positive integral weight");
    return HeckeForm{integer_expansion(eq, trunc, modulus),
                     static_cast<uint64_t>(w.get_num().get_ui()),
                     character_kernel(eq), eq.level()};
}

NilpotencyResult nilpotency_search_on(HeckeForm form,
                                      const std::vector<uint64_t>& primes,
                                      std::size_t min_window) {
    validate_prime_list(primes);
    NilpotencyResult result;
    result.final_trunc = form.series.trunc();
    if (form.series.is_zero()) {
        result.annihilated_depth = 0;
        return result;
    }
    for (uint64_t p : primes) {
        if (form.series.trunc() / p < min_window) {
            result.truncation_exhausted = true;
            break;
        }
        form = apply_tp(form, p);
        NilpotencyStep step{p, form.series.trunc(), form.series.nonzero_count(),
                            std::nullopt};
        if (step.nonzero_count > 0) step.first_nonzero = form.series.first_nonzero();
        result.steps.push_back(step);
        result.final_trunc = form.series.trunc();
        if (step.nonzero_count == 0) {
            result.annihilated_depth = result.steps.size();
            return result;
        }
    }
    return result;  // honest: not annihilated within the attempted depth
}

NilpotencyResult nilpotency_search(uint32_t k, uint32_t v,
                                   const std::vector<uint64_t>& primes,
                                   std::size_t trunc, std::size_t min_window) {
    if (v < 1) throw std::invalid_argument("v must be >= 1");
    uint64_t modulus = uint64_t{1} << v;
    return nilpotency_search_on(hecke_form_f11k(k, trunc, modulus), primes,
                                min_window);
}

CongruenceInstanceResult verify_congruence_instance(
    const TruncatedSeries& series, const std::vector<uint64_t>& q_list,
    uint64_t nmax) {
    validate_prime_list(q_list);
    if (q_list.empty()) throw std::invalid_argument("empty prime list");
    uint64_t q_prod = 1;
    for (uint64_t q : q_list) {
        if (q_prod > UINT64_MAX / q)
            throw std::overflow_error("prime product overflows");
        q_prod *= q;
    }
    if (nmax > 0 && q_prod > UINT64_MAX / nmax)
        throw std::overflow_error("prime product times nmax overflows");

    CongruenceInstanceResult result;
    // Admissible n: (Q n - 24)/24 must be a nonnegative integer, which
    // forces 24 | n since gcd(Q, 24) = 1; plus gcd(n, Q) = 1.
    for (uint64_t n = 24; n <= nmax; n += 24) {
        if (std::gcd(n, q_prod) != 1) continue;
        uint64_t arg = (q_prod * n - 24) / 24;
        if (arg >= series.trunc()) {
            result.truncated = true;
            continue;
        }
        ++result.tested;
        bool zero = series.exact() ? series.coeff_exact(arg) == 0
                                   : series.coeff_res(arg) == 0;
        if (!zero) result.violations.push_back(n);
    }
    result.vacuous = result.tested == 0 && !result.truncated;
    result.pass = result.tested > 0 && result.violations.empty();
    return result;
}

CongruenceInstanceResult verify_bbar3_instance(
    const std::vector<uint64_t>& q_list, uint32_t v, uint64_t nmax,
    std::size_t trunc) {
    if (v < 1) throw std::invalid_argument("v must be >= 1");
    TruncatedSeries bbar3 = bbar_series(3, trunc, uint64_t{1} << v);
    return verify_congruence_instance(bbar3, q_list, nmax);
}

}  // namespace tcore
