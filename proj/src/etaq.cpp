#include "tcore/etaq.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "tcore/qseries.hpp"

namespace tcore {

namespace {

uint64_t gcd_u64(uint64_t a, uint64_t b) { return std::gcd(a, b); }

uint64_t pow_u64(uint64_t base, uint32_t e) {
    uint64_t r = 1;
    for (uint32_t i = 0; i < e; ++i) {
        if (r > UINT64_MAX / base) throw std::overflow_error("power overflow");
        r *= base;
    }
    return r;
}

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// Both 24-divisibility sums evaluated at an explicit level.
std::pair<bool, bool> level_conditions_at(
    const std::map<uint64_t, int64_t>& terms, uint64_t n) {
    int64_t sum_a = 0;
    int64_t sum_b = 0;
    for (const auto& [delta, r] : terms) {
        sum_a += static_cast<int64_t>(delta) * r;
        sum_b += static_cast<int64_t>(n / delta) * r;
    }
    return {sum_a % 24 == 0, sum_b % 24 == 0};
}

std::map<uint64_t, int64_t> prime_exponents_of_s(
    const std::map<uint64_t, int64_t>& terms) {
    std::map<uint64_t, int64_t> exps;
    for (const auto& [delta, r] : terms) {
        uint64_t d = delta;
        for (uint64_t p = 2; p * p <= d; ++p) {
            while (d % p == 0) {
                exps[p] += r;
                d /= p;
            }
        }
        if (d > 1) exps[d] += r;
    }
    return exps;
}

}  // namespace

EtaQuotient::EtaQuotient(uint64_t level,
                         const std::vector<std::pair<uint64_t, int64_t>>& terms)
    : level_(level) {
    require(level >= 1, "level must be positive");
    for (const auto& [delta, r] : terms) {
        require(delta >= 1, "eta argument multiplier must be positive");
        terms_[delta] += r;
    }
    std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
    for (const auto& [delta, r] : terms_)
        if (level_ % delta != 0)
            throw std::invalid_argument("eta argument does not divide the level");
}

EtaQuotient EtaQuotient::pow(uint64_t e) const {
    std::vector<std::pair<uint64_t, int64_t>> scaled;
    for (const auto& [delta, r] : terms_)
        scaled.emplace_back(delta, r * static_cast<int64_t>(e));
    return EtaQuotient(level_, scaled);
}

EtaQuotient EtaQuotient::with_level(uint64_t level) const {
    std::vector<std::pair<uint64_t, int64_t>> copy(terms_.begin(), terms_.end());
    return EtaQuotient(level, copy);
}

int64_t EtaQuotient::offset24() const {
    int64_t sum = 0;
    for (const auto& [delta, r] : terms_) sum += static_cast<int64_t>(delta) * r;
    return sum;
}

mpq_class weight(const EtaQuotient& eq) {
    int64_t sum = 0;
    for (const auto& [delta, r] : eq.terms()) sum += r;
    mpq_class w(sum, 2);
    w.canonicalize();
    return w;
}

std::pair<bool, bool> check_level_conditions(const EtaQuotient& eq) {
    return level_conditions_at(eq.terms(), eq.level());
}

uint64_t minimal_level(const EtaQuotient& eq) {
    uint64_t n0 = eq.level();
    for (uint64_t m = 1; m <= 24; ++m) {
        auto [a, b] = level_conditions_at(eq.terms(), n0 * m);
        if (a && b) return n0 * m;
    }
    // Both conditions are linear in M mod 24, so searching 1..24 decides.
    throw std::domain_error("no level multiplier in 1..24 satisfies both conditions");
}

int kronecker_symbol(int64_t a, int64_t n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if (a % 2 == 0 && n % 2 == 0) return 0;
    int result = 1;
    int v = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v;
    }
    if (v % 2 == 1) {
        int64_t am = ((a % 8) + 8) % 8;
        if (am == 3 || am == 5) result = -result;
    }
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    while (true) {
        a %= n;
        if (a < 0) a += n;
        if (a == 0) return n == 1 ? result : 0;
        v = 0;
        while (a % 2 == 0) {
            a /= 2;
            ++v;
        }
        if (v % 2 == 1 && (n % 8 == 3 || n % 8 == 5)) result = -result;
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        std::swap(a, n);
    }
}

int64_t character_kernel(const EtaQuotient& eq) {
    mpq_class w = weight(eq);
    if (w.get_den() != 1)
        throw std::domain_error("character requires integral weight");
    bool odd_weight = mpz_odd_p(w.get_num().get_mpz_t()) != 0;
    int64_t kernel = 1;
    for (const auto& [p, e] : prime_exponents_of_s(eq.terms()))
        if (e % 2 != 0) kernel *= static_cast<int64_t>(p);
    return odd_weight ? -kernel : kernel;
}

int character_eval(const EtaQuotient& eq, uint64_t d) {
    if (gcd_u64(d, eq.level()) != 1)
        throw std::domain_error("character defined only at arguments coprime to the level");
    return kronecker_symbol(character_kernel(eq), static_cast<int64_t>(d));
}

mpq_class cusp_order(const EtaQuotient& eq, uint64_t d) {
    uint64_t n = eq.level();
    if (d == 0 || n % d != 0)
        throw std::domain_error("cusp denominator must divide the level");
    mpq_class sum(0);
    for (const auto& [delta, r] : eq.terms()) {
        uint64_t g = gcd_u64(d, delta);
        mpq_class term(mpz_class(g) * g * r,
                       mpz_class(gcd_u64(d, n / d)) * d * delta);
        sum += term;
    }
    mpq_class order = mpq_class(n, 24) * sum;
    order.canonicalize();
    return order;
}

ModularityReport modularity_report(const EtaQuotient& eq) {
    ModularityReport rep;
    rep.weight = weight(eq);
    rep.level = eq.level();
    std::tie(rep.condition_a, rep.condition_b) = check_level_conditions(eq);
    if (rep.weight.get_den() == 1)
        rep.character_kernel = character_kernel(eq);
    rep.holomorphic = true;
    for (uint64_t d : divisors(eq.level())) {
        mpq_class order = cusp_order(eq, d);
        if (order < 0) rep.holomorphic = false;
        rep.cusp_orders.emplace_back(d, order);
    }
    return rep;
}

EtaExpansion expand(const EtaQuotient& eq, std::size_t trunc, uint64_t modulus) {
    TruncatedSeries acc = make_constant(1, trunc, modulus);
    for (const auto& [delta, r] : eq.terms()) {
        TruncatedSeries f = euler_f(delta, trunc, modulus);
        for (int64_t i = 0; i < (r > 0 ? r : -r); ++i)
            acc = r > 0 ? mul(acc, f) : div(acc, f);
    }
    return EtaExpansion{eq.offset24(), std::move(acc)};
}

TruncatedSeries integer_expansion(const EtaQuotient& eq, std::size_t trunc,
                                  uint64_t modulus) {
    int64_t off24 = eq.offset24();
    if (off24 < 0 || off24 % 24 != 0)
        throw std::domain_error(
            "integer-exponent expansion requires a nonnegative offset divisible by 24");
    uint64_t off = static_cast<uint64_t>(off24 / 24);
    TruncatedSeries out(modulus, trunc);
    if (off >= trunc) return out;
    EtaExpansion e = expand(eq, trunc - off, modulus);
    for (std::size_t n = 0; n < e.series.trunc(); ++n) {
        if (modulus == 0)
            out.set_coeff(n + off, e.series.coeff_exact(n));
        else
            out.set_coeff(n + off, mpz_class(e.series.coeff_res(n)));
    }
    return out;
}

namespace {

void validate_alpha_m(uint32_t alpha, uint64_t m) {
    require(m >= 1 && std::gcd(m, uint64_t{6}) == 1, "m must be coprime to 6");
    require(alpha <= 12 && m <= 1000000, "family parameters out of supported range");
}

}  // namespace

EtaQuotient family_E(uint32_t alpha, uint64_t m) {
    validate_alpha_m(alpha, m);
    uint64_t base = pow_u64(3, alpha + 1) * m;
    return EtaQuotient(32 * base, {{16 * base, 2}, {32 * base, -1}});
}

EtaQuotient family_G(uint32_t alpha, uint64_t m) {
    validate_alpha_m(alpha, m);
    uint64_t base = pow_u64(3, alpha + 1) * m;
    return EtaQuotient(96 * base, {{32 * base, 3}, {96 * base, -1}});
}

EtaQuotient family_A(uint64_t p, uint32_t a) {
    require(p >= 5 && is_prime_u64(p), "a prime p >= 5 is required");
    require(a >= 1 && a <= 20, "exponent a must be in 1..20");
    uint64_t pa = pow_u64(p, a);
    return EtaQuotient(24 * pa,
                       {{24, static_cast<int64_t>(pa)}, {24 * pa, -1}});
}

EtaQuotient family_F(uint32_t alpha, uint64_t m, uint32_t k) {
    validate_alpha_m(alpha, m);
    require(k >= 1 && k <= 20, "k must be in 1..20");
    uint64_t base = pow_u64(3, alpha + 1) * m;          // 3^{alpha+1} m
    int64_t a3m = static_cast<int64_t>(pow_u64(3, alpha) * m);
    int64_t twok = static_cast<int64_t>(pow_u64(2, k));
    // Merged form of the quotient times E^{2^k}; level fixed at the
    // value proven to work for every k >= 1 (2^7 3^{alpha+1} m), which
    // is the minimal choice in the k = 1 case.
    return EtaQuotient(128 * base, {{24, -1},
                                    {48, 1},
                                    {96, -1},
                                    {8 * base, a3m},
                                    {16 * base, 2 * twok - a3m},
                                    {32 * base, -(twok - a3m)}});
}

EtaQuotient family_H(uint32_t alpha, uint64_t m, uint32_t k) {
    validate_alpha_m(alpha, m);
    require(k >= 1 && k <= 20, "k must be in 1..20");
    uint64_t base = pow_u64(3, alpha + 1) * m;
    int64_t a3m = static_cast<int64_t>(pow_u64(3, alpha) * m);
    int64_t threek = static_cast<int64_t>(pow_u64(3, k));
    return EtaQuotient(96 * base, {{24, -1},
                                   {48, 1},
                                   {96, -1},
                                   {8 * base, a3m},
                                   {16 * base, -a3m},
                                   {32 * base, 3 * threek + a3m},
                                   {96 * base, -threek}});
}

EtaQuotient family_B(const std::vector<std::pair<uint64_t, uint32_t>>& factors,
                     std::size_t index, uint32_t k) {
    require(!factors.empty(), "at least one prime power is required");
    require(index < factors.size(), "prime index out of range");
    require(k >= 1 && k <= 20, "k must be in 1..20");
    uint64_t t = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        auto [p, a] = factors[i];
        require(p >= 5 && is_prime_u64(p), "all primes must be >= 5");
        require(a >= 1 && a <= 20, "exponents must be in 1..20");
        for (std::size_t j = i + 1; j < factors.size(); ++j)
            require(factors[j].first != p, "primes must be distinct");
        t *= pow_u64(p, a);
    }
    auto [p, a] = factors[index];
    uint64_t pa = pow_u64(p, a);
    int64_t pk = static_cast<int64_t>(pow_u64(p, k));
    int64_t pak = static_cast<int64_t>(pow_u64(p, a + k));
    int64_t lt = static_cast<int64_t>(t);
    // Level 2^6 3^2 t: satisfies both conditions for every k >= 1.
    return EtaQuotient(576 * t, {{24, pak - 1},
                                 {48, 1},
                                 {96, -1},
                                 {24 * t, lt},
                                 {48 * t, -lt},
                                 {96 * t, lt},
                                 {24 * pa, -pk}});
}

std::vector<uint64_t> divisors(uint64_t n) {
    std::vector<uint64_t> small, large;
    for (uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

}  // namespace tcore
