#include "tcore/series.hpp"

#include <algorithm>

namespace tcore {

namespace {

using u128 = unsigned __int128;

uint64_t add_mod(uint64_t a, uint64_t b, uint64_t m) {
    uint64_t s = a + b;  // a, b < 2^62, no overflow
    return s >= m ? s - m : s;
}

uint64_t sub_mod(uint64_t a, uint64_t b, uint64_t m) {
    return a >= b ? a - b : a + m - b;
}

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((u128)a * b % m);
}

// Inverse of a mod m via extended Euclid; 0 if gcd(a, m) != 1.
uint64_t inv_mod(uint64_t a, uint64_t m) {
    int64_t t = 0, newt = 1;
    int64_t r = static_cast<int64_t>(m), newr = static_cast<int64_t>(a % m);
    while (newr != 0) {
        int64_t q = r / newr;
        int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) return 0;
    if (t < 0) t += static_cast<int64_t>(m);
    return static_cast<uint64_t>(t);
}

uint64_t reduce_mpz(const mpz_class& v, uint64_t m) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), m);
    return mpz_get_ui(r.get_mpz_t());
}

void check_same_modulus(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("series modulus mismatch");
}

struct SparseTerm {
    std::size_t exp;
    uint64_t coeff;
};

std::vector<SparseTerm> nonzeros_res(const std::vector<uint64_t>& v,
                                     std::size_t limit) {
    std::vector<SparseTerm> out;
    for (std::size_t i = 0; i < limit; ++i)
        if (v[i] != 0) out.push_back({i, v[i]});
    return out;
}

}  // namespace

TruncatedSeries::TruncatedSeries(uint64_t modulus, std::size_t trunc)
    : modulus_(modulus), trunc_(trunc) {
    if (trunc == 0) throw std::invalid_argument("truncation must be positive");
    if (modulus == 1 || modulus > kMaxModulus)
        throw std::invalid_argument("modulus must be 0 or in [2, 2^62)");
    if (modulus_ == 0)
        z_.assign(trunc_, mpz_class(0));
    else
        res_.assign(trunc_, 0);
}

TruncatedSeries TruncatedSeries::constant(const mpz_class& c, std::size_t trunc,
                                          uint64_t modulus) {
    TruncatedSeries s(modulus, trunc);
    s.set_coeff(0, c);
    return s;
}

uint64_t TruncatedSeries::coeff_res(std::size_t n) const {
    if (exact()) throw std::logic_error("coeff_res on exact series");
    if (n >= trunc_) throw std::out_of_range("coefficient index beyond truncation");
    return res_[n];
}

const mpz_class& TruncatedSeries::coeff_exact(std::size_t n) const {
    if (!exact()) throw std::logic_error("coeff_exact on residue series");
    if (n >= trunc_) throw std::out_of_range("coefficient index beyond truncation");
    return z_[n];
}

std::string TruncatedSeries::coeff_str(std::size_t n) const {
    if (exact()) return coeff_exact(n).get_str();
    return std::to_string(coeff_res(n));
}

void TruncatedSeries::set_coeff(std::size_t n, const mpz_class& v) {
    if (n >= trunc_) throw std::out_of_range("coefficient index beyond truncation");
    if (exact())
        z_[n] = v;
    else
        res_[n] = reduce_mpz(v, modulus_);
}

void TruncatedSeries::add_to_coeff(std::size_t n, long delta) {
    if (n >= trunc_) throw std::out_of_range("coefficient index beyond truncation");
    if (exact()) {
        z_[n] += delta;
    } else {
        uint64_t d = delta >= 0 ? static_cast<uint64_t>(delta) % modulus_
                                : modulus_ - (static_cast<uint64_t>(-delta) % modulus_);
        if (d == modulus_) d = 0;
        res_[n] = add_mod(res_[n], d, modulus_);
    }
}

bool TruncatedSeries::is_zero() const { return first_nonzero() == trunc_; }

std::size_t TruncatedSeries::nonzero_count() const {
    std::size_t c = 0;
    if (exact()) {
        for (const auto& v : z_)
            if (v != 0) ++c;
    } else {
        for (uint64_t v : res_)
            if (v != 0) ++c;
    }
    return c;
}

std::size_t TruncatedSeries::first_nonzero() const {
    if (exact()) {
        for (std::size_t i = 0; i < trunc_; ++i)
            if (z_[i] != 0) return i;
    } else {
        for (std::size_t i = 0; i < trunc_; ++i)
            if (res_[i] != 0) return i;
    }
    return trunc_;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.modulus_ == b.modulus_ && a.trunc_ == b.trunc_ && a.res_ == b.res_ &&
           a.z_ == b.z_;
}

TruncatedSeries make_constant(const mpz_class& c, std::size_t trunc,
                              uint64_t modulus) {
    return TruncatedSeries::constant(c, trunc, modulus);
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_same_modulus(a, b);
    std::size_t t = std::min(a.trunc(), b.trunc());
    TruncatedSeries c(a.modulus(), t);

    if (a.exact()) {
        const auto& av = a.exact_data();
        const auto& bv = b.exact_data();
        // Drive the outer loop from the factor with fewer nonzeros.
        std::size_t na = 0, nb = 0;
        for (std::size_t i = 0; i < t; ++i) na += (av[i] != 0);
        for (std::size_t i = 0; i < t; ++i) nb += (bv[i] != 0);
        const auto& outer = na <= nb ? av : bv;
        const auto& inner = na <= nb ? bv : av;
        auto& cv = c.exact_data();
        for (std::size_t i = 0; i < t; ++i) {
            if (outer[i] == 0) continue;
            const mpz_class& oi = outer[i];
            for (std::size_t j = 0; i + j < t; ++j) {
                if (inner[j] == 0) continue;
                mpz_addmul(cv[i + j].get_mpz_t(), oi.get_mpz_t(),
                           inner[j].get_mpz_t());
            }
        }
        return c;
    }

    const uint64_t m = a.modulus();
    const auto& av = a.res_data();
    const auto& bv = b.res_data();
    auto ta = nonzeros_res(av, t);
    auto tb = nonzeros_res(bv, t);
    const auto& sparse = ta.size() <= tb.size() ? ta : tb;
    const auto& dense = ta.size() <= tb.size() ? bv : av;
    auto& cv = c.res_data();
    for (const auto& s : sparse) {
        std::size_t lim = t - s.exp;
        uint64_t* out = cv.data() + s.exp;
        if (s.coeff == 1) {
            for (std::size_t j = 0; j < lim; ++j) out[j] = add_mod(out[j], dense[j], m);
        } else if (s.coeff == m - 1) {
            for (std::size_t j = 0; j < lim; ++j) out[j] = sub_mod(out[j], dense[j], m);
        } else {
            for (std::size_t j = 0; j < lim; ++j)
                out[j] = add_mod(out[j], mul_mod(s.coeff, dense[j], m), m);
        }
    }
    return c;
}

TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_same_modulus(a, b);
    std::size_t t = std::min(a.trunc(), b.trunc());
    TruncatedSeries c(a.modulus(), t);

    if (a.exact()) {
        const auto& av = a.exact_data();
        const auto& bv = b.exact_data();
        const mpz_class& b0 = bv[0];
        if (b0 != 1 && b0 != -1)
            throw std::domain_error(
                "exact division requires constant term +-1, got " + b0.get_str());
        std::vector<std::pair<std::size_t, const mpz_class*>> nz;
        for (std::size_t j = 1; j < t; ++j)
            if (bv[j] != 0) nz.emplace_back(j, &bv[j]);
        auto& cv = c.exact_data();
        mpz_class acc;
        for (std::size_t n = 0; n < t; ++n) {
            acc = av[n];
            for (const auto& [j, pj] : nz) {
                if (j > n) break;
                mpz_submul(acc.get_mpz_t(), pj->get_mpz_t(), cv[n - j].get_mpz_t());
            }
            cv[n] = (b0 == 1) ? acc : mpz_class(-acc);
        }
        return c;
    }

    const uint64_t m = a.modulus();
    const auto& av = a.res_data();
    const auto& bv = b.res_data();
    uint64_t u = inv_mod(bv[0], m);
    if (u == 0)
        throw std::domain_error("division by series with non-invertible constant term");
    std::vector<SparseTerm> nz;
    for (std::size_t j = 1; j < t; ++j)
        if (bv[j] != 0) nz.push_back({j, bv[j]});
    auto& cv = c.res_data();
    for (std::size_t n = 0; n < t; ++n) {
        uint64_t acc = av[n];
        for (const auto& s : nz) {
            if (s.exp > n) break;
            uint64_t prod = s.coeff == 1
                                ? cv[n - s.exp]
                                : (s.coeff == m - 1 ? sub_mod(0, cv[n - s.exp], m)
                                                    : mul_mod(s.coeff, cv[n - s.exp], m));
            acc = sub_mod(acc, prod, m);
        }
        cv[n] = u == 1 ? acc : mul_mod(u, acc, m);
    }
    return c;
}

TruncatedSeries pow(const TruncatedSeries& a, uint64_t e) {
    TruncatedSeries result = make_constant(1, a.trunc(), a.modulus());
    if (e == 0) return result;
    TruncatedSeries base = a;
    while (true) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e == 0) break;
        base = mul(base, base);
    }
    return result;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_same_modulus(a, b);
    std::size_t t = std::min(a.trunc(), b.trunc());
    TruncatedSeries c(a.modulus(), t);
    if (a.exact()) {
        for (std::size_t i = 0; i < t; ++i)
            c.exact_data()[i] = a.exact_data()[i] + b.exact_data()[i];
    } else {
        for (std::size_t i = 0; i < t; ++i)
            c.res_data()[i] = add_mod(a.res_data()[i], b.res_data()[i], a.modulus());
    }
    return c;
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_same_modulus(a, b);
    std::size_t t = std::min(a.trunc(), b.trunc());
    TruncatedSeries c(a.modulus(), t);
    if (a.exact()) {
        for (std::size_t i = 0; i < t; ++i)
            c.exact_data()[i] = a.exact_data()[i] - b.exact_data()[i];
    } else {
        for (std::size_t i = 0; i < t; ++i)
            c.res_data()[i] = sub_mod(a.res_data()[i], b.res_data()[i], a.modulus());
    }
    return c;
}

TruncatedSeries scale_exponents(const TruncatedSeries& a, std::size_t d,
                                std::size_t cap) {
    if (d == 0) throw std::invalid_argument("exponent scale must be positive");
    std::size_t t = a.trunc() * d;
    if (cap > 0) t = std::min(t, cap);
    TruncatedSeries c(a.modulus(), t);
    for (std::size_t n = 0; n * d < t && n < a.trunc(); ++n) {
        if (a.exact())
            c.exact_data()[n * d] = a.exact_data()[n];
        else
            c.res_data()[n * d] = a.res_data()[n];
    }
    return c;
}

TruncatedSeries reduce_mod(const TruncatedSeries& a, uint64_t m) {
    if (m < 2 || m > kMaxModulus)
        throw std::invalid_argument("reduction modulus must be in [2, 2^62)");
    TruncatedSeries c(m, a.trunc());
    if (a.exact()) {
        for (std::size_t i = 0; i < a.trunc(); ++i)
            c.res_data()[i] = reduce_mpz(a.exact_data()[i], m);
    } else {
        if (a.modulus() % m != 0)
            throw std::invalid_argument(
                "residue series can only be reduced to a divisor of its modulus");
        for (std::size_t i = 0; i < a.trunc(); ++i)
            c.res_data()[i] = a.res_data()[i] % m;
    }
    return c;
}

bool prefix_equal(const TruncatedSeries& a, const TruncatedSeries& b,
                  std::size_t n) {
    if (a.modulus() != b.modulus()) return false;
    if (n > a.trunc() || n > b.trunc())
        throw std::out_of_range("prefix length exceeds truncation");
    for (std::size_t i = 0; i < n; ++i) {
        if (a.exact()) {
            if (a.exact_data()[i] != b.exact_data()[i]) return false;
        } else {
            if (a.res_data()[i] != b.res_data()[i]) return false;
        }
    }
    return true;
}

}  // namespace tcore
