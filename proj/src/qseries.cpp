#include "tcore/qseries.hpp"

namespace tcore {

namespace {

// Multiply acc by f_base^e (e may be negative, meaning division). Each
// step multiplies or divides by the sparse pentagonal series once, so
// the cost stays O(|e| * T * nnz(f_base)).
TruncatedSeries apply_euler_power(TruncatedSeries acc, uint64_t base, long e) {
    if (e == 0) return acc;
    TruncatedSeries f = euler_f(base, acc.trunc(), acc.modulus());
    for (long i = 0; i < (e > 0 ? e : -e); ++i)
        acc = e > 0 ? mul(acc, f) : div(acc, f);
    return acc;
}

TruncatedSeries euler_quotient(
    const std::vector<std::pair<uint64_t, long>>& factors, std::size_t trunc,
    uint64_t modulus) {
    TruncatedSeries acc = make_constant(1, trunc, modulus);
    for (const auto& [base, e] : factors) acc = apply_euler_power(acc, base, e);
    return acc;
}

}  // namespace

TruncatedSeries euler_f(uint64_t nscale, std::size_t trunc, uint64_t modulus) {
    if (nscale == 0) throw std::invalid_argument("euler_f requires nscale >= 1");
    TruncatedSeries s(modulus, trunc);
    s.set_coeff(0, 1);
    // Generalized pentagonal exponents j(3j-1)/2 for j = 1, -1, 2, -2, ...
    for (uint64_t j = 1;; ++j) {
        uint64_t g1 = j * (3 * j - 1) / 2;
        uint64_t g2 = j * (3 * j + 1) / 2;
        if (g1 * nscale >= trunc) break;
        long sign = (j % 2 == 0) ? 1 : -1;
        s.add_to_coeff(g1 * nscale, sign);
        if (g2 * nscale < trunc) s.add_to_coeff(g2 * nscale, sign);
    }
    return s;
}

TruncatedSeries phi_neg_sum(std::size_t trunc, uint64_t modulus) {
    TruncatedSeries s(modulus, trunc);
    s.set_coeff(0, 1);
    for (uint64_t n = 1; n * n < trunc; ++n)
        s.add_to_coeff(n * n, (n % 2 == 0) ? 2 : -2);
    return s;
}

TruncatedSeries psi_neg_sum(std::size_t trunc, uint64_t modulus) {
    TruncatedSeries s(modulus, trunc);
    // j(2j-1) runs over the triangular numbers once each as j ranges
    // over all integers; the sign is (-1)^j.
    s.set_coeff(0, 1);
    for (uint64_t j = 1;; ++j) {
        uint64_t e1 = j * (2 * j - 1);
        uint64_t e2 = j * (2 * j + 1);
        if (e1 >= trunc) break;
        long sign = (j % 2 == 0) ? 1 : -1;
        s.add_to_coeff(e1, sign);
        if (e2 < trunc) s.add_to_coeff(e2, sign);
    }
    return s;
}

TruncatedSeries phi_neg(std::size_t trunc, uint64_t modulus) {
    TruncatedSeries prod =
        euler_quotient({{1, 2}, {2, -1}}, trunc, modulus);  // f_1^2 / f_2
    if (!(prod == phi_neg_sum(trunc, modulus)))
        throw std::logic_error("phi(-q): sum form and product form disagree");
    return prod;
}

TruncatedSeries psi_neg(std::size_t trunc, uint64_t modulus) {
    TruncatedSeries prod =
        euler_quotient({{1, 1}, {4, 1}, {2, -1}}, trunc, modulus);  // f_1 f_4 / f_2
    if (!(prod == psi_neg_sum(trunc, modulus)))
        throw std::logic_error("psi(-q): sum form and product form disagree");
    return prod;
}

TruncatedSeries f_neg(std::size_t trunc, uint64_t modulus) {
    return euler_f(1, trunc, modulus);
}

TruncatedSeries ct_series(uint64_t t, std::size_t trunc, uint64_t modulus) {
    if (t < 2) throw std::invalid_argument("ct_series requires t >= 2");
    return euler_quotient({{t, static_cast<long>(t)}, {1, -1}}, trunc, modulus);
}

TruncatedSeries abar_series(uint64_t t, std::size_t trunc, uint64_t modulus) {
    if (t < 1) throw std::invalid_argument("abar_series requires t >= 1");
    long lt = static_cast<long>(t);
    return euler_quotient(
        {{2, 1}, {t, 2 * lt}, {1, -2}, {2 * t, -lt}}, trunc, modulus);
}

TruncatedSeries bbar_series(uint64_t t, std::size_t trunc, uint64_t modulus) {
    if (t < 1) throw std::invalid_argument("bbar_series requires t >= 1");
    long lt = static_cast<long>(t);
    TruncatedSeries prod = euler_quotient(
        {{2, 1}, {t, lt}, {4 * t, lt}, {1, -1}, {4, -1}, {2 * t, -lt}}, trunc,
        modulus);

    // Independent route: psi(-q^t)^t / psi(-q) with both psi factors
    // filled from the theta sum form.
    TruncatedSeries psi_t =
        scale_exponents(psi_neg_sum(trunc, modulus), t, trunc);
    TruncatedSeries num = make_constant(1, trunc, modulus);
    for (uint64_t i = 0; i < t; ++i) num = mul(num, psi_t);
    TruncatedSeries theta = div(num, psi_neg_sum(trunc, modulus));
    if (!(prod == theta))
        throw std::logic_error("bbar_series: product form and theta form disagree");
    return prod;
}

}  // namespace tcore
