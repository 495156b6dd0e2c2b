#pragma once

// Graded dimension bookkeeping.  Series that are genuinely infinite are
// handled as truncations to an explicit degree cap.

#include <steenrod/upoly.hpp>

namespace steenrod {

inline UPoly truncate_series(const UPoly& p, int cap) {
    std::vector<Rational> c;
    for (int d = 0; d <= cap && d <= p.degree(); ++d) c.push_back(p.coeff(d));
    return UPoly(c);
}

inline UPoly series_mul(const UPoly& a, const UPoly& b, int cap) {
    return truncate_series(a * b, cap);
}

/// 1/(1-t)^m through degree cap.
inline UPoly geometric_power(int m, int cap) {
    if (m < 0) throw std::invalid_argument("geometric_power: negative exponent");
    std::vector<Rational> c;
    c.reserve(cap + 1);
    for (int d = 0; d <= cap; ++d) c.emplace_back(int_binomial(m - 1 + d, d));
    return UPoly(c);
}

/// Every coefficient of a bounded by the matching coefficient of b.
inline bool coefficientwise_leq(const UPoly& a, const UPoly& b) {
    int top = std::max(a.degree(), b.degree());
    for (int d = 0; d <= top; ++d)
        if (a.coeff(d) > b.coeff(d)) return false;
    return true;
}

/// sum_k binom(n,k) t^k [k]!_t -- the predicted graded dimensions for the
/// pure x_i d_i^{k+1} family.
inline UPoly predicted_tilde_hilbert(int n) {
    UPoly acc;
    for (int k = 0; k <= n; ++k)
        acc += UPoly::monomial(k, Rational(int_binomial(n, k))) * t_factorial(k);
    return acc;
}

/// n! sum_k 1/k!, the value of the series above at t = 1.
inline Integer predicted_tilde_total(int n) {
    Integer acc = 0;
    for (int k = 0; k <= n; ++k) acc += int_factorial(n) / int_factorial(k);
    return acc;
}

}  // namespace steenrod
