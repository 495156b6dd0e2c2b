#pragma once

// Garnir polynomials: products of variable differences over the columns of
// a filled tableau, and the lower bound they give on kernel Hilbert series.

#include <steenrod/hilbert.hpp>
#include <steenrod/kernel.hpp>
#include <steenrod/partitions.hpp>

namespace steenrod {

/// Product of (x_{a-1} - x_{b-1}) over pairs a above b in one column.
/// Entries must be a bijection onto 1..n; degree comes out as n(shape).
inline MultiPoly<Rational> garnir(const std::vector<std::vector<int>>& rows) {
    int n = 0;
    for (const auto& r : rows) n += static_cast<int>(r.size());
    std::vector<char> seen(n + 1, 0);
    for (const auto& r : rows)
        for (int v : r) {
            if (v < 1 || v > n || seen[v])
                throw std::invalid_argument("garnir: filling is not a bijection onto 1..n");
            seen[v] = 1;
        }
    MultiPoly<Rational> out = MultiPoly<Rational>::constant(n, Rational(1));
    std::size_t width = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < width; ++c) {
        std::vector<int> column;
        for (const auto& r : rows)
            if (c < r.size()) column.push_back(r[c]);
        for (std::size_t i = 0; i < column.size(); ++i)
            for (std::size_t j = i + 1; j < column.size(); ++j) {
                MultiPoly<Rational> diff = MultiPoly<Rational>::variable(n, column[i] - 1) -
                                           MultiPoly<Rational>::variable(n, column[j] - 1);
                out = out * diff;
            }
    }
    return out;
}

inline MultiPoly<Rational> garnir(const StandardTableau& tau) { return garnir(tau.rows); }

/// sum over shapes of (number of standard tableaux) t^{n(shape)}.
inline UPoly garnir_degree_series(int n) {
    UPoly out;
    for (const auto& lam : partitions_of(n))
        out += UPoly::monomial(partition_n_stat(lam), Rational(syt_count(lam)));
    return out;
}

struct GarnirBoundReport {
    bool annihilated = false;  // every family member kills every Garnir polynomial
    bool bounded = false;      // degree series <= kernel Hilbert series, coefficientwise
    UPoly lower;
    UPoly kernel_hilbert;
};

/// Checks that the Garnir polynomials of standard tableaux lie in the
/// kernel of a symmetric family, and that their degree series bounds the
/// kernel Hilbert series from below.
template <class S>
GarnirBoundReport garnir_lower_bound(const OperatorFamily<S>& fam, int member_cap,
                                     KernelMode mode = KernelMode::automatic) {
    if (!fam.symmetric)
        throw std::invalid_argument("garnir_lower_bound: family is not symmetric");
    int n = fam.nv;
    int top = n * (n - 1) / 2;
    GarnirBoundReport rep;
    rep.annihilated = true;
    for (const auto& lam : partitions_of(n))
        for (const auto& tau : standard_tableaux(lam)) {
            auto delta = map_coeffs<S>(garnir(tau), [](const Rational& c) { return S(c); });
            for (int k : fam.ks_for_degree(member_cap, false))
                if (!fam.member(k).apply(delta).is_zero()) rep.annihilated = false;
        }
    rep.lower = garnir_degree_series(n);
    rep.kernel_hilbert = solve_kernel(fam, top, mode).hilbert();
    rep.bounded = coefficientwise_leq(rep.lower, rep.kernel_hilbert);
    return rep;
}

}  // namespace steenrod
