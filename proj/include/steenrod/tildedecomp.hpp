#pragma once

// Support decomposition of the pure x_i d_i^{k+1} kernel: multiplication by
// the full variable product intertwines the tilde and hat families, so the
// kernel splits as a direct sum over variable subsets y of e_y times the hat
// kernel in the variables y.

#include <map>
#include <vector>

#include <steenrod/families.hpp>
#include <steenrod/hilbert.hpp>
#include <steenrod/kernel.hpp>

namespace steenrod {

/// Terms grouped by the set of variables with positive exponent, each divided
/// by the product of its support: f = sum_y e_y f_y with f_y free of the
/// variables outside y.  Unique for any polynomial.
template <class S>
std::map<ExpVec, MultiPoly<S>> support_split(const MultiPoly<S>& f) {
    std::map<ExpVec, MultiPoly<S>> out;
    int nv = f.nvars();
    for (const auto& [e, c] : f.terms()) {
        ExpVec y(nv, 0);
        for (int i = 0; i < nv; ++i) y[i] = e[i] > 0 ? 1 : 0;
        auto [it, fresh] = out.emplace(y, MultiPoly<S>(nv));
        it->second.add_term(exp_sub(e, y), c);
    }
    return out;
}

struct TildeDecompositionReport {
    bool operator_identity = false;  // T_k e = e H_k as operators
    bool hilbert_assembled = false;  // tilde series from the per-subset hat series
    bool supports_split = false;     // every basis element splits into hat pieces
    UPoly tilde_hilbert, assembled_hilbert;
    bool ok() const { return operator_identity && hilbert_assembled && supports_split; }
};

/// Check the decomposition at n variables, solving through degree cap.  The
/// cap should reach the top tilde degree n(n+1)/2 for the series comparison
/// to be exhaustive.
inline TildeDecompositionReport decomposition_check_tilde(int n, int cap) {
    TildeDecompositionReport rep;
    auto tilde = family_tilde<Rational>(n);
    auto hat = family_hat<Rational>(n);

    MultiPoly<Rational> ex = MultiPoly<Rational>::monomial(n, ExpVec(n, 1), Rational(1));
    auto mult = DiffOperator<Rational>::multiplication(ex);
    rep.operator_identity = true;
    for (int k = 1; k <= 4; ++k)
        if (!(compose(tilde.member(k), mult) == compose(mult, hat.member(k))))
            rep.operator_identity = false;

    auto K = solve_kernel(tilde, cap);
    rep.tilde_hilbert = K.hilbert();
    UPoly acc;
    for (int k = 0; k <= n; ++k) {
        UPoly hk = k == 0 ? UPoly(1)
                          : solve_kernel(family_hat<Rational>(k), std::max(cap - k, 0)).hilbert();
        acc += UPoly::monomial(k, Rational(int_binomial(n, k))) * hk;
    }
    rep.assembled_hilbert = truncate_series(acc, cap);
    rep.hilbert_assembled = truncate_series(rep.tilde_hilbert, cap) == rep.assembled_hilbert;

    // Members over variables outside the support act as zero, so applying the
    // full-family hat members to each piece checks hat-membership in its own
    // variable set.
    rep.supports_split = true;
    for (const auto& level : K.graded)
        for (const auto& b : level)
            for (const auto& [y, g] : support_split(b)) {
                int top = 0;
                for (const auto& [e, c] : g.terms()) top = std::max(top, exp_degree(e));
                for (int k = 1; k <= top; ++k)
                    if (!hat.member(k).apply(g).is_zero()) rep.supports_split = false;
            }
    return rep;
}

}  // namespace steenrod
