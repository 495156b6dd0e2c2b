#pragma once

// Weighted power sums phi_m = sum_i a_i x_i^m, the ideals they generate,
// and the three equivalent regularity criteria: nonvanishing subset sums,
// pure-power membership, and termination of the quotient Hilbert series.

#include <steenrod/kernel.hpp>

namespace steenrod {

/// e_r(x_1..x_nv) by the product recurrence.
template <class S>
MultiPoly<S> elementary_symmetric(int nv, int r) {
    if (r < 0 || r > nv) return MultiPoly<S>(nv);
    std::vector<MultiPoly<S>> e;
    e.push_back(MultiPoly<S>::constant(nv, scalar_one<S>()));
    for (int j = 1; j <= nv; ++j) e.push_back(MultiPoly<S>(nv));
    for (int i = 0; i < nv; ++i) {
        MultiPoly<S> xi = MultiPoly<S>::variable(nv, i);
        for (int j = std::min(i + 1, r); j >= 1; --j) e[j] = e[j] + e[j - 1] * xi;
    }
    return e[r];
}

template <class S>
struct PhiFamily {
    std::vector<S> a;

    int nvars() const { return static_cast<int>(a.size()); }

    /// sum_i a_i x_i^m.
    MultiPoly<S> phi(int m) const {
        if (m < 0) throw std::invalid_argument("PhiFamily: negative power");
        int nv = nvars();
        MultiPoly<S> p(nv);
        for (int i = 0; i < nv; ++i) {
            ExpVec e(nv, 0);
            e[i] = m;
            p = p + MultiPoly<S>::monomial(nv, e, a[i]);
        }
        return p;
    }
};

/// phi_m = sum_{r=1}^n (-1)^{r+1} e_r phi_{m-r}, returned as (coeff, index)
/// pairs; only valid for m > n.
template <class S>
std::vector<std::pair<MultiPoly<S>, int>> phi_reduce(int m, const PhiFamily<S>& F) {
    int n = F.nvars();
    if (m <= n) throw std::invalid_argument("phi_reduce: index must exceed the variable count");
    std::vector<std::pair<MultiPoly<S>, int>> terms;
    for (int r = 1; r <= n; ++r) {
        MultiPoly<S> e = elementary_symmetric<S>(n, r);
        if (r % 2 == 0) e = e.scale(Rational(-1));
        terms.emplace_back(std::move(e), m - r);
    }
    return terms;
}

/// Unfold the reduction: coefficients c_1..c_n with phi_m = sum_j c_j phi_j.
template <class S>
std::vector<MultiPoly<S>> phi_in_base_ideal(int m, const PhiFamily<S>& F) {
    int n = F.nvars();
    if (m < 1) throw std::invalid_argument("phi_in_base_ideal: index must be positive");
    std::vector<std::vector<MultiPoly<S>>> table;  // table[j] = coeffs of phi_{j+1}
    for (int j = 1; j <= std::min(m, n); ++j) {
        std::vector<MultiPoly<S>> row(n, MultiPoly<S>(n));
        row[j - 1] = MultiPoly<S>::constant(n, scalar_one<S>());
        table.push_back(std::move(row));
    }
    for (int j = n + 1; j <= m; ++j) {
        std::vector<MultiPoly<S>> row(n, MultiPoly<S>(n));
        for (const auto& [coeff, idx] : phi_reduce(j, F))
            for (int i = 0; i < n; ++i) row[i] = row[i] + coeff * table[idx - 1][i];
        table.push_back(std::move(row));
    }
    return table[m - 1];
}

struct SubsetSumReport {
    bool regular = false;
    std::vector<int> witness;  // 1-based indices of a vanishing subset, if any
};

/// Every nonempty subset of the weights must have nonzero sum.
template <class S>
SubsetSumReport subset_sum_regularity(const std::vector<S>& a) {
    int n = static_cast<int>(a.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        S sum{};
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) sum += a[i];
        if (sum.is_zero()) {
            SubsetSumReport rep;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) rep.witness.push_back(i + 1);
            return rep;
        }
    }
    return SubsetSumReport{true, {}};
}

/// Rows spanning the degree-d piece of (phi_k, .., phi_{k+n-1}).
template <class S>
std::vector<std::vector<S>> ideal_degree_rows(int k, const PhiFamily<S>& F, int d,
                                              const std::vector<ExpVec>& mons) {
    int n = F.nvars();
    std::vector<std::vector<S>> rows;
    for (int j = k; j <= k + n - 1; ++j) {
        if (j > d) continue;
        MultiPoly<S> gen = F.phi(j);
        for (const auto& e : monomials_of_degree(n, d - j)) {
            MultiPoly<S> prod = gen * MultiPoly<S>::monomial(n, e, scalar_one<S>());
            rows.push_back(poly_to_vec(prod, mons));
        }
    }
    return rows;
}

/// Exact rank test for membership of a homogeneous f in Phi_n^k.
template <class S>
bool ideal_membership(const MultiPoly<S>& f, int k, const PhiFamily<S>& F) {
    if (f.is_zero()) return true;
    int d = 0;
    for (const auto& [e, c] : f.terms()) {
        int deg = 0;
        for (int x : e) deg += x;
        d = std::max(d, deg);
    }
    if (!(f.graded_component(d) == f))
        throw std::invalid_argument("ideal_membership: polynomial is not homogeneous");
    auto mons = monomials_of_degree(F.nvars(), d);
    auto rows = ideal_degree_rows(k, F, d, mons);
    int base = rank_rows<S>(rows, static_cast<int>(mons.size()));
    rows.push_back(poly_to_vec(f, mons));
    return rank_rows<S>(rows, static_cast<int>(mons.size())) == base;
}

struct QuotientReport {
    std::vector<int> dims;    // quotient dimensions, degrees 0..cap
    bool terminated = false;  // a zero dimension was reached
    Integer total = 0;        // sum of the dims up to the cap
};

/// Dimensions of F[x]/Phi_n^k per degree; a single zero certifies
/// termination since the quotient is generated in degree zero.
template <class S>
QuotientReport quotient_hilbert(int k, const PhiFamily<S>& F, int cap) {
    QuotientReport rep;
    for (int d = 0; d <= cap; ++d) {
        auto mons = monomials_of_degree(F.nvars(), d);
        auto rows = ideal_degree_rows(k, F, d, mons);
        int dim = static_cast<int>(mons.size()) - rank_rows<S>(rows, static_cast<int>(mons.size()));
        rep.dims.push_back(dim);
        rep.total += dim;
        if (dim == 0) {
            rep.terminated = true;
            break;
        }
    }
    return rep;
}

/// [k]_t [k+1]_t ... [k+n-1]_t.
inline UPoly quotient_hilbert_formula(int k, int n) {
    UPoly p(1);
    for (int j = 0; j < n; ++j) p = p * t_int(k + j);
    return p;
}

/// Degree past which a regular quotient at shift k must vanish.
inline int quotient_decision_cap(int k, int n) { return n * (k - 1) + n * (n - 1) / 2 + 1; }

/// Regularity decided by quotient termination within the decision cap.
template <class S>
bool quotient_regular(int k, const PhiFamily<S>& F) {
    return quotient_hilbert(k, F, quotient_decision_cap(k, F.nvars())).terminated;
}

struct ShiftReport {
    bool regular_at_k = false;
    bool regular_at_1 = false;
    bool agree = false;
};

/// Regularity at shift k stands or falls with regularity at shift 1; the
/// cap bounds the sweep at shift k, shift 1 uses its own bound.
template <class S>
ShiftReport shift_equivalence_check(int k, const PhiFamily<S>& F, int cap) {
    ShiftReport rep;
    rep.regular_at_k = quotient_hilbert(k, F, cap).terminated;
    rep.regular_at_1 = quotient_regular(1, F);
    rep.agree = rep.regular_at_k == rep.regular_at_1;
    return rep;
}

}  // namespace steenrod
