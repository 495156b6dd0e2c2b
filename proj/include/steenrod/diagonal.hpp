#pragma once

// Two-set harmonics: bigraded common zeros of sum a_i dx_i^k dy_i^j, the apex
// generator of the one-set weighted kernel, its antisymmetrizer expression,
// and the kernel of the general order-two/order-three operator pair.

#include <steenrod/kernel.hpp>
#include <steenrod/prat.hpp>
#include <steenrod/regseq.hpp>

#include <optional>
#include <queue>

namespace steenrod {

/// sum_i a_i dx_i^k dy_i^j on n pairs of variables; x first, y second.
inline DiffOperator<Rational> diagonal_operator(int n, const std::vector<Rational>& a, int k,
                                                int j) {
    DiffOperator<Rational> d(2 * n);
    for (int i = 0; i < n; ++i) {
        ExpVec de(2 * n, 0);
        de[i] = k;
        de[n + i] = j;
        d.add_term(ExpVec(2 * n, 0), de, a.at(i));
    }
    return d;
}

/// E_k = sum_i y_i dx_i^k, the x-to-y raising operators.
inline DiffOperator<Rational> diagonal_ek(int n, int k) {
    DiffOperator<Rational> d(2 * n);
    for (int i = 0; i < n; ++i) {
        ExpVec xe(2 * n, 0), de(2 * n, 0);
        xe[n + i] = 1;
        de[i] = k;
        d.add_term(xe, de, Rational(1));
    }
    return d;
}

/// A polynomial in the first set alone, widened to both sets.
inline MultiPoly<Rational> embed_first_set(const MultiPoly<Rational>& f) {
    int n = f.nvars();
    MultiPoly<Rational> r(2 * n);
    for (const auto& [e, c] : f.terms()) {
        ExpVec w(2 * n, 0);
        for (int i = 0; i < n; ++i) w[i] = e[i];
        r.add_term(w, c);
    }
    return r;
}

/// Monomials of x-degree dx and y-degree dy, x block enumerated outermost.
inline std::vector<ExpVec> bidegree_monomials(int n, int dx, int dy) {
    std::vector<ExpVec> out;
    for (const auto& ex : monomials_of_degree(n, dx))
        for (const auto& ey : monomials_of_degree(n, dy)) {
            ExpVec e(ex);
            e.insert(e.end(), ey.begin(), ey.end());
            out.push_back(std::move(e));
        }
    return out;
}

/// (x-degree, y-degree) of a bihomogeneous polynomial; nullopt for zero.
inline std::optional<std::pair<int, int>> bidegree_of(const MultiPoly<Rational>& f, int n) {
    std::optional<std::pair<int, int>> bd;
    for (const auto& [e, c] : f.terms()) {
        int dx = 0, dy = 0;
        for (int i = 0; i < n; ++i) dx += e[i];
        for (int i = n; i < 2 * n; ++i) dy += e[i];
        if (bd && *bd != std::make_pair(dx, dy))
            throw std::invalid_argument("bidegree_of: polynomial is not bihomogeneous");
        bd = {dx, dy};
    }
    return bd;
}

struct BiGradedKernel {
    int n = 0;
    int cap = 0;            // total degree swept
    bool certified = false; // two consecutive empty antidiagonals inside the cap
    std::map<std::pair<int, int>, std::vector<MultiPoly<Rational>>> bases;

    int dim(int dx, int dy) const {
        auto it = bases.find({dx, dy});
        return it == bases.end() ? 0 : static_cast<int>(it->second.size());
    }
    Integer total() const {
        Integer t = 0;
        for (const auto& [bd, basis] : bases) t += Integer(static_cast<long>(basis.size()));
        return t;
    }
    /// Dimensions as a rectangle covering the support, rows dx, columns dy.
    std::vector<std::vector<int>> table() const {
        int rows = 0, cols = 0;
        for (const auto& [bd, basis] : bases) {
            rows = std::max(rows, bd.first + 1);
            cols = std::max(cols, bd.second + 1);
        }
        std::vector<std::vector<int>> t(rows, std::vector<int>(cols, 0));
        for (const auto& [bd, basis] : bases)
            t[bd.first][bd.second] = static_cast<int>(basis.size());
        return t;
    }
};

namespace detail {

inline std::vector<MultiPoly<Rational>> diagonal_cell_kernel(int n,
                                                             const std::vector<Rational>& a,
                                                             int dx, int dy) {
    auto mons = bidegree_monomials(n, dx, dy);
    std::vector<std::vector<Rational>> rows;
    for (int k = 0; k <= dx; ++k)
        for (int j = 0; j <= dy; ++j) {
            if (k + j == 0) continue;
            auto D = diagonal_operator(n, a, k, j);
            std::map<ExpVec, std::size_t> target;
            std::vector<std::vector<Rational>> local;
            for (std::size_t m = 0; m < mons.size(); ++m) {
                auto img = D.apply(MultiPoly<Rational>::monomial(2 * n, mons[m], Rational(1)));
                for (const auto& [e, c] : img.terms()) {
                    auto it = target.find(e);
                    if (it == target.end()) {
                        it = target.emplace(e, local.size()).first;
                        local.emplace_back(mons.size(), Rational{});
                    }
                    local[it->second][m] = c;
                }
            }
            for (auto& r : local) rows.push_back(std::move(r));
        }
    std::vector<MultiPoly<Rational>> basis;
    for (const auto& v : kernel_basis<Rational>(rows, static_cast<int>(mons.size())))
        basis.push_back(vec_to_poly(v, mons, 2 * n));
    return basis;
}

}  // namespace detail

/// Sweep antidiagonals of total degree up to cap; stops once two consecutive
/// empty antidiagonals certify that nothing lives beyond (the kernel is closed
/// under single derivatives, so a gap of two cannot be jumped).
inline BiGradedKernel solve_diagonal(int n, const std::vector<Rational>& a, int cap) {
    BiGradedKernel K;
    K.n = n;
    K.cap = cap;
    int empty_run = 0;
    for (int s = 0; s <= cap; ++s) {
        bool empty = true;
        for (int dx = 0; dx <= s; ++dx) {
            auto basis = detail::diagonal_cell_kernel(n, a, dx, s - dx);
            if (!basis.empty()) {
                K.bases[{dx, s - dx}] = std::move(basis);
                empty = false;
            }
        }
        empty_run = empty ? empty_run + 1 : 0;
        if (empty_run == 2) {
            K.certified = true;
            break;
        }
    }
    return K;
}

/// Membership of a bihomogeneous polynomial in the computed kernel span.
inline bool in_diagonal_span(const BiGradedKernel& K, const MultiPoly<Rational>& f) {
    auto bd = bidegree_of(f, K.n);
    if (!bd) return true;
    auto it = K.bases.find(*bd);
    if (it == K.bases.end()) return false;
    auto mons = bidegree_monomials(K.n, bd->first, bd->second);
    std::vector<std::vector<Rational>> rows;
    for (const auto& b : it->second) rows.push_back(poly_to_vec(b, mons));
    auto piv = rref_field(rows, static_cast<int>(mons.size()));
    return solve_in_span(rows, piv, poly_to_vec(f, mons)).has_value();
}

template <class S>
struct ApexPolynomial {
    int n = 0;
    std::vector<S> a;
    MultiPoly<S> poly = MultiPoly<S>(0);
};

/// Generator of the top-degree component of the weighted one-set kernel,
/// scaled so the staircase monomial x_1^(n-1) x_2^(n-2) ... has coefficient
/// one; at equal weights this is exactly the Vandermonde determinant.
template <class S>
ApexPolynomial<S> apex_polynomial(int n, const std::vector<S>& a) {
    if (static_cast<int>(a.size()) != n)
        throw std::invalid_argument("apex_polynomial: weight count mismatch");
    if (!subset_sum_regularity(a).regular)
        throw std::invalid_argument("apex_polynomial: a subset of the weights sums to zero");
    int top = n * (n - 1) / 2;
    auto ker = solve_kernel(family_weighted_laplacian<S>(n, a), top);
    if (ker.graded[top].size() != 1)
        throw std::logic_error("apex_polynomial: top component is not a line");
    const MultiPoly<S>& gen = ker.graded[top][0];
    ExpVec stair(n, 0);
    for (int i = 0; i < n; ++i) stair[i] = n - 1 - i;
    auto it = gen.terms().find(stair);
    if (it == gen.terms().end() || it->second.is_zero())
        throw std::logic_error("apex_polynomial: staircase coefficient vanished");
    ApexPolynomial<S> apex;
    apex.n = n;
    apex.a = a;
    apex.poly = gen * (scalar_one<S>() / it->second);
    return apex;
}

struct EkClosureReport {
    bool closed_under_ek = false;        // E_k keeps every kernel element inside
    bool closed_under_partials = false;  // so does each single derivative
    int apex_span_dim = 0;               // derivative-and-E_k closure of the apex
    bool apex_span_contained = false;    // that closure sits inside the kernel
};

/// Closure checks for the two-set kernel and the span generated by the apex.
inline EkClosureReport ek_closure_check(int n, const std::vector<Rational>& a, int cap) {
    EkClosureReport rep;
    BiGradedKernel K = solve_diagonal(n, a, cap);
    int kmax = n * (n - 1) / 2;

    rep.closed_under_ek = true;
    rep.closed_under_partials = true;
    for (const auto& [bd, basis] : K.bases)
        for (const auto& f : basis) {
            for (int k = 1; k <= bd.first; ++k)
                if (!in_diagonal_span(K, diagonal_ek(n, k).apply(f))) rep.closed_under_ek = false;
            for (int v = 0; v < 2 * n; ++v) {
                ExpVec de(2 * n, 0);
                de[v] = 1;
                auto img = DiffOperator<Rational>::monomial(2 * n, ExpVec(2 * n, 0), de, Rational(1))
                               .apply(f);
                if (!in_diagonal_span(K, img)) rep.closed_under_partials = false;
            }
        }

    // grow the span of the apex under derivatives and the E_k's
    std::map<std::pair<int, int>, std::pair<std::vector<std::vector<Rational>>, std::vector<int>>>
        span;
    std::queue<MultiPoly<Rational>> work;
    rep.apex_span_contained = true;
    auto insert = [&](const MultiPoly<Rational>& f) {
        auto bd = bidegree_of(f, n);
        if (!bd) return;
        auto mons = bidegree_monomials(n, bd->first, bd->second);
        auto& [rows, piv] = span[*bd];
        auto v = poly_to_vec(f, mons);
        if (solve_in_span(rows, piv, v)) return;
        rows.push_back(std::move(v));
        piv = rref_field(rows, static_cast<int>(mons.size()));
        ++rep.apex_span_dim;
        if (!in_diagonal_span(K, f)) rep.apex_span_contained = false;
        work.push(f);
    };
    insert(embed_first_set(apex_polynomial<Rational>(n, a).poly));
    while (!work.empty()) {
        MultiPoly<Rational> f = work.front();
        work.pop();
        for (int v = 0; v < 2 * n; ++v) {
            ExpVec de(2 * n, 0);
            de[v] = 1;
            insert(DiffOperator<Rational>::monomial(2 * n, ExpVec(2 * n, 0), de, Rational(1))
                       .apply(f));
        }
        for (int k = 1; k <= kmax; ++k) insert(diagonal_ek(n, k).apply(f));
    }
    return rep;
}

/// Signed sum over all simultaneous permutations of the variables and of the
/// coefficient parameters.
template <class S>
MultiPoly<S> antisymmetrize(const MultiPoly<S>& f) {
    int nv = f.nvars();
    std::vector<int> perm(nv);
    for (int i = 0; i < nv; ++i) perm[i] = i;
    MultiPoly<S> out(nv);
    do {
        int inv = 0;
        for (int i = 0; i < nv; ++i)
            for (int j = i + 1; j < nv; ++j)
                if (perm[i] > perm[j]) ++inv;
        auto g = map_coeffs<S>(f.permuted(perm), [&perm](const S& c) { return c.permuted(perm); });
        out = out + g.scale(inv % 2 == 0 ? Rational(1) : Rational(-1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// The two-term seed whose antisymmetrization rebuilds the three-variable
/// apex in its display normalization 2 x1^2 x2 / (a1 (a1 + a2)) + ...
inline MultiPoly<PRat<3>> apex_seed_3() {
    using P = MultiPoly<Rational>;
    P a0 = P::variable(3, 0), a1 = P::variable(3, 1), a2 = P::variable(3, 2);
    MultiPoly<PRat<3>> seed(3);
    seed.add_term({2, 1, 0}, PRat<3>(P::constant(3, Rational(2)), a0 * (a0 + a1)));
    seed.add_term({3, 0, 0},
                  PRat<3>(a2 - a1, (a0 * (a0 + a1) * (a0 + a2)).scale(Rational(3))));
    return seed;
}

struct AntisymmetrizerReport {
    bool rebuilds_apex = false;       // antisymmetrized seed equals the scaled apex
    bool kills_symmetric = false;     // symmetric input collapses to zero
    bool composes_to_order = false;   // applying it twice multiplies by 3!
};

/// Antisymmetrizer facts for three variables with the weights left symbolic.
inline AntisymmetrizerReport antisymmetrizer_identity() {
    using P = MultiPoly<Rational>;
    AntisymmetrizerReport rep;
    std::vector<PRat<3>> a = {PRat<3>::var(0), PRat<3>::var(1), PRat<3>::var(2)};
    auto apex = apex_polynomial<PRat<3>>(3, a);
    P a0 = P::variable(3, 0), a1 = P::variable(3, 1);
    // the display scales the staircase coefficient to 2 / (a1 (a1 + a2))
    auto display = apex.poly * PRat<3>(P::constant(3, Rational(2)), a0 * (a0 + a1));
    auto seed = apex_seed_3();
    auto anti = antisymmetrize(seed);
    rep.rebuilds_apex = anti == display;

    MultiPoly<PRat<3>> sym(3);
    sym.add_term({1, 1, 0}, PRat<3>::one());
    sym.add_term({1, 0, 1}, PRat<3>::one());
    sym.add_term({0, 1, 1}, PRat<3>::one());
    rep.kills_symmetric = antisymmetrize(sym).is_zero();

    rep.composes_to_order = antisymmetrize(anti) == anti.scale(Rational(6));
    return rep;
}

struct GeneralPairReport {
    std::vector<int> dims;          // kernel dimensions per degree, 0..cap
    Integer total = 0;
    bool factorial_reached = false; // total equals n! at the stabilized cut
    int stable_at = -1;             // first of two consecutive zero degrees
};

/// Common kernel of sum a_i x_i d_i^2 + b_i d_i and sum c_i x_i d_i^3 +
/// d_i' d_i^2, reported degree by degree up to the cap.
inline GeneralPairReport general_d1_d2_dimension(int n, const std::vector<Rational>& a,
                                                 const std::vector<Rational>& b,
                                                 const std::vector<Rational>& c,
                                                 const std::vector<Rational>& d, int cap) {
    auto fam = family_general<Rational>(n, {a, c}, {b, d});
    auto ker = solve_kernel(fam, cap);
    GeneralPairReport rep;
    for (int deg = 0; deg <= cap; ++deg) {
        rep.dims.push_back(ker.dim(deg));
        rep.total += Integer(static_cast<long>(ker.dim(deg)));
    }
    for (int deg = 0; deg + 1 <= cap; ++deg)
        if (rep.dims[deg] == 0 && rep.dims[deg + 1] == 0) {
            rep.stable_at = deg;
            break;
        }
    Integer fact = 1;
    for (int i = 2; i <= n; ++i) fact *= Integer(i);
    rep.factorial_reached = rep.total == fact;
    return rep;
}

}  // namespace steenrod
