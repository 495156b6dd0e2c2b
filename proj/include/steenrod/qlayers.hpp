#pragma once

// Powers-of-q structure of kernel elements over the rational-function field:
// splitting into layers f_0 + q f_1 + ... + q^m f_m, the chain conditions the
// layers satisfy, the spans of first and last layers, and the agreement of the
// low-degree kernel dimensions with the t-factorial.

#include <stdexcept>
#include <vector>

#include <steenrod/families.hpp>
#include <steenrod/kernel.hpp>

namespace steenrod {

/// f = q^shift (f_0 + q f_1 + ... + q^m f_m) with f_0 and f_m nonzero.
struct QLayeredPolynomial {
    int shift = 0;
    std::vector<MultiPoly<Rational>> layers;

    int length() const { return static_cast<int>(layers.size()) - 1; }
    const MultiPoly<Rational>& first() const { return layers.front(); }
    const MultiPoly<Rational>& last() const { return layers.back(); }

    /// sum_i q^i f_i; the original element is q^shift times this.
    MultiPoly<QScalar> reassemble() const {
        MultiPoly<QScalar> acc(layers.empty() ? 0 : layers.front().nvars());
        for (std::size_t i = 0; i < layers.size(); ++i)
            for (const auto& [e, c] : layers[i].terms())
                acc.add_term(e, QScalar(UPoly::monomial(static_cast<int>(i), c)));
        return acc;
    }
};

/// Scale by the least common multiple of the coefficient denominators.  The
/// result generates the same line, so membership in any kernel is unchanged,
/// but the coefficients become honest polynomials in q.
inline MultiPoly<QScalar> clear_q_denominators(const MultiPoly<QScalar>& f) {
    UPoly l(1);
    for (const auto& [e, c] : f.terms()) l = exact_div(l * c.den(), gcd(l, c.den()));
    return f * QScalar(l);
}

/// Split by powers of q.  Denominators must be pure powers of q, so each
/// coefficient is Laurent; a factor like q + 1 cannot be normalized away by a
/// global power of q and is reported instead.
inline QLayeredPolynomial q_layers(const MultiPoly<QScalar>& f) {
    if (f.is_zero()) throw std::invalid_argument("q_layers: zero polynomial");
    int lo = 0, hi = 0;
    bool seen = false;
    for (const auto& [e, c] : f.terms()) {
        int j = c.den().degree();
        if (c.den() != UPoly::monomial(j))
            throw std::domain_error("q_layers: coefficient of " + exp_render(e) +
                                    " is not Laurent in q");
        int low = 0;
        while (c.num().coeff(low).is_zero()) ++low;
        if (!seen || low - j < lo) lo = low - j;
        if (!seen || c.num().degree() - j > hi) hi = c.num().degree() - j;
        seen = true;
    }
    QLayeredPolynomial out;
    out.shift = lo;
    out.layers.assign(hi - lo + 1, MultiPoly<Rational>(f.nvars()));
    for (const auto& [e, c] : f.terms()) {
        int j = c.den().degree();
        for (int i = 0; i <= c.num().degree(); ++i) {
            Rational cc = c.num().coeff(i);
            if (!cc.is_zero()) out.layers[i - j - lo].add_term(e, cc);
        }
    }
    return out;
}

namespace detail {
inline DiffOperator<Rational> plain_power_sum(int nv, int k) {
    return deformed_steenrod<Rational>(nv, k, std::vector<Rational>(nv, Rational(0)),
                                       std::vector<Rational>(nv, Rational(1)));
}

template <class S>
int top_degree(const MultiPoly<S>& f) {
    int d = -1;
    for (const auto& [e, c] : f.terms()) d = std::max(d, exp_degree(e));
    return d;
}
}  // namespace detail

/// Annihilated by every plain derivative power sum.
inline bool classically_harmonic(const MultiPoly<Rational>& f) {
    for (int k = 1; k <= detail::top_degree(f); ++k)
        if (!detail::plain_power_sum(f.nvars(), k).apply(f).is_zero()) return false;
    return true;
}

/// The kernel equation at generic q reads (q T_k + N_k) f = 0 with T_k the
/// pure x_i d_i^{k+1} member and N_k the plain power sum; collecting powers of
/// q gives one condition per layer.
struct LayerConditionReport {
    bool front_harmonic = false;  // N_k f_0 = 0
    bool steps_match = false;     // N_k f_i = -T_k f_{i-1}
    bool back_killed = false;     // T_k f_m = 0
    bool ok() const { return front_harmonic && steps_match && back_killed; }
};

inline LayerConditionReport layer_conditions(const QLayeredPolynomial& lay) {
    if (lay.layers.empty()) throw std::invalid_argument("layer_conditions: no layers");
    int nv = lay.layers.front().nvars();
    int top = 0;
    for (const auto& f : lay.layers) top = std::max(top, detail::top_degree(f));
    const auto& L = lay.layers;
    int m = static_cast<int>(L.size()) - 1;
    auto tilde = family_tilde<Rational>(nv);
    LayerConditionReport rep;
    rep.front_harmonic = rep.steps_match = rep.back_killed = true;
    // Members of index beyond the degree act as zero on every layer.
    for (int k = 1; k <= top; ++k) {
        auto nk = detail::plain_power_sum(nv, k);
        auto tk = tilde.member(k);
        if (!nk.apply(L[0]).is_zero()) rep.front_harmonic = false;
        for (int i = 1; i <= m; ++i)
            if (!(nk.apply(L[i]) + tk.apply(L[i - 1])).is_zero()) rep.steps_match = false;
        if (!tk.apply(L[m]).is_zero()) rep.back_killed = false;
    }
    return rep;
}

/// Every word of r power sums applied to layer r lands in the classical
/// kernel.  The power sums commute, so weakly decreasing words suffice, and
/// indices beyond the total degree send everything to zero.
struct ChainHarmonicityReport {
    bool all_harmonic = true;
    long chains_checked = 0;
};

inline ChainHarmonicityReport chain_harmonicity(const QLayeredPolynomial& lay) {
    ChainHarmonicityReport rep;
    if (lay.layers.empty()) return rep;
    int nv = lay.layers.front().nvars();
    int top = 0;
    for (const auto& f : lay.layers) top = std::max(top, detail::top_degree(f));
    auto rec = [&](auto&& self, const MultiPoly<Rational>& g, int left, int maxk) -> void {
        if (left == 0) {
            ++rep.chains_checked;
            if (!classically_harmonic(g)) rep.all_harmonic = false;
            return;
        }
        for (int k = maxk; k >= 1; --k)
            self(self, detail::plain_power_sum(nv, k).apply(g), left - 1, k);
    };
    for (int r = 0; r < static_cast<int>(lay.layers.size()); ++r)
        rec(rec, lay.layers[r], r, top);
    return rep;
}

/// First and last layers of every kernel basis element, and the graded
/// dimensions of the two spans.  Both series match the kernel's own, and the
/// first layers are classically harmonic.
struct FirstLastReport {
    std::vector<std::vector<MultiPoly<Rational>>> first_terms, last_terms;
    UPoly first_hilbert, last_hilbert;
};

inline FirstLastReport first_last_spans(const GradedKernel<QScalar>& K) {
    FirstLastReport rep;
    rep.first_terms.resize(K.graded.size());
    rep.last_terms.resize(K.graded.size());
    std::vector<Rational> fdims, ldims;
    for (int d = 0; d < static_cast<int>(K.graded.size()); ++d) {
        auto mons = monomials_of_degree(K.nv, d);
        std::vector<std::vector<Rational>> frows, lrows;
        for (const auto& b : K.graded[d]) {
            auto lay = q_layers(clear_q_denominators(b));
            rep.first_terms[d].push_back(lay.first());
            rep.last_terms[d].push_back(lay.last());
            frows.push_back(poly_to_vec(lay.first(), mons));
            lrows.push_back(poly_to_vec(lay.last(), mons));
        }
        fdims.emplace_back(static_cast<long>(rref_field(frows, static_cast<int>(mons.size())).size()));
        ldims.emplace_back(static_cast<long>(rref_field(lrows, static_cast<int>(mons.size())).size()));
    }
    rep.first_hilbert = UPoly(fdims);
    rep.last_hilbert = UPoly(ldims);
    return rep;
}

/// Kernel dimensions of the one-parameter family at symbolic q agree with the
/// t-factorial coefficients through degree n.
struct CoefficientEqualityReport {
    int n = 0;
    std::vector<int> kernel_dims;       // degrees 0..n
    std::vector<int> factorial_coeffs;  // [n]!_t at the same degrees
    bool equal = false;
};

inline CoefficientEqualityReport coefficient_equality_check(int n) {
    CoefficientEqualityReport rep;
    rep.n = n;
    auto K = solve_kernel(family_q_steenrod_symbolic(n), n);
    UPoly fact = t_factorial(n);
    rep.equal = true;
    for (int d = 0; d <= n; ++d) {
        rep.kernel_dims.push_back(K.dim(d));
        rep.factorial_coeffs.push_back(static_cast<int>(fact.coeff(d).num().get_si()));
        if (rep.kernel_dims.back() != rep.factorial_coeffs.back()) rep.equal = false;
    }
    return rep;
}

}  // namespace steenrod
