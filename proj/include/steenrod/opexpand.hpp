#pragma once

// Expansion of a polynomial-coefficient differential operator over the
// deformed family D_{1;q}..D_{n;q}: rational-function coefficients in x
// times u_i(d) D^r words, found by matching symbols order by order against
// the ideal generated by the weighted power sums of the symbol variables.

#include <steenrod/families.hpp>
#include <steenrod/prat.hpp>
#include <steenrod/regseq.hpp>

namespace steenrod {

/// Operator with rational-function coefficients: sum c_B(x) d^B.  No
/// composition is defined here; it only needs to absorb exact corrections.
template <int NV>
struct RatOperator {
    std::map<ExpVec, PRat<NV>> terms;

    void add(const ExpVec& de, const PRat<NV>& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms.emplace(de, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    bool is_zero() const { return terms.empty(); }
    int order() const {
        int d = -1;
        for (const auto& [e, c] : terms) {
            int t = 0;
            for (int x : e) t += x;
            d = std::max(d, t);
        }
        return d;
    }
    friend bool operator==(const RatOperator& a, const RatOperator& b) {
        return a.terms == b.terms;
    }
};

/// Fold the x-monomials of a polynomial-coefficient operator into the
/// rational-function coefficient field.
template <int NV>
RatOperator<NV> fold_coefficients(const DiffOperator<Rational>& D) {
    if (D.nvars() != NV)
        throw std::invalid_argument("fold_coefficients: variable count mismatch");
    RatOperator<NV> out;
    for (const auto& [key, c] : D.terms())
        out.add(key.second, PRat<NV>(MultiPoly<Rational>::monomial(NV, key.first, c)));
    return out;
}

/// Subtract c times the folded operator.
template <int NV>
void subtract_scaled(RatOperator<NV>& R, const DiffOperator<Rational>& op, const PRat<NV>& c) {
    for (const auto& [key, coef] : op.terms())
        R.add(key.second, PRat<NV>(MultiPoly<Rational>::monomial(NV, key.first, coef)) * c * Rational(-1));
}

/// The symbol weights: phi_m in the symbol variables with weight x_i on the
/// i-th one.
template <int NV>
PhiFamily<PRat<NV>> symbol_weights() {
    PhiFamily<PRat<NV>> F;
    for (int i = 0; i < NV; ++i) F.a.push_back(PRat<NV>::var(i));
    return F;
}

/// Greedy monomial basis of the quotient by (phi_2, ..., phi_{NV+1}) over
/// the rational-function field, ordered with the degree-one monomials first.
template <int NV>
std::vector<ExpVec> standard_monomial_basis() {
    PhiFamily<PRat<NV>> F = symbol_weights<NV>();
    int top = NV * (NV + 1) / 2;
    std::vector<ExpVec> linear, rest;
    for (int d = 0; d <= top; ++d) {
        auto mons = monomials_of_degree(NV, d);
        auto rows = ideal_degree_rows(2, F, d, mons);
        auto piv = rref_field(rows, static_cast<int>(mons.size()));
        for (std::size_t m = 0; m < mons.size(); ++m) {
            std::vector<PRat<NV>> unit(mons.size(), PRat<NV>{});
            unit[m] = PRat<NV>::one();
            if (solve_in_span(rows, piv, unit)) continue;
            rows.push_back(std::move(unit));
            piv = rref_field(rows, static_cast<int>(mons.size()));
            (d == 1 ? linear : rest).push_back(mons[m]);
        }
    }
    std::sort(linear.begin(), linear.end(), [](const ExpVec& a, const ExpVec& b) {
        return std::find(a.begin(), a.end(), 1) - a.begin() <
               std::find(b.begin(), b.end(), 1) - b.begin();
    });
    linear.insert(linear.end(), rest.begin(), rest.end());
    long expect = 1;
    for (int j = 2; j <= NV + 1; ++j) expect *= j;
    if (static_cast<long>(linear.size()) != expect)
        throw std::logic_error("standard_monomial_basis: quotient dimension is off");
    return linear;
}

template <int NV>
struct ExpansionTerm {
    int u_index = 0;  // into the basis list
    ExpVec r;         // exponents of D_{1;q}..D_{NV;q}
    PRat<NV> coeff;
};

template <int NV>
struct ExpansionReport {
    std::vector<ExpVec> basis;
    std::vector<int> step_orders;  // strictly decreasing residual orders
    std::vector<ExpansionTerm<NV>> terms;
    std::vector<Rational> probe;  // point where all denominators were checked
};

/// The composed word u_i(d) D_1^{r_1} ... D_NV^{r_NV} behind one term.
inline DiffOperator<Rational> expansion_word(int nv, const ExpVec& u, const ExpVec& r,
                                             const Rational& q) {
    DiffOperator<Rational> word =
        DiffOperator<Rational>::monomial(nv, ExpVec(nv, 0), u, Rational(1));
    auto fam = family_q_steenrod(nv, q);
    for (int k = 1; k <= nv; ++k)
        for (int c = 0; c < r[k - 1]; ++c) word = compose(word, fam.member(k));
    return word;
}

/// Reassemble the expansion: sum of coeff times folded word.
template <int NV>
RatOperator<NV> expansion_value(const ExpansionReport<NV>& rep, const Rational& q) {
    RatOperator<NV> out;
    for (const auto& term : rep.terms)
        subtract_scaled(out, expansion_word(NV, rep.basis[term.u_index], term.r, q),
                        term.coeff * Rational(-1));
    return out;
}

namespace detail {

inline void weighted_exponents(int total, int at, const std::vector<int>& w, ExpVec& cur,
                               std::vector<ExpVec>& out) {
    if (at == static_cast<int>(w.size())) {
        if (total == 0) out.push_back(cur);
        return;
    }
    for (int c = 0; c * w[at] <= total; ++c) {
        cur[at] = c;
        weighted_exponents(total - c * w[at], at + 1, w, cur, out);
    }
    cur[at] = 0;
}

}  // namespace detail

/// Order-by-order expansion of D over the deformed generators; q nonzero.
/// Errors when the coefficient denominators vanish at every probe point.
template <int NV>
ExpansionReport<NV> expand_operator(const DiffOperator<Rational>& D, const Rational& q,
                                    int max_steps = 64) {
    if (q.is_zero())
        throw std::invalid_argument("expand_operator: deformation parameter must be nonzero");
    ExpansionReport<NV> rep;
    rep.basis = standard_monomial_basis<NV>();
    PhiFamily<PRat<NV>> F = symbol_weights<NV>();
    std::vector<int> weights;
    for (int k = 1; k <= NV; ++k) weights.push_back(k + 1);

    ExpVec zero(NV, 0);
    RatOperator<NV> R = fold_coefficients<NV>(D);
    for (int step = 0; !R.is_zero(); ++step) {
        if (step >= max_steps) throw std::runtime_error("expand_operator: step budget exhausted");
        int d = R.order();
        rep.step_orders.push_back(d);
        if (d == 0) {
            int u1 = static_cast<int>(std::find(rep.basis.begin(), rep.basis.end(), zero) -
                                      rep.basis.begin());
            rep.terms.push_back({u1, zero, R.terms.at(zero)});
            break;
        }

        auto mons = monomials_of_degree(NV, d);
        std::map<ExpVec, std::size_t> slot;
        for (std::size_t m = 0; m < mons.size(); ++m) slot.emplace(mons[m], m);
        std::vector<std::pair<int, ExpVec>> words;
        std::vector<std::vector<PRat<NV>>> rows;
        for (std::size_t i = 0; i < rep.basis.size(); ++i) {
            int di = 0;
            for (int x : rep.basis[i]) di += x;
            if (di > d) continue;
            std::vector<ExpVec> rs;
            ExpVec cur(NV, 0);
            detail::weighted_exponents(d - di, 0, weights, cur, rs);
            for (const auto& r : rs) {
                MultiPoly<PRat<NV>> prod =
                    MultiPoly<PRat<NV>>::monomial(NV, rep.basis[i], PRat<NV>::one());
                Rational qpow(1);
                for (int k = 1; k <= NV; ++k)
                    for (int c = 0; c < r[k - 1]; ++c) {
                        prod = prod * F.phi(k + 1);
                        qpow = qpow * q;
                    }
                rows.push_back(poly_to_vec(prod.scale(qpow), mons));
                words.emplace_back(static_cast<int>(i), r);
            }
        }

        std::vector<PRat<NV>> target(mons.size(), PRat<NV>{});
        for (const auto& [e, c] : R.terms) {
            auto it = slot.find(e);
            if (it != slot.end()) target[it->second] = c;
        }
        auto coeffs = solve_row_combination(rows, static_cast<int>(mons.size()), target);
        if (!coeffs)
            throw std::domain_error("expand_operator: symbol escaped the generator span");
        for (std::size_t j = 0; j < coeffs->size(); ++j) {
            if ((*coeffs)[j].is_zero()) continue;
            const auto& [ui, r] = words[j];
            subtract_scaled(R, expansion_word(NV, rep.basis[ui], r, q), (*coeffs)[j]);
            rep.terms.push_back({ui, r, (*coeffs)[j]});
        }
        if (R.order() >= d)
            throw std::logic_error("expand_operator: residual order failed to drop");
    }

    std::vector<Rational> probe;
    for (int i = 1; i <= NV; ++i) probe.emplace_back(i);
    auto clear_at = [&](const std::vector<Rational>& pt) {
        for (const auto& term : rep.terms)
            if (term.coeff.den().eval(pt).is_zero()) return false;
        return true;
    };
    if (!clear_at(probe)) {
        std::uint64_t state = 0x9e3779b97f4a7c15ull;
        auto next = [&state]() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            return state;
        };
        bool found = false;
        for (int attempt = 0; attempt < 32 && !found; ++attempt) {
            for (auto& c : probe) c = Rational(static_cast<long>(next() % 997 + 1));
            found = clear_at(probe);
        }
        if (!found)
            throw std::domain_error("expand_operator: denominators vanish at every probe tried");
    }
    rep.probe = probe;
    return rep;
}

}  // namespace steenrod
