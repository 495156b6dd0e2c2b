#pragma once

// Graded Frobenius characteristics of kernel spaces, plus the two closed
// formulas they are measured against and the induced-module expression for
// the tilde kernels.

#include <steenrod/kernel.hpp>
#include <steenrod/symfunc.hpp>

namespace steenrod {

/// Trace of one representative per conjugacy class on each graded piece.
/// Errors if some piece fails to be stable under permuting the variables.
template <class S>
std::vector<std::map<Partition, S>> kernel_class_traces(const GradedKernel<S>& K) {
    auto classes = partitions_of(K.nv);
    std::vector<std::map<Partition, S>> out;
    for (std::size_t d = 0; d < K.graded.size(); ++d) {
        auto mons = monomials_of_degree(K.nv, static_cast<int>(d));
        std::vector<std::vector<S>> rows;
        for (const auto& b : K.graded[d]) rows.push_back(poly_to_vec(b, mons));
        auto piv = rref_field(rows, static_cast<int>(mons.size()));
        std::vector<MultiPoly<S>> basis;
        for (const auto& r : rows) basis.push_back(vec_to_poly(r, mons, K.nv));
        std::map<Partition, S> traces;
        for (const auto& mu : classes) {
            auto sigma = class_representative(mu);
            S tr{};
            for (std::size_t i = 0; i < basis.size(); ++i) {
                auto coords =
                    solve_in_span(rows, piv, poly_to_vec(basis[i].permuted(sigma), mons));
                if (!coords)
                    throw std::domain_error(
                        "kernel_class_traces: kernel is not permutation-stable");
                tr += (*coords)[i];
            }
            traces.emplace(mu, tr);
        }
        out.push_back(std::move(traces));
    }
    return out;
}

/// Assemble graded class traces into the power-sum expansion
/// sum_d t^d sum_mu trace_d(mu) p_mu / z_mu.
inline SymFunc frobenius_from_traces(int n,
                                     const std::vector<std::map<Partition, Rational>>& traces) {
    SymFunc out{n, SymBasis::powersum, {}};
    for (const auto& mu : partitions_of(n)) {
        std::vector<Rational> cs;
        for (const auto& layer : traces) {
            auto it = layer.find(mu);
            cs.push_back(it == layer.end() ? Rational(0) : it->second);
        }
        out.add(mu, TScalar(UPoly(std::move(cs))) * Rational(Integer(1), partition_z(mu)));
    }
    return out;
}

/// Graded Frobenius characteristic of a kernel space, in the Schur basis.
/// Multiplicities must come out as polynomials in t with nonnegative
/// integer coefficients; anything else is surfaced as an error.
inline SymFunc frobenius_of_kernel(const GradedKernel<Rational>& K) {
    SymFunc f = to_schur(frobenius_from_traces(K.nv, kernel_class_traces(K)));
    if (!sym_is_multiplicity_positive(f))
        throw std::domain_error("frobenius_of_kernel: non-integral Schur multiplicities");
    return f;
}

/// [n]!_t (1-t)^n sum_mu p_mu / (z_mu prod_{k in mu} (1-t^k)), as Schur.
inline SymFunc frobenius_formula_regular(int n) {
    UPoly head = t_factorial(n);
    UPoly one_minus_t(std::vector<Rational>{Rational(1), Rational(-1)});
    for (int i = 0; i < n; ++i) head = head * one_minus_t;
    SymFunc p{n, SymBasis::powersum, {}};
    for (const auto& mu : partitions_of(n)) {
        UPoly den(Rational(partition_z(mu)));
        for (int k : mu) {
            std::vector<Rational> cyc(k + 1, Rational(0));
            cyc[0] = Rational(1);
            cyc[k] = Rational(-1);
            den = den * UPoly(std::move(cyc));
        }
        p.add(mu, TScalar(head, den));
    }
    return to_schur(p);
}

/// sum_lambda s_lambda sum_{tau standard of shape lambda} t^{cocharge(tau)}.
inline SymFunc frobenius_formula_tableaux(int n) {
    SymFunc out{n, SymBasis::schur, {}};
    for (const auto& lam : partitions_of(n)) {
        UPoly c;
        for (const auto& tau : standard_tableaux(lam))
            c += UPoly::monomial(cocharge(tau));
        out.add(lam, TScalar(c));
    }
    return out;
}

/// sum_{k=0}^n t^k hats[k] h_{n-k}, where hats[k] is the degree-k
/// characteristic of the k-variable hat kernel (hats[0] the empty unit).
inline SymFunc frobenius_tilde_formula(const std::vector<SymFunc>& hats) {
    int n = static_cast<int>(hats.size()) - 1;
    SymFunc acc{n, SymBasis::schur, {}};
    for (int k = 0; k <= n; ++k) {
        Partition rest;
        if (n - k > 0) rest.push_back(n - k);
        SymFunc term = sym_mul(hats[k], sym_h(rest));
        acc = acc + to_schur(term * UPoly::monomial(k));
    }
    return acc;
}

}  // namespace steenrod
