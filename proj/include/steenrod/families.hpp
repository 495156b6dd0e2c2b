#ifndef STEENROD_FAMILIES_HPP
#define STEENROD_FAMILIES_HPP

#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "fraction.hpp"
#include "operators.hpp"

namespace steenrod {

/// Graded family of lowering operators D_k (degree shift -k), k >= 1.
/// member_cap < 0 means members exist for every k; bracket_closed marks
/// families satisfying [D_k, D_j] = const * D_{k+j}, for which the k in {1, 2}
/// members already cut out the whole kernel.
template <class S>
struct OperatorFamily {
    std::string name;
    int nv = 0;
    bool symmetric = false;
    bool bracket_closed = false;
    int member_cap = -1;
    std::vector<int> listed_ks;  // empty: every k up to member_cap
    std::function<DiffOperator<S>(int)> member_fn;

    DiffOperator<S> member(int k) const {
        if (k < 1) throw std::invalid_argument(name + ": member index must be positive");
        if (member_cap >= 0 && k > member_cap)
            throw std::invalid_argument(name + ": no member of index " + std::to_string(k));
        return member_fn(k);
    }

    /// Indices applied at degree d (those lowering into nonnegative degree).
    std::vector<int> ks_for_degree(int d, bool two_generator) const {
        std::vector<int> ks;
        if (!listed_ks.empty()) {
            for (int k : listed_ks)
                if (k <= d) ks.push_back(k);
            return ks;
        }
        int hi = member_cap >= 0 ? std::min(member_cap, d) : d;
        if (two_generator) hi = std::min(hi, 2);
        for (int k = 1; k <= hi; ++k) ks.push_back(k);
        return ks;
    }
};

namespace detail {
template <class S>
DiffOperator<S> lowering_term(int nv, int i, int k, const S& a, const S& b) {
    // a * x_i d_i^(k+1) + b * d_i^k
    DiffOperator<S> d(nv);
    ExpVec xe(nv, 0), de(nv, 0);
    xe[i] = 1;
    de[i] = k + 1;
    d.add_term(xe, de, a);
    xe[i] = 0;
    de[i] = k;
    d.add_term(ExpVec(nv, 0), de, b);
    return d;
}
}  // namespace detail

/// D_k = sum_i a_i x_i d_i^(k+1) + b_i d_i^k with constant vectors per k.
template <class S>
DiffOperator<S> deformed_steenrod(int nv, int k, const std::vector<S>& a, const std::vector<S>& b) {
    DiffOperator<S> d(nv);
    for (int i = 0; i < nv; ++i) d += detail::lowering_term<S>(nv, i, k, a.at(i), b.at(i));
    return d;
}

/// nabla_k = sum_i d_i^k.
template <class S = Rational>
OperatorFamily<S> family_classical(int nv) {
    OperatorFamily<S> f;
    f.name = "classical";
    f.nv = nv;
    f.symmetric = true;
    f.bracket_closed = false;
    // Power sums in the derivatives: each nabla_k with k > n is a polynomial in
    // nabla_1..nabla_n, so higher members add no constraints.
    f.member_cap = nv;
    f.member_fn = [nv](int k) {
        return deformed_steenrod<S>(nv, k, std::vector<S>(nv, S{}),
                                    std::vector<S>(nv, scalar_one<S>()));
    };
    return f;
}

/// q x_i d_i^(k+1) + d_i^k at a fixed rational q.
inline OperatorFamily<Rational> family_q_steenrod(int nv, const Rational& q) {
    OperatorFamily<Rational> f;
    f.name = "q-steenrod";
    f.nv = nv;
    f.symmetric = true;
    f.bracket_closed = !q.is_zero();
    f.member_fn = [nv, q](int k) {
        return deformed_steenrod<Rational>(nv, k, std::vector<Rational>(nv, q),
                                           std::vector<Rational>(nv, Rational(1)));
    };
    return f;
}

/// Same family over the rational-function field, q left symbolic.
inline OperatorFamily<QScalar> family_q_steenrod_symbolic(int nv) {
    OperatorFamily<QScalar> f;
    f.name = "q-steenrod";
    f.nv = nv;
    f.symmetric = true;
    f.bracket_closed = true;
    f.member_fn = [nv](int k) {
        return deformed_steenrod<QScalar>(nv, k, std::vector<QScalar>(nv, q_var()),
                                          std::vector<QScalar>(nv, QScalar(UPoly(1))));
    };
    return f;
}

/// x_i d_i^(k+1) only.
template <class S = Rational>
OperatorFamily<S> family_tilde(int nv) {
    OperatorFamily<S> f;
    f.name = "tilde";
    f.nv = nv;
    f.symmetric = true;
    f.bracket_closed = true;
    f.member_fn = [nv](int k) {
        return deformed_steenrod<S>(nv, k, std::vector<S>(nv, scalar_one<S>()),
                                    std::vector<S>(nv, S{}));
    };
    return f;
}

/// d_i^(k+1) x_i, normal ordered: x_i d_i^(k+1) + (k+1) d_i^k.
template <class S = Rational>
OperatorFamily<S> family_hat(int nv) {
    OperatorFamily<S> f;
    f.name = "hat";
    f.nv = nv;
    f.symmetric = true;
    f.member_fn = [nv](int k) {
        S kk = scalar_one<S>() * Rational(k + 1);
        return deformed_steenrod<S>(nv, k, std::vector<S>(nv, scalar_one<S>()),
                                    std::vector<S>(nv, kk));
    };
    return f;
}

/// sum_i a_i d_i^k: the weighted power sums in the derivatives.
template <class S>
OperatorFamily<S> family_weighted_laplacian(int nv, const std::vector<S>& a) {
    OperatorFamily<S> f;
    f.name = "weighted-laplacian";
    f.nv = nv;
    bool all_equal = true;
    for (const auto& x : a)
        if (!(x == a.at(0))) all_equal = false;
    f.symmetric = all_equal;
    // Newton-style reduction: phi_m = sum (-1)^(r+1) e_r phi_(m-r) for m > n
    // holds with weights, so members beyond n add nothing.
    f.member_cap = nv;
    f.member_fn = [nv, a](int k) {
        DiffOperator<S> d(nv);
        for (int i = 0; i < nv; ++i) {
            ExpVec de(nv, 0);
            de[i] = k;
            d.add_term(ExpVec(nv, 0), de, a.at(i));
        }
        return d;
    };
    return f;
}

/// Explicit (a, b) parameter tables: tables[k-1][i] give the coefficients of D_k.
template <class S>
OperatorFamily<S> family_general(int nv, const std::vector<std::vector<S>>& a,
                                 const std::vector<std::vector<S>>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("family_general: table size mismatch");
    OperatorFamily<S> f;
    f.name = "general";
    f.nv = nv;
    f.member_cap = static_cast<int>(a.size());
    bool sym = true;
    for (std::size_t k = 0; k < a.size(); ++k)
        for (int i = 0; i < nv; ++i)
            if (!(a[k].at(i) == a[k].at(0)) || !(b[k].at(i) == b[k].at(0))) sym = false;
    f.symmetric = sym;
    f.member_fn = [nv, a, b](int k) { return deformed_steenrod<S>(nv, k, a.at(k - 1), b.at(k - 1)); };
    return f;
}

/// Explicit members at explicit indices.
template <class S>
OperatorFamily<S> family_custom(const std::string& name, int nv,
                                const std::vector<std::pair<int, DiffOperator<S>>>& members) {
    OperatorFamily<S> f;
    f.name = name;
    f.nv = nv;
    auto table = std::make_shared<std::map<int, DiffOperator<S>>>();
    for (const auto& [k, op] : members) {
        f.listed_ks.push_back(k);
        table->emplace(k, op);
        f.member_cap = std::max(f.member_cap, k);
    }
    if (f.listed_ks.empty()) throw std::invalid_argument("family_custom: empty member list");
    f.member_fn = [table, name](int k) {
        auto it = table->find(k);
        if (it == table->end())
            throw std::invalid_argument(name + ": no member of index " + std::to_string(k));
        return it->second;
    };
    return f;
}

/// One operator at one index, as a family.
template <class S>
OperatorFamily<S> family_single(const std::string& name, int k, const DiffOperator<S>& op) {
    return family_custom<S>(name, op.nvars(), {{k, op}});
}

/// Rewrite a composition word over generators satisfying
/// G_k G_j = G_j G_k + c(k, j) G_(k+j) into the span of weakly decreasing words.
/// Returns the partition-indexed coefficients.
template <class S, class C>
std::map<std::vector<int>, S> reduce_composition(const std::vector<int>& word, C&& c) {
    std::map<std::vector<int>, S> todo, done;
    todo.emplace(word, scalar_one<S>());
    while (!todo.empty()) {
        auto it = todo.begin();
        std::vector<int> w = it->first;
        S coeff = it->second;
        todo.erase(it);
        std::size_t asc = w.size();
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] < w[i + 1]) {
                asc = i;
                break;
            }
        if (asc == w.size()) {
            auto [jt, fresh] = done.emplace(w, coeff);
            if (!fresh) {
                jt->second += coeff;
                if (jt->second.is_zero()) done.erase(jt);
            }
            continue;
        }
        int k = w[asc], j = w[asc + 1];
        std::vector<int> swapped = w;
        std::swap(swapped[asc], swapped[asc + 1]);
        std::vector<int> merged;
        merged.reserve(w.size() - 1);
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i == asc) {
                merged.push_back(k + j);
                ++i;
            } else {
                merged.push_back(w[i]);
            }
        }
        for (auto& [ww, cc] : std::initializer_list<std::pair<std::vector<int>, S>>{
                 {swapped, coeff}, {merged, coeff * c(k, j)}}) {
            auto [jt, fresh] = todo.emplace(ww, cc);
            if (!fresh) {
                jt->second += cc;
                if (jt->second.is_zero()) todo.erase(jt);
            }
        }
    }
    return done;
}

}  // namespace steenrod

#endif
