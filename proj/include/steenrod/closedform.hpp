#pragma once

// Exact description of the kernel of a single lowering operator
//   sum_i a_i x_i d_i^{k+1} + b_i d_i^k
// by lifting seed polynomials in the remaining variables through a
// terminating recurrence, valid whenever a*d + b never vanishes for the
// distinguished variable's weights.

#include <steenrod/families.hpp>
#include <steenrod/hilbert.hpp>
#include <steenrod/kernel.hpp>

#include <optional>
#include <sstream>

namespace steenrod {

/// [a;b]_m = b (a+b) (2a+b) ... ((m-1)a + b), with the empty product 1.
template <class S>
S shifted_factorial(const S& a, const S& b, int m) {
    S acc = scalar_one<S>();
    for (int j = 0; j < m; ++j) acc = acc * (a * Rational(j) + b);
    return acc;
}

/// For rational weights: the witness d with a*d + b = 0, if one exists in N.
inline std::optional<Integer> singular_parameter_degree(const Rational& a, const Rational& b) {
    if (a.is_zero()) {
        if (b.is_zero()) return Integer(0);
        return std::nullopt;
    }
    Rational d = -b / a;
    if (d.sign() < 0 || !d.is_integer()) return std::nullopt;
    return d.num();
}

/// Lifts polynomials in the non-distinguished variables to kernel elements of
/// a single lowering operator.  The distinguished variable (by default the
/// last) carries the recurrence; its weights a, b appear in all denominators.
template <class S>
class PsiLift {
  public:
    PsiLift(int nv, int k, std::vector<S> a, std::vector<S> b, int split = -1)
        : nv_(nv), k_(k), a_(std::move(a)), b_(std::move(b)),
          split_(split < 0 ? nv - 1 : split) {
        if (nv_ < 1 || k_ < 1) throw std::invalid_argument("PsiLift: need nv >= 1, k >= 1");
        if (static_cast<int>(a_.size()) != nv_ || static_cast<int>(b_.size()) != nv_)
            throw std::invalid_argument("PsiLift: weight count mismatch");
        if (split_ < 0 || split_ >= nv_) throw std::invalid_argument("PsiLift: bad split index");
    }

    int nvars() const { return nv_; }
    int order_drop() const { return k_; }
    int split() const { return split_; }

    DiffOperator<S> op() const { return deformed_steenrod(nv_, k_, a_, b_); }

    /// seed + Psi_k(seed) for a seed of x-degree < k in the distinguished
    /// variable.  Errors when a needed denominator factor a*d + b vanishes.
    MultiPoly<S> lift(const MultiPoly<S>& seed) const {
        if (seed.nvars() != nv_) throw std::invalid_argument("PsiLift: seed arity mismatch");
        std::vector<MultiPoly<S>> f(k_, MultiPoly<S>(nv_));
        for (const auto& [e, c] : seed.terms()) {
            int r = e[split_];
            if (r >= k_) throw std::invalid_argument("PsiLift: seed x-degree must stay below k");
            ExpVec ybase = e;
            ybase[split_] = 0;
            f[r].add_term(ybase, c * Rational(int_factorial(r)));
        }
        auto D = op();
        MultiPoly<S> out = seed;
        for (int r = 0; r < k_; ++r) {
            if (f[r].is_zero()) continue;
            MultiPoly<S> cur = f[r];
            S denom = scalar_one<S>();
            int sign = 1;
            for (int m = 1;; ++m) {
                cur = D.apply(cur);
                if (cur.is_zero()) break;
                long d = static_cast<long>(k_) * (m - 1) + r;
                S factor = a_[split_] * Rational(d) + b_[split_];
                if (factor.is_zero()) {
                    std::ostringstream msg;
                    msg << "PsiLift: a*d + b vanishes at d = " << d;
                    throw std::domain_error(msg.str());
                }
                denom = denom * factor;
                sign = -sign;
                long xdeg = static_cast<long>(k_) * m + r;
                S scale = S(Rational(Integer(sign), int_factorial(xdeg))) / denom;
                for (const auto& [e, c] : cur.terms()) {
                    ExpVec shifted = e;
                    shifted[split_] += static_cast<int>(xdeg);
                    out.add_term(shifted, c * scale);
                }
            }
        }
        return out;
    }

    /// Lifts of all seed monomials of the given total degree; a basis for the
    /// degree-d slice of the kernel.
    std::vector<MultiPoly<S>> lifted_basis(int degree) const {
        std::vector<MultiPoly<S>> out;
        for (const auto& e : monomials_of_degree(nv_, degree))
            if (e[split_] < k_)
                out.push_back(lift(MultiPoly<S>::monomial(nv_, e, scalar_one<S>())));
        return out;
    }

  private:
    int nv_;
    int k_;
    std::vector<S> a_, b_;
    int split_;
};

/// Terms of the distinguished variable's degree < k; the seed recovered from
/// a kernel element.
template <class S>
MultiPoly<S> seed_part(const MultiPoly<S>& f, int split, int k) {
    MultiPoly<S> out(f.nvars());
    for (const auto& [e, c] : f.terms())
        if (e[split] < k) out.add_term(e, c);
    return out;
}

/// (1 + t + ... + t^{k-1}) / (1-t)^{n-1} through degree cap.
inline UPoly kernel_hilbert_single(int k, int n, int cap) {
    return series_mul(t_int(k), geometric_power(n - 1, cap), cap);
}

/// 1 + sum_k binom(n,k) t^k / (1-t)^{k-1} through degree cap; the graded
/// dimensions of the kernel of the first pure x d^2 operator.
inline UPoly tilde_single_kernel_bound(int n, int cap) {
    UPoly acc(Rational(1));
    for (int k = 1; k <= n; ++k) {
        UPoly term = UPoly::monomial(k, Rational(int_binomial(n, k)));
        acc += series_mul(term, geometric_power(k - 1, cap), cap);
    }
    return truncate_series(acc, cap);
}

}  // namespace steenrod
