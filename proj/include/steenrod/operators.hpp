#ifndef STEENROD_OPERATORS_HPP
#define STEENROD_OPERATORS_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exponent.hpp"
#include "multipoly.hpp"

namespace steenrod {

struct OpTermOrder {
    bool operator()(const std::pair<ExpVec, ExpVec>& a, const std::pair<ExpVec, ExpVec>& b) const {
        if (a.first != b.first) return grlex_before(a.first, b.first);
        return grlex_before(a.second, b.second);
    }
};

/// Polynomial-coefficient differential operator in normal order: every term is
/// c * x^A d^B with all multiplications left of all derivatives.  Terms live in
/// an ordered map, so equal operators have identical representations.
template <class S>
class DiffOperator {
  public:
    using TermMap = std::map<std::pair<ExpVec, ExpVec>, S, OpTermOrder>;

    explicit DiffOperator(int nvars = 0) : nv_(nvars) {}

    int nvars() const { return nv_; }
    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add_term(const ExpVec& xe, const ExpVec& de, const S& c) {
        if (c.is_zero()) return;
        auto key = std::make_pair(xe, de);
        auto it = t_.find(key);
        if (it == t_.end()) {
            t_.emplace(std::move(key), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    /// x_i d_i^k and friends.
    static DiffOperator monomial(int nvars, const ExpVec& xe, const ExpVec& de, const S& c) {
        DiffOperator d(nvars);
        d.add_term(xe, de, c);
        return d;
    }
    static DiffOperator identity(int nvars) {
        return monomial(nvars, ExpVec(nvars, 0), ExpVec(nvars, 0), scalar_one<S>());
    }
    /// Multiplication by a polynomial, as an operator.
    static DiffOperator multiplication(const MultiPoly<S>& p) {
        DiffOperator d(p.nvars());
        for (const auto& [e, c] : p.terms()) d.add_term(e, ExpVec(p.nvars(), 0), c);
        return d;
    }

    DiffOperator& operator+=(const DiffOperator& o) {
        for (const auto& [k, c] : o.t_) add_term(k.first, k.second, c);
        return *this;
    }
    DiffOperator& operator-=(const DiffOperator& o) {
        for (const auto& [k, c] : o.t_) add_term(k.first, k.second, -c);
        return *this;
    }
    friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
    friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
    DiffOperator operator-() const {
        DiffOperator r(nv_);
        for (const auto& [k, c] : t_) r.t_.emplace(k, -c);
        return r;
    }
    friend DiffOperator operator*(const DiffOperator& a, const S& s) {
        DiffOperator r(a.nv_);
        for (const auto& [k, c] : a.t_) r.add_term(k.first, k.second, c * s);
        return r;
    }
    friend DiffOperator operator*(const S& s, const DiffOperator& a) { return a * s; }

    friend bool operator==(const DiffOperator& a, const DiffOperator& b) {
        return a.nv_ == b.nv_ && a.t_ == b.t_;
    }
    friend bool operator!=(const DiffOperator& a, const DiffOperator& b) { return !(a == b); }

    MultiPoly<S> apply(const MultiPoly<S>& f) const {
        if (f.nvars() != nv_) throw std::invalid_argument("DiffOperator: arity mismatch");
        MultiPoly<S> out(nv_);
        for (const auto& [k, c] : t_) {
            const ExpVec& A = k.first;
            const ExpVec& B = k.second;
            for (const auto& [E, d] : f.terms()) {
                Rational ff(1);
                bool dead = false;
                for (int i = 0; i < nv_; ++i) {
                    if (E[i] < B[i]) {
                        dead = true;
                        break;
                    }
                    if (B[i] > 0) ff *= Rational(int_falling(E[i], B[i]));
                }
                if (dead) continue;
                out.add_term(exp_add(exp_sub(E, B), A), c * d * ff);
            }
        }
        return out;
    }

    /// Operator product with normal reordering via
    /// d^b x^a = sum_k C(b,k) a!/(a-k)! x^(a-k) d^(b-k), variable by variable.
    friend DiffOperator compose(const DiffOperator& P, const DiffOperator& Q) {
        if (P.nv_ != Q.nv_) throw std::invalid_argument("DiffOperator: arity mismatch");
        DiffOperator out(P.nv_);
        int n = P.nv_;
        for (const auto& [kp, cp] : P.t_) {
            const ExpVec& A1 = kp.first;
            const ExpVec& B1 = kp.second;
            for (const auto& [kq, cq] : Q.t_) {
                const ExpVec& A2 = kq.first;
                const ExpVec& B2 = kq.second;
                ExpVec kmax(n);
                for (int i = 0; i < n; ++i) kmax[i] = std::min(B1[i], A2[i]);
                ExpVec k(n, 0);
                for (;;) {
                    Rational w(1);
                    for (int i = 0; i < n; ++i)
                        if (k[i] > 0)
                            w *= Rational(int_binomial(B1[i], k[i]) * int_falling(A2[i], k[i]));
                    ExpVec xe(n), de(n);
                    for (int i = 0; i < n; ++i) {
                        xe[i] = A1[i] + A2[i] - k[i];
                        de[i] = B1[i] + B2[i] - k[i];
                    }
                    out.add_term(xe, de, cp * cq * w);
                    int i = 0;
                    while (i < n && k[i] == kmax[i]) k[i++] = 0;
                    if (i == n) break;
                    ++k[i];
                }
            }
        }
        return out;
    }

    friend DiffOperator bracket(const DiffOperator& P, const DiffOperator& Q) {
        return compose(P, Q) - compose(Q, P);
    }

    /// Adjoint for the apolar pairing: termwise swap of the x and d exponents.
    DiffOperator dual() const {
        DiffOperator r(nv_);
        for (const auto& [k, c] : t_) r.add_term(k.second, k.first, c);
        return r;
    }

    /// Largest total derivative order among the terms; -1 for the zero operator.
    int order() const {
        int d = -1;
        for (const auto& [k, c] : t_) d = std::max(d, exp_degree(k.second));
        return d;
    }

    /// Top-order part as a polynomial in (x1..xn, xi1..xin).
    MultiPoly<S> symbol() const {
        MultiPoly<S> out(2 * nv_);
        int d = order();
        for (const auto& [k, c] : t_) {
            if (exp_degree(k.second) != d) continue;
            ExpVec e(2 * nv_, 0);
            for (int i = 0; i < nv_; ++i) {
                e[i] = k.first[i];
                e[nv_ + i] = k.second[i];
            }
            out.add_term(e, c);
        }
        return out;
    }

    /// Degree shift x-degree minus d-degree when uniform across terms.
    std::optional<int> homogeneity() const {
        if (t_.empty()) return std::nullopt;
        int h = exp_degree(t_.begin()->first.first) - exp_degree(t_.begin()->first.second);
        for (const auto& [k, c] : t_)
            if (exp_degree(k.first) - exp_degree(k.second) != h) return std::nullopt;
        return h;
    }

    /// Simultaneous substitution x_i -> x_{perm[i]}, d_i -> d_{perm[i]}.
    DiffOperator permuted(const std::vector<int>& perm) const {
        DiffOperator r(nv_);
        for (const auto& [k, c] : t_) {
            ExpVec xe(nv_, 0), de(nv_, 0);
            for (int i = 0; i < nv_; ++i) {
                xe.at(perm.at(i)) = k.first[i];
                de.at(perm.at(i)) = k.second[i];
            }
            r.add_term(xe, de, c);
        }
        return r;
    }

    std::string render() const {
        if (t_.empty()) return "0";
        std::string out;
        for (const auto& [k, c] : t_) {
            std::string xs = exp_render(k.first, "x");
            std::string ds = exp_render(k.second, "d");
            std::string mono;
            if (xs == "1" && ds == "1")
                mono = "1";
            else if (xs == "1")
                mono = ds;
            else if (ds == "1")
                mono = xs;
            else
                mono = xs + "*" + ds;
            if constexpr (std::is_same_v<S, Rational>) {
                bool neg = c.sign() < 0;
                Rational mag = neg ? -c : c;
                if (out.empty())
                    out += neg ? "-" : "";
                else
                    out += neg ? " - " : " + ";
                if (mono == "1")
                    out += mag.render();
                else if (mag.is_one())
                    out += mono;
                else
                    out += mag.render() + "*" + mono;
            } else {
                if (!out.empty()) out += " + ";
                std::string cs = c.render();
                if (mono == "1")
                    out += cs == "1" ? "1" : "(" + cs + ")";
                else if (cs == "1")
                    out += mono;
                else
                    out += "(" + cs + ")*" + mono;
            }
        }
        return out;
    }

  private:
    int nv_;
    TermMap t_;
};

template <class S>
MultiPoly<S> apply_sequence(const std::vector<DiffOperator<S>>& ops, MultiPoly<S> f) {
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) f = it->apply(f);
    return f;
}

}  // namespace steenrod

#endif
