#ifndef STEENROD_MULTIPOLY_HPP
#define STEENROD_MULTIPOLY_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "exponent.hpp"
#include "fraction.hpp"
#include "rational.hpp"

namespace steenrod {

/// Sparse multivariate polynomial over a scalar field S.  Terms are kept in a
/// map ordered by descending graded-lex, and zero coefficients are never stored,
/// so equal polynomials have identical representations.
template <class S>
class MultiPoly {
  public:
    using TermMap = std::map<ExpVec, S, GrlexDesc>;

    explicit MultiPoly(int nvars = 0) : nv_(nvars) {}

    static MultiPoly constant(int nvars, const S& c) {
        MultiPoly p(nvars);
        p.add_term(ExpVec(nvars, 0), c);
        return p;
    }
    static MultiPoly monomial(int nvars, const ExpVec& e, const S& c) {
        MultiPoly p(nvars);
        p.add_term(e, c);
        return p;
    }
    static MultiPoly variable(int nvars, int i) {
        ExpVec e(nvars, 0);
        e.at(i) = 1;
        return monomial(nvars, e, scalar_one<S>());
    }

    int nvars() const { return nv_; }
    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    bool is_one() const {
        return t_.size() == 1 && exp_degree(t_.begin()->first) == 0 &&
               t_.begin()->second == scalar_one<S>();
    }

    int degree() const {  // -1 for the zero polynomial
        int d = -1;
        for (const auto& [e, c] : t_) d = std::max(d, exp_degree(e));
        return d;
    }

    std::optional<int> homogeneous_degree() const {
        if (t_.empty()) return std::nullopt;
        int d = exp_degree(t_.begin()->first);
        for (const auto& [e, c] : t_)
            if (exp_degree(e) != d) return std::nullopt;
        return d;
    }

    void add_term(const ExpVec& e, const S& c) {
        if (c.is_zero()) return;
        check_width(e);
        auto it = t_.find(e);
        if (it == t_.end()) {
            t_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    S coeff(const ExpVec& e) const {
        auto it = t_.find(e);
        return it == t_.end() ? S() : it->second;
    }

    const ExpVec& leading_monomial() const {
        if (t_.empty()) throw std::domain_error("MultiPoly: zero polynomial has no leading term");
        return t_.begin()->first;
    }
    S leading_coeff() const { return t_.empty() ? S() : t_.begin()->second; }

    MultiPoly& operator+=(const MultiPoly& o) {
        check_same(o);
        for (const auto& [e, c] : o.t_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        check_same(o);
        for (const auto& [e, c] : o.t_) add_term(e, -c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    MultiPoly operator-() const {
        MultiPoly r(nv_);
        for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_same(b);
        MultiPoly r(a.nv_);
        for (const auto& [e1, c1] : a.t_)
            for (const auto& [e2, c2] : b.t_) r.add_term(exp_add(e1, e2), c1 * c2);
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    friend MultiPoly operator*(const MultiPoly& a, const S& s) {
        MultiPoly r(a.nv_);
        for (const auto& [e, c] : a.t_) r.add_term(e, c * s);
        return r;
    }
    friend MultiPoly operator*(const S& s, const MultiPoly& a) { return a * s; }

    MultiPoly scale(const Rational& s) const {
        MultiPoly r(nv_);
        for (const auto& [e, c] : t_) r.add_term(e, c * s);
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nv_ == b.nv_ && a.t_ == b.t_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    /// k-th partial derivative in variable i.
    MultiPoly derivative(int i, int k = 1) const {
        MultiPoly r(nv_);
        for (const auto& [e, c] : t_) {
            if (e.at(i) < k) continue;
            ExpVec f(e);
            f[i] -= k;
            r.add_term(f, c * Rational(int_falling(e[i], k)));
        }
        return r;
    }

    MultiPoly graded_component(int d) const {
        MultiPoly r(nv_);
        for (const auto& [e, c] : t_)
            if (exp_degree(e) == d) r.t_.emplace(e, c);
        return r;
    }

    /// Substitution x_i -> x_{perm[i]}.
    MultiPoly permuted(const std::vector<int>& perm) const {
        MultiPoly r(nv_);
        for (const auto& [e, c] : t_) {
            ExpVec f(nv_, 0);
            for (int i = 0; i < nv_; ++i) f.at(perm.at(i)) = e[i];
            r.add_term(f, c);
        }
        return r;
    }

    /// Exact division by the monomial x^e; throws if some term is not divisible.
    MultiPoly divide_monomial(const ExpVec& e) const {
        MultiPoly r(nv_);
        for (const auto& [f, c] : t_) {
            if (!exp_divides(e, f)) throw std::domain_error("MultiPoly: monomial division not exact");
            r.add_term(exp_sub(f, e), c);
        }
        return r;
    }

    template <class T = S>
    std::enable_if_t<std::is_same_v<T, Rational>, Rational> eval(const std::vector<Rational>& x) const {
        Rational acc(0);
        for (const auto& [e, c] : t_) {
            Rational term = c;
            for (int i = 0; i < nv_; ++i) term *= x.at(i).pow(e[i]);
            acc += term;
        }
        return acc;
    }

    std::size_t complexity() const {
        std::size_t s = 1;
        for (const auto& [e, c] : t_) s += 1 + c.complexity();
        return s;
    }

    std::string render(const std::string& base = "x") const {
        if (t_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : t_) {
            std::string mono = exp_render(e, base);
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
    void check_width(const ExpVec& e) const {
        if (static_cast<int>(e.size()) != nv_)
            throw std::invalid_argument("MultiPoly: exponent arity mismatch");
    }
    void check_same(const MultiPoly& o) const {
        if (nv_ != o.nv_) throw std::invalid_argument("MultiPoly: variable count mismatch");
    }

    int nv_;
    TermMap t_;
};

template <class S>
std::size_t complexity(const MultiPoly<S>& p) {
    return p.complexity();
}

/// Apolar pairing <f, g> = f(d/dx) g evaluated at 0.  On monomials this is
/// a! when the exponents agree and 0 otherwise, so it reduces to a sum over
/// the common support.
template <class S>
S apolar_pairing(const MultiPoly<S>& f, const MultiPoly<S>& g) {
    if (f.nvars() != g.nvars()) throw std::invalid_argument("apolar_pairing: arity mismatch");
    S acc{};
    for (const auto& [e, c] : f.terms()) {
        S gc = g.coeff(e);
        if (gc.is_zero()) continue;
        Rational fact(1);
        for (int x : e) fact *= Rational(int_factorial(x));
        acc += c * gc * fact;
    }
    return acc;
}

template <class S2, class S, class F>
MultiPoly<S2> map_coeffs(const MultiPoly<S>& p, F&& fn) {
    MultiPoly<S2> r(p.nvars());
    for (const auto& [e, c] : p.terms()) r.add_term(e, fn(c));
    return r;
}

inline MultiPoly<QScalar> embed_q(const MultiPoly<Rational>& p) {
    return map_coeffs<QScalar>(p, [](const Rational& c) { return QScalar(c); });
}

inline MultiPoly<Rational> one_like(const MultiPoly<Rational>& p) {
    return MultiPoly<Rational>::constant(p.nvars(), Rational(1));
}

/// Rational content: gcd of numerators over lcm of denominators, signed so
/// that dividing by it leaves integer coefficients with positive leading term.
inline Rational poly_content(const MultiPoly<Rational>& p) {
    if (p.is_zero()) return Rational(0);
    Integer g(0), l(1);
    for (const auto& [e, c] : p.terms()) {
        Integer gn, ln;
        mpz_gcd(gn.get_mpz_t(), g.get_mpz_t(), c.num().get_mpz_t());
        g = gn;
        mpz_lcm(ln.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
        l = ln;
    }
    Rational content(g, l);
    return p.leading_coeff().sign() < 0 ? -content : content;
}

/// Content-only normalization for multivariate fractions: no multivariate gcd
/// is attempted, equality stays exact through cross-multiplication in Frac.
inline void reduce_fraction(MultiPoly<Rational>& num, MultiPoly<Rational>& den) {
    if (num.is_zero()) {
        den = MultiPoly<Rational>::constant(den.nvars(), Rational(1));
        return;
    }
    Rational cn = poly_content(num), cd = poly_content(den);
    num = num.scale(Rational(1) / cn);
    den = den.scale(Rational(1) / cd);
    Rational carried = cn / cd;
    num = num.scale(carried);
}

}  // namespace steenrod

#endif
