#ifndef STEENROD_PRAT_HPP
#define STEENROD_PRAT_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "multipoly.hpp"

namespace steenrod {

/// Rational functions in NV named parameters (a1..aNV by default).  The
/// parameter count is a compile-time constant so zero and one need no runtime
/// context.  Built on Frac<MultiPoly<Rational>>, hence equality by
/// cross-multiplication and content-only normalization.
template <int NV>
class PRat {
  public:
    using Poly = MultiPoly<Rational>;

    PRat() : f_(Poly(NV)) {}
    PRat(const Rational& c) : f_(Poly::constant(NV, c)) {}
    PRat(long c) : PRat(Rational(c)) {}
    explicit PRat(const Poly& num) : f_(checked(num)) {}
    PRat(const Poly& num, const Poly& den) : f_(checked(num), checked(den)) {}

    static PRat one() { return PRat(Rational(1)); }
    static PRat var(int i) { return PRat(Poly::variable(NV, i)); }

    const Poly& num() const { return f_.num(); }
    const Poly& den() const { return f_.den(); }

    bool is_zero() const { return f_.is_zero(); }
    bool is_one() const { return f_.is_one(); }

    friend PRat operator+(const PRat& a, const PRat& b) { return PRat(a.f_ + b.f_); }
    friend PRat operator-(const PRat& a, const PRat& b) { return PRat(a.f_ - b.f_); }
    friend PRat operator*(const PRat& a, const PRat& b) { return PRat(a.f_ * b.f_); }
    friend PRat operator/(const PRat& a, const PRat& b) { return PRat(a.f_ / b.f_); }
    PRat operator-() const { return PRat(-f_); }
    PRat& operator+=(const PRat& o) { f_ += o.f_; return *this; }
    PRat& operator-=(const PRat& o) { f_ -= o.f_; return *this; }
    PRat& operator*=(const PRat& o) { f_ *= o.f_; return *this; }
    PRat& operator/=(const PRat& o) { f_ /= o.f_; return *this; }

    friend PRat operator*(const PRat& a, const Rational& s) { return PRat(a.f_ * s); }
    friend PRat operator*(const Rational& s, const PRat& a) { return PRat(a.f_ * s); }

    friend bool operator==(const PRat& a, const PRat& b) { return a.f_ == b.f_; }
    friend bool operator!=(const PRat& a, const PRat& b) { return a.f_ != b.f_; }

    Rational eval(const std::vector<Rational>& point) const {
        Rational d = f_.den().eval(point);
        if (d.is_zero()) throw std::domain_error("PRat: pole at evaluation point");
        return f_.num().eval(point) / d;
    }

    /// Parameter substitution a_i -> a_{perm[i]} in numerator and denominator.
    PRat permuted(const std::vector<int>& perm) const {
        return PRat(f_.num().permuted(perm), f_.den().permuted(perm));
    }

    std::size_t complexity() const { return f_.complexity(); }

    std::string render(const std::string& base = "a") const {
        if (f_.den().is_one()) return f_.num().render(base);
        return "(" + f_.num().render(base) + ")/(" + f_.den().render(base) + ")";
    }

  private:
    explicit PRat(Frac<Poly> f) : f_(std::move(f)) {}
    static const Poly& checked(const Poly& p) {
        if (p.nvars() != NV) throw std::invalid_argument("PRat: parameter arity mismatch");
        return p;
    }

    Frac<Poly> f_;
};

template <int NV>
PRat<NV> scalar_one_impl(PRat<NV>*) { return PRat<NV>::one(); }

template <int NV>
std::string to_string(const PRat<NV>& f) { return f.render(); }
template <int NV>
std::size_t complexity(const PRat<NV>& f) { return f.complexity(); }

}  // namespace steenrod

#endif
