#ifndef STEENROD_FRACTION_HPP
#define STEENROD_FRACTION_HPP

#include <stdexcept>
#include <string>

#include "rational.hpp"
#include "upoly.hpp"

namespace steenrod {

/// One value of every scalar field; each scalar type contributes an overload
/// of scalar_one_impl next to its definition.
inline Rational scalar_one_impl(Rational*) { return Rational(1); }

template <class S>
S scalar_one() { return scalar_one_impl(static_cast<S*>(nullptr)); }

/// Fraction over a polynomial ring P.  Normalization is delegated to
/// reduce_fraction(num, den) and the multiplicative unit to one_like(p), both
/// found by ADL; equality is exact regardless of whether the normalization
/// fully cancels common factors.
template <class P>
class Frac {
  public:
    Frac() : num_(), den_(one_like(num_)) {}
    Frac(const Rational& c) : num_(P(c)), den_(one_like(num_)) {}
    Frac(long c) : num_(P(Rational(c))), den_(one_like(num_)) {}
    Frac(P num) : num_(std::move(num)), den_(one_like(num_)) {}
    Frac(P num, P den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("Frac: zero denominator");
        reduce_fraction(num_, den_);
    }

    const P& num() const { return num_; }
    const P& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }

    friend Frac operator+(const Frac& a, const Frac& b) {
        return Frac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Frac operator-(const Frac& a, const Frac& b) {
        return Frac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Frac operator*(const Frac& a, const Frac& b) {
        return Frac(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Frac operator/(const Frac& a, const Frac& b) {
        if (b.is_zero()) throw std::domain_error("Frac: division by zero");
        return Frac(a.num_ * b.den_, a.den_ * b.num_);
    }
    Frac operator-() const {
        Frac r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Frac& operator+=(const Frac& o) { return *this = *this + o; }
    Frac& operator-=(const Frac& o) { return *this = *this - o; }
    Frac& operator*=(const Frac& o) { return *this = *this * o; }
    Frac& operator/=(const Frac& o) { return *this = *this / o; }

    friend Frac operator*(const Frac& a, const Rational& s) {
        if (s.is_zero()) return Frac();
        Frac r;
        r.num_ = a.num_ * s;
        r.den_ = a.den_;
        return r;
    }
    friend Frac operator*(const Rational& s, const Frac& a) { return a * s; }

    friend bool operator==(const Frac& a, const Frac& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }

    std::size_t complexity() const { return num_.complexity() + den_.complexity(); }

    std::string render() const {
        if (den_.is_one()) return num_.render();
        return "(" + num_.render() + ")/(" + den_.render() + ")";
    }

  private:
    P num_, den_;
};

inline UPoly one_like(const UPoly&) { return UPoly(1); }

/// Full cancellation for univariate fractions; the denominator comes out monic,
/// so the representation is canonical.
inline void reduce_fraction(UPoly& num, UPoly& den) {
    if (num.is_zero()) {
        den = UPoly(1);
        return;
    }
    UPoly g = gcd(num, den);
    if (g.degree() > 0) {
        num = exact_div(num, g);
        den = exact_div(den, g);
    }
    Rational lc = den.leading();
    if (!lc.is_one()) {
        Rational inv = Rational(1) / lc;
        num = num * inv;
        den = den * inv;
    }
}

/// Rational functions of the deformation parameter q.
using QScalar = Frac<UPoly>;

inline QScalar scalar_one_impl(QScalar*) { return QScalar(UPoly(1)); }

inline QScalar q_var() { return QScalar(UPoly::var()); }

inline bool is_q_constant(const QScalar& s) {
    return s.num().is_constant() && s.den().is_constant();
}

inline Rational q_constant_value(const QScalar& s) {
    if (!is_q_constant(s)) throw std::domain_error("QScalar: not a constant");
    return s.num().coeff(0) / s.den().coeff(0);
}

/// Evaluate at a rational point; throws on a pole.
inline Rational eval_q(const QScalar& s, const Rational& q0) {
    Rational d = s.den().eval(q0);
    if (d.is_zero()) throw std::domain_error("QScalar: pole at q = " + q0.render());
    return s.num().eval(q0) / d;
}

template <class P>
std::string to_string(const Frac<P>& f) { return f.render(); }
template <class P>
std::size_t complexity(const Frac<P>& f) { return f.complexity(); }

}  // namespace steenrod

#endif
