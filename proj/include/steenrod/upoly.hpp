#ifndef STEENROD_UPOLY_HPP
#define STEENROD_UPOLY_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace steenrod {

/// Dense univariate polynomial over the rationals.  Trailing zeros are never stored,
/// so the zero polynomial has an empty coefficient vector and degree -1.
class UPoly {
  public:
    UPoly() = default;
    UPoly(const Rational& c) { if (!c.is_zero()) c_.push_back(c); }
    UPoly(long c) : UPoly(Rational(c)) {}
    explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UPoly monomial(int deg, const Rational& c = Rational(1)) {
        if (c.is_zero()) return UPoly();
        std::vector<Rational> v(deg + 1);
        v[deg] = c;
        return UPoly(std::move(v));
    }
    static UPoly var() { return monomial(1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }

    Rational coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
        return c_[i];
    }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    UPoly& operator+=(const UPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UPoly& operator-=(const UPoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    UPoly operator-() const {
        UPoly r(*this);
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return UPoly(std::move(v));
    }
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

    friend UPoly operator*(const UPoly& a, const Rational& s) {
        if (s.is_zero()) return UPoly();
        UPoly r(a);
        for (auto& c : r.c_) c *= s;
        return r;
    }
    friend UPoly operator*(const Rational& s, const UPoly& a) { return a * s; }

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    /// Quotient and remainder with deg(rem) < deg(divisor).
    friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
        if (b.is_zero()) throw std::domain_error("UPoly: division by zero polynomial");
        UPoly rem(a), quo;
        quo.c_.assign(std::max<int>(a.degree() - b.degree() + 1, 0), Rational(0));
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            int d = rem.degree() - b.degree();
            Rational f = rem.leading() / b.leading();
            quo.c_[d] += f;
            rem -= UPoly::monomial(d, f) * b;
        }
        quo.trim();
        return {quo, rem};
    }

    /// Exact quotient; throws if the division leaves a remainder.
    friend UPoly exact_div(const UPoly& a, const UPoly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw std::domain_error("UPoly: inexact division");
        return q;
    }

    UPoly monic() const {
        if (is_zero()) return *this;
        return *this * (Rational(1) / leading());
    }

    Rational eval(const Rational& x) const {
        Rational r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    UPoly pow(unsigned long e) const {
        UPoly r(Rational(1)), base(*this);
        for (unsigned long i = 0; i < e; ++i) r *= base;
        return r;
    }

    std::size_t complexity() const {
        std::size_t s = c_.size();
        for (const auto& c : c_)
            if (!c.is_zero()) s += c.complexity();
        return s;
    }

    std::string render(const std::string& var = "q") const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            Rational c = c_[i];
            if (c.is_zero()) continue;
            bool neg = c.sign() < 0;
            Rational mag = neg ? -c : c;
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
            if (mono.empty())
                out += mag.render();
            else if (mag.is_one())
                out += mono;
            else
                out += mag.render() + "*" + mono;
        }
        return out;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
inline UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x(a), y(b);
    while (!y.is_zero()) {
        auto [q, r] = divmod(x, y);
        (void)q;
        x = y;
        y = r;
    }
    return x.monic();
}

inline std::string to_string(const UPoly& p) { return p.render(); }
inline std::size_t complexity(const UPoly& p) { return p.complexity(); }

/// [k]_t = 1 + t + ... + t^(k-1).
inline UPoly t_int(int k) {
    std::vector<Rational> v(std::max(k, 0), Rational(1));
    return UPoly(std::move(v));
}

/// [n]!_t = [1]_t [2]_t ... [n]_t.
inline UPoly t_factorial(int n) {
    UPoly r(Rational(1));
    for (int k = 1; k <= n; ++k) r *= t_int(k);
    return r;
}

}  // namespace steenrod

#endif
