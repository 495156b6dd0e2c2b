#ifndef STEENROD_RATIONAL_HPP
#define STEENROD_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace steenrod {

using Integer = mpz_class;

inline Integer int_factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer int_binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// n (n-1) ... (n-k+1); zero when k > n.
inline Integer int_falling(unsigned long n, unsigned long k) {
    if (k > n) return Integer(0);
    Integer r(1);
    for (unsigned long j = 0; j < k; ++j) r *= Integer(n - j);
    return r;
}

/// Exact rational scalar.  Always canonical: gcd(num, den) = 1, den > 0, zero is 0/1.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& n, const Integer& d) : v_(n, d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(long n, long d) : Rational(Integer(n), Integer(d)) {}

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }

    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { Rational r; r.v_ = -v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    int sign() const { return sgn(v_); }

    Rational pow(unsigned long e) const {
        Rational r(1), base(*this);
        for (unsigned long i = 0; i < e; ++i) r *= base;
        return r;
    }

    /// Rough size of the rendered value; used for pivot selection.
    std::size_t complexity() const {
        return mpz_sizeinbase(v_.get_num().get_mpz_t(), 10) +
               mpz_sizeinbase(v_.get_den().get_mpz_t(), 10);
    }

    std::string render() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

  private:
    mpq_class v_;
};

inline Rational rational_factorial(unsigned long n) { return Rational(int_factorial(n)); }
inline std::string to_string(const Rational& r) { return r.render(); }
inline std::size_t complexity(const Rational& r) { return r.complexity(); }

}  // namespace steenrod

#endif
