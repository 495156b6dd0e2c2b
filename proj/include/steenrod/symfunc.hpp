#pragma once

// Homogeneous symmetric functions of one fixed degree n with coefficients
// that are rational functions in the grading variable t.  The power-sum
// basis carries the ring structure; Schur expansions come out through the
// character table and must clear to honest polynomials when they encode
// graded multiplicities.

#include <steenrod/characters.hpp>
#include <steenrod/fraction.hpp>

#include <map>
#include <sstream>

namespace steenrod {

enum class SymBasis { powersum, schur, homogeneous };

/// Coefficients are Frac<UPoly> in the grading variable t.
using TScalar = Frac<UPoly>;

struct SymFunc {
    int n = 0;
    SymBasis basis = SymBasis::powersum;
    std::map<Partition, TScalar> coeffs;  // zero entries dropped

    void add(const Partition& p, const TScalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = coeffs.emplace(p, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) coeffs.erase(it);
        }
    }
    bool is_zero() const { return coeffs.empty(); }

    friend bool operator==(const SymFunc& a, const SymFunc& b) {
        return a.n == b.n && a.basis == b.basis && a.coeffs == b.coeffs;
    }
};

inline SymFunc sym_zero(int n, SymBasis basis) { return SymFunc{n, basis, {}}; }

inline SymFunc sym_basis_element(int n, SymBasis basis, const Partition& p) {
    if (!is_partition(p) || partition_weight(p) != n)
        throw std::invalid_argument("sym_basis_element: bad partition");
    SymFunc f{n, basis, {}};
    f.add(p, TScalar(Rational(1)));
    return f;
}

inline SymFunc sym_p(const Partition& p) {
    return sym_basis_element(partition_weight(p), SymBasis::powersum, p);
}
inline SymFunc sym_s(const Partition& p) {
    return sym_basis_element(partition_weight(p), SymBasis::schur, p);
}
inline SymFunc sym_h(const Partition& p) {
    return sym_basis_element(partition_weight(p), SymBasis::homogeneous, p);
}

inline SymFunc operator+(const SymFunc& a, const SymFunc& b) {
    if (a.n != b.n || a.basis != b.basis)
        throw std::invalid_argument("SymFunc: mixed addition");
    SymFunc out = a;
    for (const auto& [p, c] : b.coeffs) out.add(p, c);
    return out;
}

inline SymFunc operator*(const SymFunc& a, const TScalar& s) {
    SymFunc out{a.n, a.basis, {}};
    for (const auto& [p, c] : a.coeffs) out.add(p, c * s);
    return out;
}

inline SymFunc operator*(const SymFunc& a, const UPoly& s) { return a * TScalar(s); }
inline SymFunc operator*(const SymFunc& a, const Rational& s) { return a * TScalar(s); }

/// Expansion into power sums; the n = 0 unit passes through untouched.
inline SymFunc to_powersum(const SymFunc& f) {
    if (f.basis == SymBasis::powersum) return f;
    SymFunc out{f.n, SymBasis::powersum, {}};
    if (f.basis == SymBasis::schur) {
        for (const auto& [lam, c] : f.coeffs)
            for (const auto& mu : partitions_of(f.n)) {
                long chi = mn_character(lam, mu);
                if (chi == 0) continue;
                out.add(mu, c * Rational(Integer(chi), partition_z(mu)));
            }
        return out;
    }
    // homogeneous: h_m = sum_{mu of m} p_mu / z_mu, multiplied across parts
    for (const auto& [lam, c] : f.coeffs) {
        std::map<Partition, TScalar> acc;
        acc.emplace(Partition{}, c);
        for (int part : lam) {
            std::map<Partition, TScalar> next;
            for (const auto& mu : partitions_of(part)) {
                Rational w(Integer(1), partition_z(mu));
                for (const auto& [base, bc] : acc) {
                    Partition merged = base;
                    merged.insert(merged.end(), mu.begin(), mu.end());
                    std::sort(merged.begin(), merged.end(), std::greater<int>());
                    auto [it, fresh] = next.emplace(merged, bc * w);
                    if (!fresh) it->second += bc * w;
                }
            }
            acc = std::move(next);
        }
        for (const auto& [p, pc] : acc) out.add(p, pc);
    }
    return out;
}

/// Expansion into Schur functions via the character table.
inline SymFunc to_schur(const SymFunc& f) {
    if (f.basis == SymBasis::schur) return f;
    SymFunc p = to_powersum(f);
    SymFunc out{f.n, SymBasis::schur, {}};
    for (const auto& lam : partitions_of(f.n)) {
        TScalar acc;
        for (const auto& [mu, c] : p.coeffs) {
            long chi = mn_character(lam, mu);
            if (chi != 0) acc += c * Rational(chi);
        }
        out.add(lam, acc);
    }
    return out;
}

/// Product, computed in the power-sum basis where p_lam p_mu = p_{lam u mu}.
inline SymFunc sym_mul(const SymFunc& a, const SymFunc& b) {
    SymFunc pa = to_powersum(a), pb = to_powersum(b);
    SymFunc out{a.n + b.n, SymBasis::powersum, {}};
    for (const auto& [p1, c1] : pa.coeffs)
        for (const auto& [p2, c2] : pb.coeffs) {
            Partition merged = p1;
            merged.insert(merged.end(), p2.begin(), p2.end());
            std::sort(merged.begin(), merged.end(), std::greater<int>());
            out.add(merged, c1 * c2);
        }
    return out;
}

/// The coefficient as a polynomial in t; errors if a denominator survives.
inline UPoly sym_poly_coeff(const SymFunc& f, const Partition& p) {
    auto it = f.coeffs.find(p);
    if (it == f.coeffs.end()) return UPoly();
    if (!it->second.den().is_one())
        throw std::domain_error("sym_poly_coeff: coefficient is not polynomial");
    return it->second.num();
}

/// All coefficients as polynomials, in one map.
inline std::map<Partition, UPoly> sym_poly_coeffs(const SymFunc& f) {
    std::map<Partition, UPoly> out;
    for (const auto& [p, c] : f.coeffs) out.emplace(p, sym_poly_coeff(f, p));
    return out;
}

/// Every coefficient a polynomial with nonnegative integer coefficients.
inline bool sym_is_multiplicity_positive(const SymFunc& f) {
    for (const auto& [p, c] : f.coeffs) {
        if (!c.den().is_one()) return false;
        const UPoly& poly = c.num();
        for (int d = 0; d <= poly.degree(); ++d) {
            Rational x = poly.coeff(d);
            if (!x.is_integer() || x.sign() < 0) return false;
        }
    }
    return true;
}

/// Specialize t = 1; poles propagate as errors.
inline std::map<Partition, Rational> sym_eval_t1(const SymFunc& f) {
    std::map<Partition, Rational> out;
    for (const auto& [p, c] : f.coeffs) {
        Rational num = c.num().eval(Rational(1));
        Rational den = c.den().eval(Rational(1));
        if (den.is_zero()) throw std::domain_error("sym_eval_t1: pole at t = 1");
        out.emplace(p, num / den);
    }
    return out;
}

namespace detail {

/// Ascending compact rendering: "1+t", "1+2*t+t^2", "t^3", "2".
inline std::string render_t_ascending(const UPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = 0; d <= p.degree(); ++d) {
        Rational c = p.coeff(d);
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() < 0 ? "-" : "+");
        else if (c.sign() < 0) os << "-";
        first = false;
        Rational mag = c.sign() < 0 ? -c : c;
        bool unit = mag.is_one() && d > 0;
        if (!unit) os << to_string(mag);
        if (d > 0) {
            if (!unit) os << "*";
            os << "t";
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

inline std::string render_partition(const Partition& p) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << ",";
        os << p[i];
    }
    os << "]";
    return os.str();
}

/// One coefficient in the factored canonical form: "", "2*", "t^3*",
/// "t*(1+t)*".
inline std::string render_coeff_factor(const UPoly& c) {
    if (c.is_one()) return "";
    int terms = 0;
    for (int d = 0; d <= c.degree(); ++d)
        if (!c.coeff(d).is_zero()) ++terms;
    std::ostringstream os;
    if (terms == 1) {
        int d = c.degree();
        Rational a = c.coeff(d);
        if (!a.is_one() || d == 0) os << to_string(a) << "*";
        if (d > 0) {
            os << "t";
            if (d > 1) os << "^" << d;
            os << "*";
        }
        return os.str();
    }
    int v = 0;
    while (c.coeff(v).is_zero()) ++v;
    std::vector<Rational> rest;
    for (int d = v; d <= c.degree(); ++d) rest.push_back(c.coeff(d));
    if (v > 0) {
        os << "t";
        if (v > 1) os << "^" << v;
        os << "*";
    }
    os << "(" << render_t_ascending(UPoly(std::move(rest))) << ")*";
    return os.str();
}

}  // namespace detail

/// Canonical rendering, partitions in descending lexicographic order:
/// "s[3] + t*(1+t)*s[2,1] + t^3*s[1,1,1]".
inline std::string sym_render(const SymFunc& f) {
    const char* tag = f.basis == SymBasis::powersum ? "p"
                      : f.basis == SymBasis::schur  ? "s"
                                                    : "h";
    if (f.coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        const TScalar& c = it->second;
        if (c.den().is_one()) {
            os << detail::render_coeff_factor(c.num());
        } else {
            os << "(" << detail::render_t_ascending(c.num()) << ")/("
               << detail::render_t_ascending(c.den()) << ")*";
        }
        os << tag << detail::render_partition(it->first);
    }
    return os.str();
}

}  // namespace steenrod
