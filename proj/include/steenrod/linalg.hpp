#ifndef STEENROD_LINALG_HPP
#define STEENROD_LINALG_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "fraction.hpp"
#include "multipoly.hpp"
#include "prat.hpp"
#include "rational.hpp"
#include "upoly.hpp"

namespace steenrod {

template <class T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const T& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

/// Divide a row by its content and fix the sign of its first nonzero entry.
/// Row scaling by nonzero domain elements preserves the rowspace over the
/// fraction field, so rank and nullspace are unaffected.
inline void normalize_row(std::vector<Rational>& row) {
    Integer g(0), l(1);
    for (const auto& x : row) {
        if (x.is_zero()) continue;
        Integer gn, ln;
        mpz_gcd(gn.get_mpz_t(), g.get_mpz_t(), x.num().get_mpz_t());
        g = gn;
        mpz_lcm(ln.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
        l = ln;
    }
    if (g == 0) return;
    Rational content(g, l);
    for (const auto& x : row)
        if (!x.is_zero()) {
            if (x.sign() < 0) content = -content;
            break;
        }
    for (auto& x : row) x /= content;
}

inline void normalize_row(std::vector<UPoly>& row) {
    UPoly g;
    for (const auto& p : row) g = gcd(g, p);
    if (g.is_zero()) return;
    std::vector<Rational> coeffs;
    for (auto& p : row) {
        if (g.degree() > 0) p = exact_div(p, g);
        for (const auto& c : p.coeffs()) coeffs.push_back(c);
    }
    normalize_row(coeffs);
    std::size_t idx = 0;
    for (auto& p : row) {
        std::vector<Rational> nc(p.coeffs().size());
        for (std::size_t i = 0; i < nc.size(); ++i) nc[i] = coeffs[idx++];
        p = UPoly(std::move(nc));
    }
}

inline void normalize_row(std::vector<MultiPoly<Rational>>& row) {
    std::vector<Rational> coeffs;
    for (const auto& p : row)
        for (const auto& [e, c] : p.terms()) coeffs.push_back(c);
    Integer g(0), l(1);
    for (const auto& x : coeffs) {
        Integer gn, ln;
        mpz_gcd(gn.get_mpz_t(), g.get_mpz_t(), x.num().get_mpz_t());
        g = gn;
        mpz_lcm(ln.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
        l = ln;
    }
    if (g == 0) return;
    Rational content(g, l);
    for (const auto& p : row)
        if (!p.is_zero()) {
            if (p.leading_coeff().sign() < 0) content = -content;
            break;
        }
    Rational inv = Rational(1) / content;
    for (auto& p : row) p = p.scale(inv);
}

template <class T>
struct EchelonResult {
    std::vector<std::vector<T>> rows;  // pivot rows, ordered by pivot column
    std::vector<int> pivot_cols;
    int rank = 0;
};

/// Fraction-free row echelon: eliminate by cross-multiplication inside the
/// coefficient domain, stripping row content after every update.  Pivot choice:
/// smallest entry complexity in the current column, ties by row order.
template <class T>
EchelonResult<T> echelon(std::vector<std::vector<T>> rows, int cols) {
    for (auto& r : rows) normalize_row(r);
    std::vector<bool> used(rows.size(), false);
    EchelonResult<T> res;
    std::vector<std::pair<int, int>> pivots;  // (row, col)
    for (int col = 0; col < cols; ++col) {
        int best = -1;
        std::size_t best_cx = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (used[i] || rows[i][col].is_zero()) continue;
            std::size_t cx = complexity(rows[i][col]);
            if (best < 0 || cx < best_cx) {
                best = static_cast<int>(i);
                best_cx = cx;
            }
        }
        if (best < 0) continue;
        used[best] = true;
        pivots.emplace_back(best, col);
        const std::vector<T>& prow = rows[best];
        T p = prow[col];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (used[i] || rows[i][col].is_zero()) continue;
            T f = rows[i][col];
            for (int j = 0; j < cols; ++j) rows[i][j] = p * rows[i][j] - f * prow[j];
            normalize_row(rows[i]);
        }
    }
    for (const auto& [r, c] : pivots) {
        res.rows.push_back(std::move(rows[r]));
        res.pivot_cols.push_back(c);
    }
    res.rank = static_cast<int>(res.pivot_cols.size());
    return res;
}

template <class T>
int rank_of(std::vector<std::vector<T>> rows, int cols) {
    return echelon(std::move(rows), cols).rank;
}

/// Unique reduced row echelon form over a field, in place.  Returns pivot columns.
template <class F>
std::vector<int> rref_field(std::vector<std::vector<F>>& rows, int cols) {
    std::vector<int> pivot_cols;
    int r = 0;
    for (int col = 0; col < cols && r < static_cast<int>(rows.size()); ++col) {
        int sel = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (!rows[i][col].is_zero()) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(rows[r], rows[sel]);
        F inv = scalar_one<F>() / rows[r][col];
        for (int j = col; j < cols; ++j) rows[r][j] = rows[r][j] * inv;
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == r || rows[i][col].is_zero()) continue;
            F f = rows[i][col];
            for (int j = col; j < cols; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
        }
        pivot_cols.push_back(col);
        ++r;
    }
    rows.resize(pivot_cols.size(), std::vector<F>());
    return pivot_cols;
}

/// Nullspace basis over the fraction field, canonicalized to the unique RREF
/// of the solution space (leading coefficients 1, pivots cleared).
template <class F, class T, class ToField>
std::vector<std::vector<F>> nullspace(const std::vector<std::vector<T>>& mat_rows, int cols,
                                      ToField to_field) {
    EchelonResult<T> ech = echelon(mat_rows, cols);
    std::vector<bool> is_pivot(cols, false);
    for (int c : ech.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<F>> basis;
    for (int fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<F> v(cols, F{});
        v[fc] = scalar_one<F>();
        for (int i = ech.rank - 1; i >= 0; --i) {
            int pc = ech.pivot_cols[i];
            F acc{};
            for (int j = pc + 1; j < cols; ++j) {
                if (v[j].is_zero() || ech.rows[i][j].is_zero()) continue;
                acc += to_field(ech.rows[i][j]) * v[j];
            }
            if (!acc.is_zero()) v[pc] = -acc / to_field(ech.rows[i][pc]);
        }
        basis.push_back(std::move(v));
    }
    rref_field(basis, cols);
    return basis;
}

/// Express v in the span of RREF basis rows; nullopt when v is outside.
template <class F>
std::optional<std::vector<F>> solve_in_span(const std::vector<std::vector<F>>& rref_rows,
                                            const std::vector<int>& pivot_cols,
                                            std::vector<F> v) {
    std::vector<F> coeffs(rref_rows.size(), F{});
    for (std::size_t i = 0; i < rref_rows.size(); ++i) {
        F c = v[pivot_cols[i]];
        if (c.is_zero()) continue;
        coeffs[i] = c;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = v[j] - c * rref_rows[i][j];
    }
    for (const auto& x : v)
        if (!x.is_zero()) return std::nullopt;
    return coeffs;
}

/// Coefficients expressing v as a combination of the given rows, nullopt if
/// v is outside their span.  Pivots are chosen among the first cols entries;
/// bookkeeping columns appended to each row track the combination.
template <class F>
std::optional<std::vector<F>> solve_row_combination(std::vector<std::vector<F>> rows, int cols,
                                                    const std::vector<F>& v) {
    int m = static_cast<int>(rows.size());
    int width = cols + m;
    for (int i = 0; i < m; ++i) {
        rows[i].resize(width, F{});
        rows[i][cols + i] = scalar_one<F>();
    }
    std::vector<F> target(v);
    target.resize(width, F{});
    int r = 0;
    for (int col = 0; col < cols && r < m; ++col) {
        int sel = -1;
        for (int i = r; i < m; ++i)
            if (!rows[i][col].is_zero()) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(rows[r], rows[sel]);
        F inv = scalar_one<F>() / rows[r][col];
        for (int j = col; j < width; ++j) rows[r][j] = rows[r][j] * inv;
        for (int i = 0; i < m; ++i) {
            if (i == r || rows[i][col].is_zero()) continue;
            F f = rows[i][col];
            for (int j = col; j < width; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
        }
        if (!target[col].is_zero()) {
            F f = target[col];
            for (int j = col; j < width; ++j) target[j] = target[j] - f * rows[r][j];
        }
        ++r;
    }
    for (int j = 0; j < cols; ++j)
        if (!target[j].is_zero()) return std::nullopt;
    std::vector<F> coeffs;
    for (int i = 0; i < m; ++i) coeffs.push_back(-target[cols + i]);
    return coeffs;
}

/// Row scaling that moves a fraction-field row into its coefficient domain.
template <class S>
struct RowDomain;

template <>
struct RowDomain<Rational> {
    using D = Rational;
    static std::vector<D> clear(const std::vector<Rational>& row) { return row; }
    static Rational to_field(const Rational& x) { return x; }
};

template <>
struct RowDomain<QScalar> {
    using D = UPoly;
    static std::vector<D> clear(const std::vector<QScalar>& row) {
        UPoly l(1);
        for (const auto& s : row) {
            if (s.is_zero()) continue;
            UPoly g = gcd(l, s.den());
            l = exact_div(l * s.den(), g);
        }
        std::vector<D> out;
        out.reserve(row.size());
        for (const auto& s : row) out.push_back(s.num() * exact_div(l, s.den()));
        return out;
    }
    static QScalar to_field(const UPoly& p) { return QScalar(p); }
};

template <int NV>
struct RowDomain<PRat<NV>> {
    using D = MultiPoly<Rational>;
    static std::vector<D> clear(const std::vector<PRat<NV>>& row) {
        // multiply entry i by the product of the other denominators; this clears
        // the row without relying on multivariate gcd cancellation
        std::vector<D> out;
        out.reserve(row.size());
        for (std::size_t i = 0; i < row.size(); ++i) {
            D acc = row[i].num();
            for (std::size_t j = 0; j < row.size(); ++j)
                if (j != i && !row[j].den().is_one()) acc = acc * row[j].den();
            out.push_back(acc);
        }
        return out;
    }
    static PRat<NV> to_field(const MultiPoly<Rational>& p) { return PRat<NV>(p); }
};

/// Kernel of a matrix given by field-valued rows: clears denominators into the
/// domain, runs the fraction-free echelon, and returns the canonical basis.
template <class S>
std::vector<std::vector<S>> kernel_basis(const std::vector<std::vector<S>>& rows, int cols) {
    using RD = RowDomain<S>;
    std::vector<std::vector<typename RD::D>> drows;
    drows.reserve(rows.size());
    for (const auto& r : rows) drows.push_back(RD::clear(r));
    return nullspace<S>(drows, cols, [](const typename RD::D& x) { return RD::to_field(x); });
}

template <class S>
int rank_rows(const std::vector<std::vector<S>>& rows, int cols) {
    using RD = RowDomain<S>;
    std::vector<std::vector<typename RD::D>> drows;
    drows.reserve(rows.size());
    for (const auto& r : rows) drows.push_back(RD::clear(r));
    return rank_of(std::move(drows), cols);
}

}  // namespace steenrod

#endif
