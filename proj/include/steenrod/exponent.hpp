#ifndef STEENROD_EXPONENT_HPP
#define STEENROD_EXPONENT_HPP

#include <numeric>
#include <string>
#include <vector>

namespace steenrod {

using ExpVec = std::vector<int>;

inline int exp_degree(const ExpVec& e) { return std::accumulate(e.begin(), e.end(), 0); }

inline ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline bool exp_divides(const ExpVec& a, const ExpVec& b) {  // a <= b componentwise
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline ExpVec exp_sub(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

/// Graded lexicographic order with x1 > x2 > ... > xn; returns true when a
/// ranks strictly before b (higher degree first, then lexicographically larger).
inline bool grlex_before(const ExpVec& a, const ExpVec& b) {
    int da = exp_degree(a), db = exp_degree(b);
    if (da != db) return da > db;
    return a > b;
}

struct GrlexDesc {
    bool operator()(const ExpVec& a, const ExpVec& b) const { return grlex_before(a, b); }
};

/// All exponent vectors of the given total degree, in descending graded-lex order.
inline std::vector<ExpVec> monomials_of_degree(int nvars, int degree) {
    std::vector<ExpVec> out;
    ExpVec cur(nvars, 0);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == nvars - 1) {
            cur[pos] = rem;
            out.push_back(cur);
            cur[pos] = 0;
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur[pos] = e;
            self(self, pos + 1, rem - e);
        }
        cur[pos] = 0;
    };
    if (nvars == 0) {
        if (degree == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, degree);
    return out;
}

/// "x1^2*x2" style rendering; an empty product renders as "1".
inline std::string exp_render(const ExpVec& e, const std::string& base = "x") {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += base + std::to_string(i + 1);
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

}  // namespace steenrod

#endif
