#pragma once

// Partitions of n, standard Young tableaux, and the handful of statistics the
// representation-theory checks need.

#include <steenrod/rational.hpp>

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace steenrod {

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;

inline bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
    }
    return true;
}

inline int partition_weight(const Partition& p) {
    int s = 0;
    for (int x : p) s += x;
    return s;
}

/// All partitions of n, parts descending, listed in reverse lexicographic
/// order starting from (n).
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

inline Partition sorted_to_partition(std::vector<int> parts) {
    parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return parts;
}

/// n(lambda) = sum (i-1) lambda_i, the minimal degree carrying the shape.
inline int partition_n_stat(const Partition& p) {
    int s = 0;
    for (std::size_t i = 0; i < p.size(); ++i) s += static_cast<int>(i) * p[i];
    return s;
}

inline Partition conjugate(const Partition& p) {
    Partition c;
    for (int j = 0; p.empty() ? false : j < p[0]; ++j) {
        int cnt = 0;
        for (int part : p)
            if (part > j) ++cnt;
        c.push_back(cnt);
    }
    return c;
}

/// Number of parts equal to k.
inline int part_multiplicity(const Partition& p, int k) {
    int c = 0;
    for (int x : p)
        if (x == k) ++c;
    return c;
}

/// Centralizer order z_mu = prod k^{d_k} d_k!.
inline Integer partition_z(const Partition& mu) {
    Integer z = 1;
    int run = 1;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        z *= mu[i];
        if (i + 1 < mu.size() && mu[i + 1] == mu[i]) {
            ++run;
            z *= run;
        } else {
            run = 1;
        }
    }
    return z;
}

/// Conjugacy class size n!/z_mu.
inline Integer class_size(const Partition& mu) {
    return int_factorial(partition_weight(mu)) / partition_z(mu);
}

/// Tableaux are stored row-major; entries[r][c] holds the value in row r.
struct StandardTableau {
    std::vector<std::vector<int>> rows;

    Partition shape() const {
        Partition p;
        for (const auto& r : rows) p.push_back(static_cast<int>(r.size()));
        return p;
    }
    int size() const {
        int s = 0;
        for (const auto& r : rows) s += static_cast<int>(r.size());
        return s;
    }
    /// Row index holding the given value, or -1.
    int row_of(int value) const {
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (int x : rows[r])
                if (x == value) return static_cast<int>(r);
        return -1;
    }
};

/// Rows and columns strictly increasing, entries exactly 1..n.
inline bool is_standard(const StandardTableau& t) {
    if (!is_partition(t.shape())) return false;
    int n = t.size();
    std::vector<bool> seen(n + 1, false);
    for (std::size_t r = 0; r < t.rows.size(); ++r)
        for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
            int v = t.rows[r][c];
            if (v < 1 || v > n || seen[v]) return false;
            seen[v] = true;
            if (c + 1 < t.rows[r].size() && t.rows[r][c + 1] <= v) return false;
            if (r + 1 < t.rows.size() && t.rows[r + 1].size() > c && t.rows[r + 1][c] <= v)
                return false;
        }
    return true;
}

/// All standard tableaux of the given shape, by inserting 1..n row by row.
inline std::vector<StandardTableau> standard_tableaux(const Partition& shape) {
    if (!is_partition(shape)) throw std::invalid_argument("standard_tableaux: not a partition");
    int n = partition_weight(shape);
    std::vector<StandardTableau> out;
    StandardTableau cur;
    cur.rows.assign(shape.size(), {});
    auto rec = [&](auto&& self, int next) -> void {
        if (next > n) {
            out.push_back(cur);
            return;
        }
        for (std::size_t r = 0; r < shape.size(); ++r) {
            if (static_cast<int>(cur.rows[r].size()) >= shape[r]) continue;
            if (r > 0 && cur.rows[r - 1].size() <= cur.rows[r].size()) continue;
            cur.rows[r].push_back(next);
            self(self, next + 1);
            cur.rows[r].pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

/// Cocharge: scan 1..n, bumping the running index whenever the next value
/// sits strictly below the current one, and add the indices up.  Minimized,
/// over a fixed shape, by the row-reading filling at value n(lambda).
inline int cocharge(const StandardTableau& t) {
    int n = t.size();
    int idx = 0, total = 0;
    for (int v = 2; v <= n; ++v) {
        if (t.row_of(v) > t.row_of(v - 1)) ++idx;
        total += idx;
    }
    return total;
}

/// Tableau count by the hook length formula.
inline Integer syt_count(const Partition& shape) {
    if (!is_partition(shape)) throw std::invalid_argument("syt_count: not a partition");
    Partition conj = conjugate(shape);
    Integer denom = 1;
    for (std::size_t r = 0; r < shape.size(); ++r)
        for (int c = 0; c < shape[r]; ++c) {
            int hook = (shape[r] - c) + (conj[c] - static_cast<int>(r)) - 1;
            denom *= hook;
        }
    return int_factorial(partition_weight(shape)) / denom;
}

}  // namespace steenrod
