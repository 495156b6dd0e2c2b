#pragma once

// Irreducible symmetric-group characters by border-strip recursion on first
// column hook lengths, plus conjugacy class representatives.

#include <steenrod/partitions.hpp>

#include <map>

namespace steenrod {

namespace detail {

/// Distinct first-column hook lengths lambda_i + (len - 1 - i).
inline std::vector<int> beta_set(const Partition& p, int len) {
    std::vector<int> b(len, 0);
    for (int i = 0; i < len; ++i)
        b[i] = (i < static_cast<int>(p.size()) ? p[i] : 0) + (len - 1 - i);
    return b;
}

inline long mn_rec(std::vector<int> beta, const Partition& mu, std::size_t at) {
    if (at == mu.size()) return 1;
    int k = mu[at];
    long acc = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        int target = beta[i] - k;
        if (target < 0) continue;
        bool occupied = false;
        int crossed = 0;
        for (std::size_t j = 0; j < beta.size(); ++j) {
            if (j == i) continue;
            if (beta[j] == target) occupied = true;
            if (beta[j] > target && beta[j] < beta[i]) ++crossed;
        }
        if (occupied) continue;
        auto next = beta;
        next[i] = target;
        long sub = mn_rec(std::move(next), mu, at + 1);
        acc += (crossed % 2 == 0) ? sub : -sub;
    }
    return acc;
}

}  // namespace detail

/// chi^lam(mu) for partitions of the same weight.
inline long mn_character(const Partition& lam, const Partition& mu) {
    if (!is_partition(lam) || !is_partition(mu))
        throw std::invalid_argument("mn_character: not partitions");
    if (partition_weight(lam) != partition_weight(mu))
        throw std::invalid_argument("mn_character: weight mismatch");
    int len = std::max<std::size_t>(lam.size(), 1);
    return detail::mn_rec(detail::beta_set(lam, len), mu, 0);
}

/// Full table chi^lam(mu) over all pairs of partitions of n.
inline std::map<Partition, std::map<Partition, long>> character_table(int n) {
    std::map<Partition, std::map<Partition, long>> tab;
    auto parts = partitions_of(n);
    for (const auto& lam : parts)
        for (const auto& mu : parts) tab[lam][mu] = mn_character(lam, mu);
    return tab;
}

/// The permutation (images, 0-indexed) with cycles of the given lengths
/// filled with increasing values left to right.
inline std::vector<int> class_representative(const Partition& mu) {
    std::vector<int> perm;
    int base = 0;
    for (int part : mu) {
        for (int i = 0; i < part; ++i) perm.push_back(base + (i + 1) % part);
        base += part;
    }
    return perm;
}

/// Cycle type of a permutation given as images.
inline Partition cycle_type(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    std::vector<int> lens;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        lens.push_back(len);
    }
    return sorted_to_partition(lens);
}

}  // namespace steenrod
