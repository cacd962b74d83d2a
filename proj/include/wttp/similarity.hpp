#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wttp/instance.hpp"

namespace wttp {

namespace detail {

inline void require_same_length(const Tour& a, const Tour& b, int min_n) {
    if (a.size() != b.size()) throw std::invalid_argument("tours have different lengths");
    if (a.size() < min_n) throw std::invalid_argument("tours too short");
}

// merge sort counting pairs (i<j) with a[i] > a[j]
inline std::uint64_t merge_count(std::vector<int>& a, std::vector<int>& tmp,
                                 std::size_t lo, std::size_t hi) {
    if (hi - lo < 2) return 0;
    const std::size_t mid = lo + (hi - lo) / 2;
    std::uint64_t inv = merge_count(a, tmp, lo, mid) + merge_count(a, tmp, mid, hi);
    std::size_t i = lo, j = mid, k = lo;
    while (i < mid && j < hi) {
        if (a[i] <= a[j]) {
            tmp[k++] = a[i++];
        } else {
            inv += mid - i;
            tmp[k++] = a[j++];
        }
    }
    while (i < mid) tmp[k++] = a[i++];
    while (j < hi) tmp[k++] = a[j++];
    for (std::size_t t = lo; t < hi; ++t) a[t] = tmp[t];
    return inv;
}

}  // namespace detail

// Fraction of undirected edges (closing edge included) present in both
// closed tours. No re-rotation: inputs are already pinned at city 1.
inline double common_edges(const Tour& t1, const Tour& t2) {
    detail::require_same_length(t1, t2, 3);
    const int n = t1.size();
    auto edges_of = [n](const Tour& t) {
        std::vector<std::pair<int, int>> es;
        es.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            int u = t.order[i];
            int v = t.order[(i + 1) % n];
            es.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(es.begin(), es.end());
        return es;
    };
    auto e1 = edges_of(t1);
    auto e2 = edges_of(t2);
    std::size_t shared = 0, i = 0, j = 0;
    while (i < e1.size() && j < e2.size()) {
        if (e1[i] < e2[j]) ++i;
        else if (e2[j] < e1[i]) ++j;
        else { ++shared; ++i; ++j; }
    }
    return static_cast<double>(shared) / n;
}

// Number of unordered city pairs visited in opposite relative order by the
// two tours; O(n log n) by mapping t2 through t1's positions and
// merge-counting.
inline std::uint64_t count_inversions(const Tour& t1, const Tour& t2) {
    detail::require_same_length(t1, t2, 1);
    const int n = t1.size();
    std::vector<int> pos1(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < n; ++i) pos1[t1.order[i]] = i;
    std::vector<int> seq(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) seq[i] = pos1[t2.order[i]];
    std::vector<int> tmp(seq.size());
    return detail::merge_count(seq, tmp, 0, seq.size());
}

// INV = 1 - 2*IN / (n(n-1))
inline double inversion_similarity(const Tour& t1, const Tour& t2) {
    detail::require_same_length(t1, t2, 2);
    const double n = t1.size();
    return 1.0 - 2.0 * static_cast<double>(count_inversions(t1, t2)) / (n * (n - 1.0));
}

}  // namespace wttp
