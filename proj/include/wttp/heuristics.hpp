#pragma once

#include <algorithm>
#include <limits>
#include <vector>

#include "wttp/instance.hpp"
#include "wttp/packing.hpp"

namespace wttp {

// Greedy construction: always move to the nearest unvisited city, ties broken
// by smallest city index. Result is rotated so city 1 leads.
inline Tour nearest_neighbor_tour(const TtpInstance& inst, int start) {
    if (start < 1 || start > inst.n) throw std::out_of_range("invalid start city");
    std::vector<char> visited(static_cast<std::size_t>(inst.n) + 1, 0);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(inst.n));
    int current = start;
    visited[current] = 1;
    order.push_back(current);
    for (int step = 1; step < inst.n; ++step) {
        int best = -1;
        double best_d = std::numeric_limits<double>::infinity();
        for (int c = 1; c <= inst.n; ++c) {
            if (visited[c]) continue;
            double d = inst.distance(current, c);
            if (d < best_d) {
                best_d = d;
                best = c;
            }
        }
        visited[best] = 1;
        order.push_back(best);
        current = best;
    }
    auto it = std::find(order.begin(), order.end(), 1);
    std::rotate(order.begin(), it, order.end());
    return Tour{std::move(order)};
}

// Weighted greedy (WGR): city 1 first, remaining cities grouped into classes
// of equal node weight, classes visited in ascending weight order, within a
// class nearest-neighbor chaining from the previously visited city.
inline Tour weighted_greedy_tour(const TtpInstance& inst, const PackingPlan& plan) {
    NodeWeightVector nw = node_weights(inst, plan);
    std::vector<int> rest;
    rest.reserve(static_cast<std::size_t>(inst.n) - 1);
    for (int c = 2; c <= inst.n; ++c) rest.push_back(c);
    std::sort(rest.begin(), rest.end(), [&](int a, int b) {
        double wa = nw.weights[a - 1], wb = nw.weights[b - 1];
        return wa != wb ? wa < wb : a < b;
    });

    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(inst.n));
    order.push_back(1);
    int current = 1;
    std::size_t lo = 0;
    while (lo < rest.size()) {
        // weight class [lo, hi): exact floating-point equality
        std::size_t hi = lo;
        const double w = nw.weights[rest[lo] - 1];
        while (hi < rest.size() && nw.weights[rest[hi] - 1] == w) ++hi;
        std::vector<int> cls(rest.begin() + lo, rest.begin() + hi);
        while (!cls.empty()) {
            std::size_t best = 0;
            double best_d = std::numeric_limits<double>::infinity();
            for (std::size_t k = 0; k < cls.size(); ++k) {
                double d = inst.distance(current, cls[k]);
                if (d < best_d || (d == best_d && cls[k] < cls[best])) {
                    best_d = d;
                    best = k;
                }
            }
            current = cls[best];
            order.push_back(current);
            cls.erase(cls.begin() + best);
        }
        lo = hi;
    }
    return Tour{std::move(order)};
}

}  // namespace wttp
