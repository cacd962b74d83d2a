#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "wttp/objectives.hpp"
#include "wttp/rng.hpp"

namespace wttp {

enum class DriverKind { WTSP, WTTP };
enum class MutationKind { Inversion, Swap, Insertion };

inline std::string to_string(DriverKind d) { return d == DriverKind::WTSP ? "WTSP" : "WTTP"; }

inline std::string to_string(MutationKind m) {
    switch (m) {
        case MutationKind::Inversion: return "inversion";
        case MutationKind::Swap: return "swap";
        case MutationKind::Insertion: return "insertion";
    }
    return "?";
}

struct TrajectoryPoint {
    std::uint64_t evaluation_index = 0;
    double wtsp_value = 0;
    double wttp_value = 0;
};

struct RunResult {
    Tour final_tour;
    double final_wtsp = 0;
    double final_wttp = 0;
    std::vector<TrajectoryPoint> trajectory;
    std::uint64_t evaluations_used = 0;
    std::uint64_t seed = 0;
    DriverKind driver = DriverKind::WTSP;
};

namespace detail {

inline void require_mutable(const Tour& tour) {
    if (tour.size() < 3) throw std::invalid_argument("mutation requires n >= 3");
}

// two distinct positions in 2..n (1-based), returned ordered
inline std::pair<std::size_t, std::size_t> pick_pair(std::size_t n, Rng& rng) {
    std::size_t i = 1 + rng.uniform_index(n - 1);  // 0-based index in [1, n)
    std::size_t j = 1 + rng.uniform_index(n - 2);
    if (j >= i) ++j;
    return {std::min(i, j), std::max(i, j)};
}

}  // namespace detail

// reverse order[i..j] for uniformly random 2 <= i < j <= n; position 1 fixed
inline void inversion_mutate_inplace(Tour& tour, Rng& rng,
                                     std::size_t& out_i, std::size_t& out_j) {
    auto [i, j] = detail::pick_pair(tour.order.size(), rng);
    std::reverse(tour.order.begin() + i, tour.order.begin() + j + 1);
    out_i = i;
    out_j = j;
}

inline Tour inversion_mutation(const Tour& tour, Rng& rng) {
    detail::require_mutable(tour);
    Tour out = tour;
    std::size_t i, j;
    inversion_mutate_inplace(out, rng, i, j);
    return out;
}

inline void swap_mutate_inplace(Tour& tour, Rng& rng, std::size_t& out_i, std::size_t& out_j) {
    auto [i, j] = detail::pick_pair(tour.order.size(), rng);
    std::swap(tour.order[i], tour.order[j]);
    out_i = i;
    out_j = j;
}

inline Tour swap_mutation(const Tour& tour, Rng& rng) {
    detail::require_mutable(tour);
    Tour out = tour;
    std::size_t i, j;
    swap_mutate_inplace(out, rng, i, j);
    return out;
}

// remove the city at position `from` and reinsert at position `to` (both in
// 2..n, from != to), shifting the cities in between
inline void insertion_mutate_inplace(Tour& tour, Rng& rng,
                                     std::size_t& out_from, std::size_t& out_to) {
    const std::size_t n = tour.order.size();
    std::size_t from = 1 + rng.uniform_index(n - 1);
    std::size_t to = 1 + rng.uniform_index(n - 2);
    if (to >= from) ++to;
    int city = tour.order[from];
    if (from < to)
        std::move(tour.order.begin() + from + 1, tour.order.begin() + to + 1,
                  tour.order.begin() + from);
    else
        std::move_backward(tour.order.begin() + to, tour.order.begin() + from,
                           tour.order.begin() + from + 1);
    tour.order[to] = city;
    out_from = from;
    out_to = to;
}

inline Tour insertion_mutation(const Tour& tour, Rng& rng) {
    detail::require_mutable(tour);
    Tour out = tour;
    std::size_t from, to;
    insertion_mutate_inplace(out, rng, from, to);
    return out;
}

// uniform random permutation of positions 2..n, city 1 pinned
inline Tour random_tour(int n, Rng& rng) {
    Tour tour;
    tour.order.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) tour.order[i] = i + 1;
    for (std::size_t i = tour.order.size() - 1; i >= 2; --i)
        std::swap(tour.order[i], tour.order[1 + rng.uniform_index(i)]);
    return tour;
}

namespace detail {

// Poisson(1) by inversion of the product of uniforms
inline int poisson_one(Rng& rng) {
    constexpr double inv_e = 0.36787944117144233;
    int k = 0;
    double prod = rng.uniform01();
    while (prod >= inv_e) {
        ++k;
        prod *= rng.uniform01();
    }
    return k;
}

}  // namespace detail

// Elitist (1+1)-EA: the offspring applies 1 + Poisson(1) elementary mutations
// to the incumbent (so any permutation stays reachable), and is accepted iff
// its driver value is <= the incumbent's (ties accepted). Every accepted
// improvement and every log_stride-th evaluation is recorded with BOTH
// objective values.
inline RunResult run_one_plus_one_ea(const TtpInstance& inst, const PackingPlan& plan,
                                     DriverKind driver, MutationKind mutation,
                                     std::uint64_t budget, std::uint64_t seed,
                                     std::uint64_t log_stride = 1000) {
    if (budget < 1) throw std::invalid_argument("budget must be >= 1");
    Evaluator eval(inst, plan);
    Rng rng(seed);

    Tour incumbent = random_tour(inst.n, rng);
    auto value_of = [&](const Tour& t) {
        return driver == DriverKind::WTSP ? eval.wtsp(t) : eval.wttp(t);
    };

    RunResult res;
    res.seed = seed;
    res.driver = driver;

    double best = value_of(incumbent);
    std::uint64_t evals = 1;
    auto record = [&]() {
        res.trajectory.push_back({evals, eval.wtsp(incumbent), eval.wttp(incumbent)});
    };
    record();

    Tour offspring = incumbent;
    while (evals < budget) {
        offspring.order = incumbent.order;
        const int ops = 1 + detail::poisson_one(rng);
        for (int k = 0; k < ops; ++k) {
            std::size_t a, b;
            switch (mutation) {
                case MutationKind::Inversion: inversion_mutate_inplace(offspring, rng, a, b); break;
                case MutationKind::Swap: swap_mutate_inplace(offspring, rng, a, b); break;
                case MutationKind::Insertion: insertion_mutate_inplace(offspring, rng, a, b); break;
            }
        }
        const double v = value_of(offspring);
        ++evals;
        bool improved = v < best;
        if (v <= best) {
            best = v;
            std::swap(incumbent.order, offspring.order);
            assert(incumbent.is_valid(inst.n));
        }
        if (improved || evals % log_stride == 0) record();
    }

    res.final_tour = incumbent;
    res.final_wtsp = eval.wtsp(incumbent);
    res.final_wttp = eval.wttp(incumbent);
    res.evaluations_used = evals;
    if (res.trajectory.back().evaluation_index != evals) record();
    return res;
}

}  // namespace wttp
