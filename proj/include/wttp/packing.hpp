#pragma once

#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wttp/instance.hpp"
#include "wttp/rng.hpp"

namespace wttp {

// Bitstring over all items of an instance; 1 = item packed. Fixed for a
// whole run, node weights follow from it.
struct PackingPlan {
    std::vector<std::uint8_t> bits;
    double p = 0.0;            // generation probability (metadata)
    std::uint64_t seed = 0;    // metadata

    int size() const { return static_cast<int>(bits.size()); }

    int popcount() const {
        return static_cast<int>(std::accumulate(bits.begin(), bits.end(), 0L));
    }
};

struct NodeWeightVector {
    std::vector<double> weights;  // per-city packed weight, 1-based city i at [i-1]
    std::vector<int> counts;      // packed item count per city
    double total = 0.0;
};

// Each bit independently 1 with probability p; deterministic in
// (inst.m, p, seed).
inline PackingPlan generate_packing(const TtpInstance& inst, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("packing probability must lie in [0,1]");
    PackingPlan plan;
    plan.p = p;
    plan.seed = seed;
    plan.bits.resize(inst.items.size());
    Rng rng(seed);
    for (auto& b : plan.bits) b = rng.uniform01() < p ? 1 : 0;
    return plan;
}

inline NodeWeightVector node_weights(const TtpInstance& inst, const PackingPlan& plan) {
    if (plan.size() != inst.item_count())
        throw std::invalid_argument("packing plan length does not match instance item count");
    NodeWeightVector nw;
    nw.weights.assign(static_cast<std::size_t>(inst.n), 0.0);
    nw.counts.assign(static_cast<std::size_t>(inst.n), 0);
    for (std::size_t k = 0; k < plan.bits.size(); ++k) {
        if (!plan.bits[k]) continue;
        const Item& it = inst.items[k];
        nw.weights[it.city - 1] += it.weight;
        nw.counts[it.city - 1] += 1;
        nw.total += it.weight;
    }
    return nw;
}

// Sum over ALL item weights, packed or not; used as C in nu = (v_max - v_min)/C
// so every generated packing is feasible.
inline double effective_capacity(const TtpInstance& inst) {
    if (inst.items.empty())
        throw std::invalid_argument("instance has no items, capacity undefined");
    double sum = 0.0;
    for (const Item& it : inst.items) sum += it.weight;
    return sum;
}

inline std::string serialize_packing(const PackingPlan& plan, const std::string& instance_name) {
    std::ostringstream os;
    os << "# instance=" << instance_name << " p=" << format_real(plan.p)
       << " seed=" << plan.seed << "\n";
    for (auto b : plan.bits) os << (b ? '1' : '0');
    os << "\n";
    return os.str();
}

inline PackingPlan parse_packing(const std::string& text, int expected_m) {
    PackingPlan plan;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        line = detail::trim(line);
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream hs(line.substr(1));
            std::string tok;
            while (hs >> tok) {
                if (tok.rfind("p=", 0) == 0) plan.p = std::stod(tok.substr(2));
                if (tok.rfind("seed=", 0) == 0) plan.seed = std::stoull(tok.substr(5));
            }
            continue;
        }
        for (char c : line) {
            if (c != '0' && c != '1') throw ParseError("packing bit must be '0' or '1'");
            plan.bits.push_back(c == '1');
        }
    }
    if (plan.size() != expected_m)
        throw ParseError("packing has " + std::to_string(plan.size()) +
                         " bits, expected " + std::to_string(expected_m));
    return plan;
}

}  // namespace wttp
