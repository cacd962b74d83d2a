#pragma once

#include <stdexcept>
#include <vector>

#include "wttp/instance.hpp"
#include "wttp/packing.hpp"

namespace wttp {

struct PrefixWeights {
    std::vector<double> omega;  // omega[i-1] = cumulative weight after i-th visited city
};

// Evaluation context for one (instance, plan) pair. Caches per-city weights,
// nu and the profit sum; precomputes the distance matrix for n <= 5000.
// Allocation-free per evaluation. One evaluator per worker.
class Evaluator {
public:
    static constexpr int kMatrixLimit = 5000;

    Evaluator(const TtpInstance& inst, const PackingPlan& plan)
        : inst_(&inst), n_(inst.n) {
        NodeWeightVector nw = node_weights(inst, plan);
        weight_ = std::move(nw.weights);
        total_weight_ = nw.total;
        capacity_ = effective_capacity(inst);
        nu_ = (inst.v_max - inst.v_min) / capacity_;
        profit_sum_ = 0.0;
        for (std::size_t k = 0; k < plan.bits.size(); ++k)
            if (plan.bits[k]) profit_sum_ += inst.items[k].profit;
        if (n_ <= kMatrixLimit) {
            dist_.resize(static_cast<std::size_t>(n_) * n_);
            for (int i = 1; i <= n_; ++i)
                for (int j = 1; j <= n_; ++j)
                    dist_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)] = inst.distance(i, j);
        }
    }

    double dist(int i, int j) const {
        if (!dist_.empty()) return dist_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
        return inst_->distance(i, j);
    }

    double node_weight(int city) const { return weight_[city - 1]; }
    double total_weight() const { return total_weight_; }
    double capacity() const { return capacity_; }
    double nu() const { return nu_; }
    double profit_sum() const { return profit_sum_; }
    const TtpInstance& instance() const { return *inst_; }

    double tsp_length(const Tour& tour) const {
        const auto& o = tour.order;
        double len = dist(o.back(), o.front());
        for (std::size_t i = 0; i + 1 < o.size(); ++i) len += dist(o[i], o[i + 1]);
        return len;
    }

    // d(pi_i, pi_{i+1}) * omega(i), closing edge weighted by omega(n)
    double wtsp(const Tour& tour) const {
        const auto& o = tour.order;
        double omega = 0.0;
        double cost = 0.0;
        for (std::size_t i = 0; i + 1 < o.size(); ++i) {
            omega += weight_[o[i] - 1];
            cost += dist(o[i], o[i + 1]) * omega;
        }
        omega += weight_[o.back() - 1];
        cost += dist(o.back(), o.front()) * omega;
        return cost;
    }

    // d(pi_i, pi_{i+1}) / (v_max - nu * omega(i))
    double wttp(const Tour& tour) const {
        const auto& o = tour.order;
        const double v_max = inst_->v_max;
        double omega = 0.0;
        double cost = 0.0;
        for (std::size_t i = 0; i + 1 < o.size(); ++i) {
            omega += weight_[o[i] - 1];
            const double v = v_max - nu_ * omega;
            if (v <= 0.0)
                throw std::domain_error("packed weight exceeds capacity, nonpositive speed");
            cost += dist(o[i], o[i + 1]) / v;
        }
        omega += weight_[o.back() - 1];
        const double v = v_max - nu_ * omega;
        if (v <= 0.0)
            throw std::domain_error("packed weight exceeds capacity, nonpositive speed");
        cost += dist(o.back(), o.front()) / v;
        return cost;
    }

    // maximization score: profit sum - R * wttp
    double ttp(const Tour& tour) const {
        return profit_sum_ - inst_->renting_rate * wttp(tour);
    }

private:
    const TtpInstance* inst_;
    int n_;
    std::vector<double> weight_;
    std::vector<double> dist_;
    double total_weight_ = 0;
    double capacity_ = 0;
    double nu_ = 0;
    double profit_sum_ = 0;
};

inline double tsp_length(const TtpInstance& inst, const Tour& tour) {
    const auto& o = tour.order;
    double len = inst.distance(o.back(), o.front());
    for (std::size_t i = 0; i + 1 < o.size(); ++i) len += inst.distance(o[i], o[i + 1]);
    return len;
}

inline PrefixWeights prefix_weights(const TtpInstance& inst, const PackingPlan& plan,
                                    const Tour& tour) {
    NodeWeightVector nw = node_weights(inst, plan);
    PrefixWeights pw;
    pw.omega.reserve(tour.order.size());
    double acc = 0.0;
    for (int city : tour.order) {
        acc += nw.weights[city - 1];
        pw.omega.push_back(acc);
    }
    return pw;
}

inline double wtsp_objective(const TtpInstance& inst, const PackingPlan& plan,
                             const Tour& tour) {
    return Evaluator(inst, plan).wtsp(tour);
}

inline double wttp_objective(const TtpInstance& inst, const PackingPlan& plan,
                             const Tour& tour) {
    return Evaluator(inst, plan).wttp(tour);
}

inline double ttp_objective(const TtpInstance& inst, const PackingPlan& plan,
                            const Tour& tour) {
    return Evaluator(inst, plan).ttp(tour);
}

}  // namespace wttp
