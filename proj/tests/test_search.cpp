#include <doctest.h>

#include <map>
#include <set>

#include <wttp/search.hpp>

#include "oracles.hpp"
#include "testutil.hpp"

using namespace wttp;
using doctest::Approx;

TEST_CASE("inversion mutation reverses one segment of positions 2..n") {
    Tour base{{1, 2, 3, 4, 5}};
    Rng rng(1);
    // every mutant must equal the base with exactly one reversed segment
    std::set<std::vector<int>> seen;
    for (int k = 0; k < 2000; ++k) {
        Tour m = inversion_mutation(base, rng);
        CHECK(m.is_valid(5));
        CHECK(m.order[0] == 1);
        bool explained = false;
        for (std::size_t i = 1; i < 5 && !explained; ++i)
            for (std::size_t j = i + 1; j < 5 && !explained; ++j) {
                Tour cand = base;
                std::reverse(cand.order.begin() + i, cand.order.begin() + j + 1);
                if (cand.order == m.order) explained = true;
            }
        CHECK(explained);
        seen.insert(m.order);
    }
    // the specific (i,j)=(2,4) reversal is among the reachable mutants
    CHECK(seen.count({1, 4, 3, 2, 5}) == 1);
    // (i,j)=(2,n) gives the full suffix reversal
    CHECK(seen.count({1, 5, 4, 3, 2}) == 1);
}

TEST_CASE("mutations reject n < 3") {
    Tour two{{1, 2}};
    Rng rng(1);
    CHECK_THROWS_AS(inversion_mutation(two, rng), std::invalid_argument);
    CHECK_THROWS_AS(swap_mutation(two, rng), std::invalid_argument);
    CHECK_THROWS_AS(insertion_mutation(two, rng), std::invalid_argument);
}

TEST_CASE("inversion position pairs are uniform over C(n-1,2)") {
    // n=6: 10 possible (i,j) pairs, expect frequency 0.1 +- 0.01 over 1e5 draws
    Rng rng(42);
    std::map<std::pair<std::size_t, std::size_t>, int> freq;
    Tour t{{1, 2, 3, 4, 5, 6}};
    const int draws = 100000;
    for (int k = 0; k < draws; ++k) {
        Tour copy = t;
        std::size_t i, j;
        inversion_mutate_inplace(copy, rng, i, j);
        ++freq[{i, j}];
    }
    CHECK(freq.size() == 10);
    for (const auto& [pair, count] : freq) {
        (void)pair;
        CHECK(static_cast<double>(count) / draws == Approx(0.1).epsilon(0.1));
    }
}

TEST_CASE("swap mutation") {
    Rng rng(7);
    std::set<std::vector<int>> seen;
    Tour base{{1, 2, 3, 4}};
    for (int k = 0; k < 500; ++k) {
        Tour m = swap_mutation(base, rng);
        CHECK(m.is_valid(4));
        int diffs = 0;
        for (int i = 0; i < 4; ++i)
            if (m.order[i] != base.order[i]) ++diffs;
        CHECK(diffs == 2);  // (i,i) is excluded, so always exactly two positions
        seen.insert(m.order);
    }
    CHECK(seen.count({1, 4, 3, 2}) == 1);  // swap of positions (2,4)
    CHECK(seen.size() == 3);               // C(3,2) distinct outcomes
}

TEST_CASE("swap position pairs are uniform") {
    Rng rng(11);
    std::map<std::pair<std::size_t, std::size_t>, int> freq;
    Tour t{{1, 2, 3, 4, 5, 6}};
    const int draws = 100000;
    for (int k = 0; k < draws; ++k) {
        Tour copy = t;
        std::size_t i, j;
        swap_mutate_inplace(copy, rng, i, j);
        ++freq[{i, j}];
    }
    CHECK(freq.size() == 10);
    for (const auto& [pair, count] : freq) {
        (void)pair;
        CHECK(static_cast<double>(count) / draws == Approx(0.1).epsilon(0.1));
    }
}

TEST_CASE("insertion mutation shifts the in-between block") {
    Rng rng(3);
    Tour base{{1, 2, 3, 4, 5}};
    std::set<std::vector<int>> seen;
    for (int k = 0; k < 3000; ++k) {
        Tour m = insertion_mutation(base, rng);
        CHECK(m.is_valid(5));
        CHECK(m.order != base.order);  // from == to is excluded
        seen.insert(m.order);
    }
    CHECK(seen.count({1, 3, 4, 2, 5}) == 1);  // move position 2 to position 4
}

TEST_CASE("insertion is exhaustively valid over all (from,to) on n=5") {
    // drive the operator until all 4*3 (from,to) combinations were observed
    Rng rng(5);
    Tour base{{1, 2, 3, 4, 5}};
    std::set<std::pair<std::size_t, std::size_t>> combos;
    int guard = 0;
    while (combos.size() < 12 && ++guard < 100000) {
        Tour m = base;
        std::size_t from, to;
        insertion_mutate_inplace(m, rng, from, to);
        combos.insert({from, to});
        REQUIRE(m.is_valid(5));
        REQUIRE(m.order[0] == 1);
    }
    CHECK(combos.size() == 12);
}

TEST_CASE("budget 1 returns the seeded initial tour") {
    TtpInstance inst = testutil::random_instance(10, 2, 21);
    PackingPlan plan = generate_packing(inst, 0.5, 2);
    RunResult run = run_one_plus_one_ea(inst, plan, DriverKind::WTSP,
                                        MutationKind::Inversion, 1, 77);
    CHECK(run.evaluations_used == 1);
    REQUIRE(run.trajectory.size() == 1);
    CHECK(run.trajectory[0].evaluation_index == 1);
    Rng rng(77);
    CHECK(run.final_tour.order == random_tour(inst.n, rng).order);
    CHECK_THROWS_AS(run_one_plus_one_ea(inst, plan, DriverKind::WTSP,
                                        MutationKind::Inversion, 0, 1),
                    std::invalid_argument);
}

TEST_CASE("EA finds the exhaustive WTSP optimum on n=7 (quick check)") {
    int hits = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        TtpInstance inst = testutil::random_instance(7, 1, 31);
        PackingPlan plan = generate_packing(inst, 0.6, 5);
        Evaluator eval(inst, plan);
        double opt = oracle::brute_force_min(7, [&](const Tour& t) { return eval.wtsp(t); });
        RunResult run = run_one_plus_one_ea(inst, plan, DriverKind::WTSP,
                                            MutationKind::Inversion, 100000, seed);
        if (run.final_wtsp == Approx(opt).epsilon(1e-12)) ++hits;
    }
    CHECK(hits >= 9);
}

TEST_CASE("finals equal a fresh re-evaluation of the final tour") {
    TtpInstance inst = testutil::random_instance(12, 2, 41);
    PackingPlan plan = generate_packing(inst, 0.4, 3);
    for (DriverKind d : {DriverKind::WTSP, DriverKind::WTTP}) {
        RunResult run = run_one_plus_one_ea(inst, plan, d, MutationKind::Swap, 5000, 9);
        CHECK(run.final_wtsp == wtsp_objective(inst, plan, run.final_tour));
        CHECK(run.final_wttp == wttp_objective(inst, plan, run.final_tour));
        CHECK(run.trajectory.back().evaluation_index == run.evaluations_used);
        CHECK(run.trajectory.back().wtsp_value == run.final_wtsp);
        CHECK(run.trajectory.back().wttp_value == run.final_wttp);
    }
}

TEST_CASE("driver-side trajectory is nonincreasing, cross side may rise") {
    TtpInstance inst = testutil::random_instance(15, 3, 51);
    PackingPlan plan = generate_packing(inst, 0.5, 8);
    for (DriverKind d : {DriverKind::WTSP, DriverKind::WTTP}) {
        RunResult run = run_one_plus_one_ea(inst, plan, d, MutationKind::Inversion, 20000, 4,
                                            500);
        double prev = std::numeric_limits<double>::infinity();
        for (const TrajectoryPoint& pt : run.trajectory) {
            double v = d == DriverKind::WTSP ? pt.wtsp_value : pt.wttp_value;
            CHECK(v <= prev + 1e-12);
            prev = v;
        }
    }
}

TEST_CASE("runs are reproducible from the seed") {
    TtpInstance inst = testutil::random_instance(12, 2, 61);
    PackingPlan plan = generate_packing(inst, 0.3, 6);
    RunResult a = run_one_plus_one_ea(inst, plan, DriverKind::WTTP,
                                      MutationKind::Insertion, 10000, 123);
    RunResult b = run_one_plus_one_ea(inst, plan, DriverKind::WTTP,
                                      MutationKind::Insertion, 10000, 123);
    CHECK(a.final_tour.order == b.final_tour.order);
    CHECK(a.final_wtsp == b.final_wtsp);
    CHECK(a.final_wttp == b.final_wttp);
    CHECK(a.trajectory.size() == b.trajectory.size());
}
