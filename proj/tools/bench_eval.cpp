// Throughput check for the evaluation hot path: one EA evaluation on n=280
// must stay under 50 microseconds for the full matrix to be tractable.

#include <chrono>
#include <cstdio>

#include <wttp/objectives.hpp>
#include <wttp/search.hpp>

#include "../tests/testutil.hpp"

int main() {
    using namespace wttp;
    TtpInstance inst = testutil::random_instance(280, 5, 1);
    PackingPlan plan = generate_packing(inst, 0.5, 2);
    Evaluator eval(inst, plan);
    Rng rng(3);
    Tour tour = random_tour(inst.n, rng);

    const int iters = 200000;
    double sink = 0;
    auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < iters; ++i) {
        std::size_t a, b;
        inversion_mutate_inplace(tour, rng, a, b);
        sink += eval.wttp(tour);
    }
    auto t1 = std::chrono::steady_clock::now();
    double us = std::chrono::duration<double, std::micro>(t1 - t0).count() / iters;
    std::printf("n=%d wttp eval+mutation: %.3f us/iteration (sink %.3f)\n", inst.n, us, sink);
    std::printf("%s 50 us contract\n", us < 50.0 ? "within" : "EXCEEDS");
    return us < 50.0 ? 0 : 1;
}
