#include <benchmark/benchmark.h>

#include <random>

#include "epvote/asymptotics.hpp"
#include "epvote/ep_method.hpp"
#include "epvote/rival_methods.hpp"

using namespace epvote;

namespace {

// deterministic mid-sized profile: 12 candidates, 40 ballot types
Profile make_profile() {
    std::mt19937_64 rng(20240517);
    std::vector<Candidate> candidates;
    for (int i = 0; i < 12; ++i)
        candidates.push_back({i, "c" + std::to_string(i), 1});
    std::vector<std::pair<CandidateSet, Rational>> raw;
    for (int k = 0; k < 40; ++k) {
        CandidateSet approvals;
        int size = 1 + (int)(rng() % 4);
        while ((int)approvals.size() < size) {
            int id = (int)(rng() % 12);
            if (std::find(approvals.begin(), approvals.end(), id) == approvals.end())
                approvals.push_back(id);
        }
        raw.emplace_back(approvals, Rational(1 + (long)(rng() % 50)));
    }
    return aggregate(std::move(candidates), std::move(raw));
}

void quota_method_allocation(benchmark::State& state) {
    Profile profile = make_profile();
    EpConfig config{QuotaRule::droop()};
    for (auto _ : state) {
        auto trace = allocate(profile, (int)state.range(0), config);
        benchmark::DoNotOptimize(trace.seats.data());
    }
}

void load_minimizing_allocation(benchmark::State& state) {
    Profile profile = make_profile();
    for (auto _ : state) {
        auto trace = seq_phragmen(profile, (int)state.range(0));
        benchmark::DoNotOptimize(trace.seats.data());
    }
}

void two_party_recursion(benchmark::State& state) {
    for (auto _ : state) {
        auto result = simulate_two_party(Rational(47, 100), Rational(33, 100),
                                         Rational(20, 100), (int)state.range(0));
        benchmark::DoNotOptimize(result.seats_a);
    }
}

}  // namespace

BENCHMARK(quota_method_allocation)->Arg(4)->Arg(8);
BENCHMARK(load_minimizing_allocation)->Arg(4)->Arg(8);
BENCHMARK(two_party_recursion)->Arg(50)->Arg(200)->Arg(1000);

BENCHMARK_MAIN();
