#pragma once

#include "cggpack/packing.hpp"
#include "cggpack/rng.hpp"

#include <cstdint>

namespace cggpack {

struct GreedyOptions {
    // consecutive rejected samples before switching to the systematic phase
    long long failure_budget = 30'000;
    // systematic maximality scan runs only when the placement space is this small
    long long scan_space_cap = 8'000'000;
    int restarts = 1; // best coverage over derived seeds wins
};

struct GreedyResult {
    Packing packing;
    bool maximal_certified = false; // a full systematic scan found no free copy
    long long samples = 0;
    std::uint64_t seed = 0;
};

/// Maximal-greedy packing: uniformly sampled order-preserving placements are
/// accepted while their edges are free; after the failure budget a systematic
/// scan finishes the job when the placement space is enumerable, which is what
/// certifies maximality. Deterministic per seed.
GreedyResult greedy_maximal_packing(const Graph& pattern, const Graph& host, std::uint64_t seed,
                                    const GreedyOptions& opt = {});

/// Triangle packing of K_n by hill-climbing switches: repeatedly take an
/// uncovered pair, pick a third vertex, and displace at most one conflicting
/// triangle. Reaches perfect triple systems for n = 1, 3 mod 6 in practice
/// and beats plain greedy elsewhere. Deterministic per seed.
Packing triangle_system_packing(int n, std::uint64_t seed, long long max_switches = 0);

} // namespace cggpack
