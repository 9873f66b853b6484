#pragma once

#include <cstdint>
#include <vector>

#include "intsep/core.hpp"

namespace intsep {

// Deterministic generator parameters; same spec => same instance.
struct GenSpec {
    int n = 1;
    long long coord_max = -1;    // < 0 means default 4n
    long long len_min = 1;
    long long len_max = -1;      // < 0 means default n
    double containment_bias = 0.3;
    uint64_t seed = 1;
};

struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t bound) { return bound ? next() % bound : 0; }
};

// Minimum over all n! orders of the left-possible placement's
// max-displacement. Independent of both solvers; guarded to n <= 10.
// Ties broken by lexicographically smallest order.
Solution brute_force(const Instance& inst);

// Sorted order is optimal when all lengths are equal; rejects mixed lengths.
Solution greedy_equal_length(const Instance& inst);

// One unit-length interval centered at 10*a_i per element (coordinates kept
// integral in halves). One-direction optimum is 0 iff all elements distinct.
Instance gen_distinctness(const std::vector<long long>& values);

Instance gen_random(const GenSpec& spec);

} // namespace intsep
