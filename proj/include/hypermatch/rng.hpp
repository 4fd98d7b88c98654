#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace hypermatch {

// Seeded generator with explicitly-specified derived draws, so instances and
// randomized runs reproduce bit-identically across platforms.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    // uniform in [0, 1)
    double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform in [0, bound)
    uint64_t below(uint64_t bound) { return bound ? next() % bound : 0; }

    // sorted r-subset of {0..n-1}, Floyd's algorithm
    std::vector<int> subset(int n, int r);

    // derive an independent stream for a sub-task
    static uint64_t derive(uint64_t seed, uint64_t index) {
        uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace hypermatch
