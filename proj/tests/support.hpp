#pragma once

#include <random>
#include <vector>

#include "hookpairs/composition.hpp"

namespace hookpairs::testing {

inline Composition comp(std::vector<long long> parts) {
    std::vector<Int> p(parts.begin(), parts.end());
    return Composition(std::move(p));
}

// Deterministic random compositions for property tests.
class CompositionGen {
public:
    explicit CompositionGen(unsigned seed) : rng_(seed) {}

    Composition next(int max_len, long long max_weight) {
        std::uniform_int_distribution<int> len_dist(1, max_len);
        int len = len_dist(rng_);
        std::vector<Int> parts(static_cast<std::size_t>(len));
        long long budget = max_weight;
        for (int i = 0; i < len; ++i) {
            std::uniform_int_distribution<long long> part_dist(0, budget);
            long long v = part_dist(rng_);
            parts[static_cast<std::size_t>(i)] = v;
            budget -= v;
        }
        std::shuffle(parts.begin(), parts.end(), rng_);
        return Composition(std::move(parts));
    }

    std::mt19937& rng() { return rng_; }

private:
    std::mt19937 rng_;
};

}  // namespace hookpairs::testing
