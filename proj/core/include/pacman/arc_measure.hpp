#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace pacman {

// Exit probability per boundary arc I_k, k = 1..N (stored at index k-1).
// Exact measures carry trials == 0 and zero standard errors.
struct ArcMeasure {
    std::vector<double> probability;
    std::vector<double> standard_error;
    std::vector<std::uint64_t> counts;  // empty for exact measures
    std::uint64_t trials = 0;

    int arc_count() const { return static_cast<int>(probability.size()); }
    double at(int k) const { return probability.at(static_cast<std::size_t>(k - 1)); }
    double total() const { return std::accumulate(probability.begin(), probability.end(), 0.0); }
};

}  // namespace pacman
