#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "sasyno/dataset.hpp"

// Shared distance / nearest-neighbor helpers. Not installed.

namespace sasyno::detail {

inline double squared_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0.0;
    for (std::size_t l = 0; l < a.size(); ++l) {
        const double diff = a[l] - b[l];
        acc += diff * diff;
    }
    return acc;
}

inline double euclidean(const std::vector<double>& a, const std::vector<double>& b) {
    return std::sqrt(squared_distance(a, b));
}

// Indices of the k nearest samples in `pool` to `query`, ordered by
// (squared distance, index); `exclude` removes the query itself when it is
// a pool member. k must not exceed the candidate count.
inline std::vector<std::size_t> k_nearest(const Dataset& pool,
                                          const std::vector<double>& query, std::size_t k,
                                          std::optional<std::size_t> exclude = std::nullopt) {
    std::vector<std::pair<double, std::size_t>> order;
    order.reserve(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (exclude && *exclude == i) continue;
        order.emplace_back(squared_distance(pool[i].features, query), i);
    }
    if (k > order.size()) {
        k = order.size();
    }
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k),
                      order.end());
    std::vector<std::size_t> out(k);
    for (std::size_t i = 0; i < k; ++i) out[i] = order[i].second;
    return out;
}

// Index of the nearest distinct sample; ties break toward the lower index.
inline std::size_t nearest_neighbor(const Dataset& pool, std::size_t query_index) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_index = query_index;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (i == query_index) continue;
        const double d = squared_distance(pool[i].features, pool[query_index].features);
        if (d < best) {
            best = d;
            best_index = i;
        }
    }
    return best_index;
}

}  // namespace sasyno::detail
