#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "sasyno/dataset.hpp"
#include "sasyno/rng.hpp"

namespace testutil {

inline sasyno::Dataset make_dataset(const std::vector<std::vector<double>>& points,
                                    const std::string& label = "0") {
    sasyno::Dataset d(points.empty() ? 0 : points.front().size());
    for (const auto& p : points) {
        d.add(sasyno::Sample{p, label});
    }
    return d;
}

inline std::vector<std::vector<double>> to_points(const sasyno::Dataset& d) {
    std::vector<std::vector<double>> out;
    out.reserve(d.size());
    for (const sasyno::Sample& s : d) out.push_back(s.features);
    return out;
}

inline std::vector<std::vector<double>> random_points(std::size_t n, std::size_t dims,
                                                      sasyno::Rng& rng, double scale = 10.0) {
    std::vector<std::vector<double>> pts(n, std::vector<double>(dims));
    for (auto& p : pts) {
        for (double& v : p) v = (rng.uniform() - 0.5) * scale;
    }
    return pts;
}

// Relative comparison: |a - b| <= tol * max(|a|, |b|).
inline bool close_rel(double a, double b, double tol = 1e-12) {
    const double scale = std::max(std::fabs(a), std::fabs(b));
    if (scale == 0.0) return true;
    return std::fabs(a - b) <= tol * scale;
}

// Multiset equality of two sample collections.
inline bool same_multiset(std::vector<sasyno::Sample> a, std::vector<sasyno::Sample> b) {
    if (a.size() != b.size()) return false;
    auto key = [](const sasyno::Sample& s) {
        std::string k = s.label;
        for (double v : s.features) {
            k += '|';
            k += std::to_string(v);
        }
        return k;
    };
    auto by_key = [&](const sasyno::Sample& x, const sasyno::Sample& y) {
        return key(x) < key(y);
    };
    std::sort(a.begin(), a.end(), by_key);
    std::sort(b.begin(), b.end(), by_key);
    return a == b;
}

// True when every sample of `part` occurs in `whole` (with multiplicity).
inline bool contains_multiset(const std::vector<sasyno::Sample>& whole,
                              std::vector<sasyno::Sample> part) {
    std::vector<bool> used(whole.size(), false);
    for (const sasyno::Sample& p : part) {
        bool found = false;
        for (std::size_t i = 0; i < whole.size() && !found; ++i) {
            if (!used[i] && whole[i] == p) {
                used[i] = true;
                found = true;
            }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace testutil
