#include "sasyno/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sasyno {

std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master,
                          std::initializer_list<std::uint64_t> path) noexcept {
    std::uint64_t h = mix64(master);
    for (std::uint64_t component : path) {
        h = mix64(h ^ mix64(component));
    }
    return h;
}

double Rng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::size_t Rng::below(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("Rng::below: n must be positive");
    }
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod n
    for (;;) {
        const std::uint64_t r = next_u64();
        if (r >= threshold) {
            return static_cast<std::size_t>(r % bound);
        }
    }
}

double Rng::normal(double sigma) {
    if (sigma < 0.0) {
        throw std::invalid_argument("Rng::normal: sigma must be nonnegative");
    }
    // u1 in (0, 1] keeps the log finite; u2 in [0, 1).
    const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    const double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    const double radius = std::sqrt(-2.0 * std::log(u1));
    return sigma * radius * std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<std::size_t> shuffled_indices(std::size_t n, Rng& rng) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    for (std::size_t i = n; i > 1; --i) {
        std::swap(idx[i - 1], idx[rng.below(i)]);
    }
    return idx;
}

std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k, Rng& rng) {
    if (k > n) {
        throw std::invalid_argument("sample_indices: k exceeds population size");
    }
    std::vector<std::size_t> idx = shuffled_indices(n, rng);
    idx.resize(k);
    std::sort(idx.begin(), idx.end());
    return idx;
}

}  // namespace sasyno
