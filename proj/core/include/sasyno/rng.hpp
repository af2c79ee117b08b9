#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace sasyno {

// splitmix64 finalizer; bijective 64-bit mixer used for seed derivation.
std::uint64_t mix64(std::uint64_t x) noexcept;

// Derives a child seed from a master seed and a path of stream identifiers,
// e.g. {kSamplerStream, replicate, sampler_index}. Streams with distinct
// paths are statistically independent, and extending a configuration with
// new paths never changes the seeds of existing ones.
std::uint64_t derive_seed(std::uint64_t master,
                          std::initializer_list<std::uint64_t> path) noexcept;

// Deterministic random stream. All distributions are built on the raw
// mt19937_64 output, whose sequence the standard pins down exactly, so a
// given seed reproduces the same values on any conforming platform. The
// standard library's distribution adaptors are deliberately not used.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1) with 53-bit resolution.
    double uniform();

    // Uniform integer in [0, n). Rejection sampling, no modulo bias. n > 0.
    std::size_t below(std::size_t n);

    // Zero-mean Gaussian draw with standard deviation `sigma` (Box-Muller;
    // consumes exactly two engine outputs per call).
    double normal(double sigma);

private:
    std::mt19937_64 engine_;
};

// Fisher-Yates permutation of {0, ..., n-1}.
std::vector<std::size_t> shuffled_indices(std::size_t n, Rng& rng);

// k distinct indices drawn uniformly from {0, ..., n-1}, returned ascending.
std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k, Rng& rng);

}  // namespace sasyno
