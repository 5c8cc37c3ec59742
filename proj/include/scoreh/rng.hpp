#pragma once

#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

namespace scoreh {

// splitmix64: tiny, fast, platform-independent generator used both for seed
// derivation and for sampling. Distribution code is hand-rolled so identical
// seeds give identical streams on every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform in [0, n)
    std::size_t next_index(std::size_t n) {
        return static_cast<std::size_t>(next_double() * static_cast<double>(n)) % n;
    }

    bool bernoulli(double p) { return next_double() < p; }

    // index sampled proportionally to non-negative weights; all-zero weights fall
    // back to uniform
    std::size_t next_weighted(const std::vector<double>& weights);

private:
    std::uint64_t state_;
};

// Deterministic seed derivation: fold components into a 64-bit key one
// splitmix step at a time. Used for per-restart, per-cell, per-repeat streams.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0,
                          std::uint64_t c = 0);
std::uint64_t derive_seed(std::uint64_t base, const std::string& tag, std::uint64_t a,
                          std::uint64_t b = 0);

// FNV-1a over a byte buffer; used for input-file digests in run manifests.
std::uint64_t fnv1a64(const void* data, std::size_t size);

}  // namespace scoreh
