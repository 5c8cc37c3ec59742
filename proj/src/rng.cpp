#include "scoreh/rng.hpp"

namespace scoreh {

std::size_t Rng::next_weighted(const std::vector<double>& weights) {
    double total = 0.0;
    for (double w : weights) total += (w > 0.0 ? w : 0.0);
    if (total <= 0.0) return next_index(weights.size());
    double u = next_double() * total;
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        acc += (weights[i] > 0.0 ? weights[i] : 0.0);
        if (u < acc) return i;
    }
    return weights.size() - 1;
}

namespace {
std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    Rng r(h);
    return r.next_u64();
}
}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b,
                          std::uint64_t c) {
    std::uint64_t h = mix(base, a);
    h = mix(h, b);
    h = mix(h, c);
    return h;
}

std::uint64_t derive_seed(std::uint64_t base, const std::string& tag, std::uint64_t a,
                          std::uint64_t b) {
    return derive_seed(base, fnv1a64(tag.data(), tag.size()), a, b);
}

std::uint64_t fnv1a64(const void* data, std::size_t size) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (std::size_t i = 0; i < size; ++i) {
        h ^= p[i];
        h *= 0x100000001B3ull;
    }
    return h;
}

}  // namespace scoreh
