#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bias {

// FNV-1a 64-bit. Used for content-addressed sample ids and cache keys so that
// reruns and caches align across processes.
uint64_t fnv1a64(std::string_view data, uint64_t seed = 0xcbf29ce484222325ULL);
std::string hex64(uint64_t v);

// SplitMix64. Hand-rolled so streams are identical across standard libraries.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next_u64();
    // uniform in [0, 1)
    double next_double();
    // uniform in [0, n)
    uint64_t next_below(uint64_t n);
};

// Deterministic per-item rng: stream depends only on (seed, key), never on
// call order, so parallel and serial evaluation agree.
Rng rng_for(uint64_t seed, std::string_view key);

std::string to_lower(std::string_view s);
std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

// "$438", "$29.99" - cents only when the amount is not a whole dollar.
std::string format_money(double amount);
// "80%", "0.1%", "0.25%" - shortest exact decimal representation.
std::string format_percent(double probability);
// "0.8", "0.001" - probability as a plain decimal, trailing zeros trimmed.
std::string format_probability(double probability);
// fixed decimals, for report tables
std::string format_fixed(double v, int decimals);

} // namespace bias
