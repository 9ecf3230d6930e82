#pragma once

#include <cstdint>
#include <string>

// deterministic pseudo-random stream for property tests (splitmix64)
struct DetRng {
    uint64_t state;
    explicit DetRng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [lo, hi]
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
};

inline std::string fixture_path(const std::string& name) {
    return std::string(ACAMPO_SOURCE_DIR) + "/fixtures/" + name;
}
