#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace iotaudit::util {

// Deterministic RNG used everywhere randomness is needed; a run's --seed
// flows into every generated id, token and probe marker.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Inclusive range.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        std::uniform_int_distribution<std::int64_t> d(lo, hi);
        return d(gen_);
    }

    double uniform01() {
        std::uniform_real_distribution<double> d(0.0, 1.0);
        return d(gen_);
    }

    std::string hex(std::size_t n) {
        static const char* digits = "0123456789abcdef";
        std::string out;
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) out.push_back(digits[range(0, 15)]);
        return out;
    }

    // Fixed-width decimal string, first digit nonzero so the width is stable.
    std::string digits(std::size_t n) {
        std::string out;
        out.reserve(n);
        out.push_back(static_cast<char>('1' + range(0, 8)));
        for (std::size_t i = 1; i < n; ++i) out.push_back(static_cast<char>('0' + range(0, 9)));
        return out;
    }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(range(0, static_cast<std::int64_t>(v.size()) - 1))];
    }

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

}  // namespace iotaudit::util
