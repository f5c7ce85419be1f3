#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "gpf/progressions.hpp"

namespace gpf::detail {

__extension__ typedef unsigned __int128 u128;

inline std::optional<std::uint64_t> mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) return std::nullopt;
    return r;
}

inline std::optional<std::uint64_t> pow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        auto next = mul(r, base);
        if (!next) return std::nullopt;
        r = *next;
    }
    return r;
}

/// base^exp, or nullopt once it exceeds `limit`.
inline std::optional<std::uint64_t> pow_at_most(std::uint64_t base, unsigned exp,
                                                std::uint64_t limit) {
    auto r = pow(base, exp);
    if (!r || *r > limit) return std::nullopt;
    return r;
}

struct GpSetAccess {
    static GpSet make(std::vector<std::uint64_t> sorted) { return GpSet(std::move(sorted)); }
};

}  // namespace gpf::detail
