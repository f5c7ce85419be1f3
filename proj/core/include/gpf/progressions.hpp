#pragma once

// Integer geometric progressions inside {1..n}.
//
// A k-term progression of distinct positive integers always has a rational
// common ratio r = a1/a0. Writing r = p/q in lowest terms, a_{k-1} = a0 (p/q)^(k-1)
// is an integer only if q^(k-1) divides a0, so every such progression is
//
//     m q^(k-1), m q^(k-2) p, ..., m p^(k-1)
//
// for a unique multiplier m >= 1. Orienting it ascending gives p > q >= 1.
// Enumerating (p, q, m) with gcd(p, q) = 1 and m p^(k-1) <= n is therefore
// complete and lists each k-subset exactly once.

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace gpf {

class Ratio {
public:
    /// Reduced, ascending ratio. Throws DomainError for p == q or nonpositive input.
    static Ratio canonical(std::int64_t p, std::int64_t q);

    /// Ratio upper/lower of two distinct positive terms, reduced (oriented ascending).
    static Ratio of_terms(std::uint64_t lower, std::uint64_t upper);

    std::uint64_t p() const noexcept { return p_; }
    std::uint64_t q() const noexcept { return q_; }

    friend bool operator==(const Ratio&, const Ratio&) = default;
    friend auto operator<=>(const Ratio&, const Ratio&) = default;

private:
    Ratio(std::uint64_t p, std::uint64_t q) noexcept : p_(p), q_(q) {}

    std::uint64_t p_;
    std::uint64_t q_;
};

Ratio canonical_ratio(std::int64_t p, std::int64_t q);

struct Progression {
    std::uint64_t m = 1;
    Ratio ratio;
    unsigned k = 3;
};

/// Terms m q^(k-1-i) p^i, ascending. Throws OverflowError instead of wrapping.
std::vector<std::uint64_t> expand(const Progression& prog);

namespace detail {
struct GpSetAccess;
}

/// Sorted k-element set forming a geometric progression.
class GpSet {
public:
    /// Sorts and validates; throws DomainError unless the values form a GP of length >= 3.
    static GpSet from_elements(std::vector<std::uint64_t> elements);

    std::span<const std::uint64_t> elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    std::uint64_t front() const noexcept { return elements_.front(); }
    std::uint64_t back() const noexcept { return elements_.back(); }
    bool contains(std::uint64_t x) const noexcept;

    Ratio ratio() const;
    Progression to_progression() const;

    friend bool operator==(const GpSet&, const GpSet&) = default;
    friend auto operator<=>(const GpSet&, const GpSet&) = default;

private:
    explicit GpSet(std::vector<std::uint64_t> elements) noexcept
        : elements_(std::move(elements)) {}
    friend struct detail::GpSetAccess;

    std::vector<std::uint64_t> elements_;
};

/// Visits every k-GP inside {1..n} in (p, q, m) order. Returning false stops the walk.
void for_each_gp(std::uint64_t n, unsigned k, const std::function<bool(const GpSet&)>& visit);

std::vector<GpSet> enumerate_gps(std::uint64_t n, unsigned k);

/// Largest binomial(n, k) brute_force_gps accepts.
inline constexpr std::uint64_t kBruteForceSubsetLimit = 20'000'000;

/// Definitional oracle: scans every k-subset of {1..n}. Throws DomainError past the guard.
std::vector<GpSet> brute_force_gps(std::uint64_t n, unsigned k);

/// A progression contained in `set`, if any. Input need not be sorted; zero is rejected.
std::optional<GpSet> find_gp(std::span<const std::uint64_t> set, unsigned k);

inline bool is_gp_free(std::span<const std::uint64_t> set, unsigned k) {
    return !find_gp(set, k).has_value();
}

namespace detail {
// The two strategies find_gp chooses between; exposed for cross-checking.
std::optional<GpSet> find_gp_by_pairs(std::span<const std::uint64_t> sorted, unsigned k);
std::optional<GpSet> find_gp_by_walk(std::span<const std::uint64_t> sorted, unsigned k);
}  // namespace detail

/// Throws DomainError for k < 3.
void require_length(unsigned k);

}  // namespace gpf
