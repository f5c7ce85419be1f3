#pragma once

// Disjoint progression blocks inside {1..n}. Every k-GP-free subset of {1..n}
// misses at least one element of each block, so the block count is a certified
// lower bound on n - |A|.
//
//   X_l(a) = { 2^((l-1)k) a, ..., 2^(lk-1) a }     a odd, a 2^(lk-1) <= n, 1 <= l <= L
//   Y(b)   = { 3^(k-1-i) 5^i b : 0 <= i < k }      b odd, 5 !| b, n < 6^(k-1) b, 5^(k-1) b <= n
//   Z(c)   = { 5^(k-1-i) 7^i c : 0 <= i < k }      c odd, gcd(c,15) = 1, n < 10^(k-1) c, 7^(k-1) c <= n
//
// with L the largest integer such that 2^(Lk-1) <= n. All range conditions are
// evaluated as exact integer comparisons.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gpf/progressions.hpp"

namespace gpf {

enum class BlockLabel : std::uint8_t { X, Y, Z };

char label_char(BlockLabel label) noexcept;

/// Common ratio of a block family: 2, 5/3 or 7/5.
Ratio label_ratio(BlockLabel label);

struct BlockParams {
    BlockLabel label = BlockLabel::X;
    unsigned ell = 0;            // X only; 0 for Y and Z
    std::uint64_t base = 0;      // a, b or c

    friend bool operator==(const BlockParams&, const BlockParams&) = default;
};

/// A block as seen through a BlockList; `elements` points into the list's storage.
struct Block {
    BlockParams params;
    std::span<const std::uint64_t> elements;
};

/// Blocks of a common length k with their elements stored contiguously.
class BlockList {
public:
    explicit BlockList(unsigned k) : k_(k) {}

    unsigned k() const noexcept { return k_; }
    std::size_t size() const noexcept { return params_.size(); }
    bool empty() const noexcept { return params_.empty(); }

    Block operator[](std::size_t i) const noexcept {
        return {params_[i], {elements_.data() + i * k_, k_}};
    }

    /// Appends a block verbatim. Throws DomainError if elements.size() != k.
    void push_back(const BlockParams& params, std::span<const std::uint64_t> elements) {
        if (elements.size() != k_) throw_length_mismatch(elements.size());
        params_.push_back(params);
        elements_.insert(elements_.end(), elements.begin(), elements.end());
    }
    void append(const BlockList& other);
    void reserve(std::size_t blocks);

    /// Element storage, k entries per block in block order.
    std::span<const std::uint64_t> all_elements() const noexcept { return elements_; }
    std::span<const BlockParams> params() const noexcept { return params_; }

    friend bool operator==(const BlockList&, const BlockList&) = default;

private:
    friend class BlockWriter;
    [[noreturn]] void throw_length_mismatch(std::size_t got) const;

    unsigned k_;
    std::vector<BlockParams> params_;
    std::vector<std::uint64_t> elements_;
};

struct Family {
    std::uint64_t n = 0;
    unsigned k = 3;
    unsigned L = 0;
    BlockList blocks{3};

    friend bool operator==(const Family&, const Family&) = default;
};

/// Largest L with 2^(Lk-1) <= n; 0 when n < 2^(k-1).
unsigned compute_L(std::uint64_t n, unsigned k);

BlockList x_blocks(std::uint64_t n, unsigned k);
BlockList y_blocks(std::uint64_t n, unsigned k);
BlockList z_blocks(std::uint64_t n, unsigned k);

/// X blocks ordered by (l, a), then Y by b, then Z by c.
Family build_family(std::uint64_t n, unsigned k);

/// Elements a block with these parameters must contain, or nullopt on overflow.
std::optional<std::vector<std::uint64_t>> block_elements(const BlockParams& params, unsigned k);

enum class Violation {
    None,
    HeaderMismatch,     // L disagrees with compute_L(n, k), or k < 3
    BadParameters,      // a, b, c or l outside its defining range / congruence
    WrongElements,      // elements differ from those the parameters determine
    OutOfRange,         // element outside [1, n]
    NotProgression,     // not a k-GP with the labelled ratio
    SmallOddElement,    // Y or Z element even or not above n / 2^(k-1)
    Overlap,            // two blocks share an element
};

const char* violation_name(Violation v) noexcept;

struct VerificationReport {
    Violation kind = Violation::None;
    std::optional<std::size_t> block;
    std::optional<std::size_t> other_block;
    std::optional<std::uint64_t> element;
    std::string message;

    bool ok() const noexcept { return kind == Violation::None; }
};

/// Checks every block element by element and reports the first violation.
VerificationReport verify_family(const Family& family);

/// Number of blocks in build_family(n, k).
std::uint64_t exclusion_lower_bound(std::uint64_t n, unsigned k);

}  // namespace gpf
