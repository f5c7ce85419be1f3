#include "gpf/construction.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <unordered_map>

#include "checked.hpp"
#include "gpf/errors.hpp"

namespace gpf {

namespace {

using detail::u128;

void require_inputs(std::uint64_t n, unsigned k) {
    require_length(k);
    if (n == 0) throw DomainError("n must be at least 1");
}

// floor(n / base^e), 0 once base^e exceeds n.
std::uint64_t div_pow(std::uint64_t n, std::uint64_t base, unsigned e) {
    auto d = detail::pow_at_most(base, e, n);
    return d ? n / *d : 0;
}

// Odd integers in [1, x] not divisible by 5.
std::uint64_t count_y_bases(std::uint64_t x) { return x - x / 2 - x / 5 + x / 10; }

// Integers in [1, x] coprime to 30.
std::uint64_t count_z_bases(std::uint64_t x) {
    return x - x / 2 - x / 3 - x / 5 + x / 6 + x / 10 + x / 15 - x / 30;
}

struct Window {
    std::uint64_t lo;  // exclusive
    std::uint64_t hi;  // inclusive
};

// Y: n / 6^(k-1) < b <= n / 5^(k-1). Z: n / 10^(k-1) < c <= n / 7^(k-1).
Window y_window(std::uint64_t n, unsigned k) { return {div_pow(n, 6, k - 1), div_pow(n, 5, k - 1)}; }
Window z_window(std::uint64_t n, unsigned k) { return {div_pow(n, 10, k - 1), div_pow(n, 7, k - 1)}; }

bool y_base_ok(std::uint64_t b) { return b % 2 == 1 && b % 5 != 0; }
bool z_base_ok(std::uint64_t c) { return c % 2 == 1 && c % 3 != 0 && c % 5 != 0; }

std::uint64_t x_count(std::uint64_t n, unsigned k) {
    std::uint64_t count = 0;
    const unsigned L = compute_L(n, k);
    for (unsigned ell = 1; ell <= L; ++ell) count += ((n >> (ell * k - 1)) + 1) / 2;
    return count;
}

std::uint64_t y_count(std::uint64_t n, unsigned k) {
    const Window w = y_window(n, k);
    return w.hi > w.lo ? count_y_bases(w.hi) - count_y_bases(w.lo) : 0;
}

std::uint64_t z_count(std::uint64_t n, unsigned k) {
    const Window w = z_window(n, k);
    return w.hi > w.lo ? count_z_bases(w.hi) - count_z_bases(w.lo) : 0;
}

}  // namespace

// Writes blocks straight into a BlockList sized up front.
class BlockWriter {
public:
    BlockWriter(BlockList& list, std::size_t blocks) : list_(list), k_(list.k()) {
        block_ = list.params_.size();
        list.params_.resize(block_ + blocks);
        list.elements_.resize((block_ + blocks) * k_);
        out_ = list.elements_.data() + block_ * k_;
    }

    ~BlockWriter() {
        // Shrink back if fewer blocks were written than reserved.
        list_.params_.resize(block_);
        list_.elements_.resize(block_ * k_);
    }

    std::uint64_t* next(const BlockParams& params) {
        list_.params_[block_++] = params;
        std::uint64_t* slot = out_;
        out_ += k_;
        return slot;
    }

private:
    BlockList& list_;
    unsigned k_;
    std::size_t block_;
    std::uint64_t* out_;
};

namespace {

void append_x(BlockList& out, std::uint64_t n, unsigned k) {
    BlockWriter writer(out, x_count(n, k));
    const unsigned L = compute_L(n, k);
    for (unsigned ell = 1; ell <= L; ++ell) {
        const unsigned low_shift = (ell - 1) * k;
        const std::uint64_t max_a = n >> (ell * k - 1);
        for (std::uint64_t a = 1; a <= max_a; a += 2) {
            std::uint64_t* terms = writer.next({BlockLabel::X, ell, a});
            std::uint64_t t = a << low_shift;
            for (unsigned j = 0; j < k; ++j, t <<= 1) terms[j] = t;
        }
    }
}

// Blocks base * lo^(k-1-i) * hi^i for qualifying bases in the window.
template <typename Qualifies>
void append_ratio_blocks(BlockList& out, BlockLabel label, Window w, std::size_t count, unsigned k,
                         std::uint64_t lo, std::uint64_t hi, Qualifies qualifies) {
    if (w.hi <= w.lo) return;
    BlockWriter writer(out, count);
    const std::uint64_t first = *detail::pow(lo, k - 1);
    for (std::uint64_t base = w.lo + 1; base <= w.hi; ++base) {
        if (!qualifies(base)) continue;
        std::uint64_t* terms = writer.next({label, 0, base});
        std::uint64_t t = first * base;
        terms[0] = t;
        for (unsigned i = 1; i < k; ++i) {
            t = t / lo * hi;
            terms[i] = t;
        }
    }
}

void append_y(BlockList& out, std::uint64_t n, unsigned k) {
    append_ratio_blocks(out, BlockLabel::Y, y_window(n, k), y_count(n, k), k, 3, 5, y_base_ok);
}

void append_z(BlockList& out, std::uint64_t n, unsigned k) {
    append_ratio_blocks(out, BlockLabel::Z, z_window(n, k), z_count(n, k), k, 5, 7, z_base_ok);
}

}  // namespace

char label_char(BlockLabel label) noexcept {
    switch (label) {
        case BlockLabel::X: return 'X';
        case BlockLabel::Y: return 'Y';
        case BlockLabel::Z: return 'Z';
    }
    return '?';
}

Ratio label_ratio(BlockLabel label) {
    switch (label) {
        case BlockLabel::X: return Ratio::canonical(2, 1);
        case BlockLabel::Y: return Ratio::canonical(5, 3);
        case BlockLabel::Z: return Ratio::canonical(7, 5);
    }
    throw DomainError("unknown block label");
}

void BlockList::throw_length_mismatch(std::size_t got) const {
    throw DomainError("block has " + std::to_string(got) + " elements, expected " + std::to_string(k_));
}

void BlockList::append(const BlockList& other) {
    if (other.k_ != k_) throw DomainError("cannot merge block lists of different length");
    params_.insert(params_.end(), other.params_.begin(), other.params_.end());
    elements_.insert(elements_.end(), other.elements_.begin(), other.elements_.end());
}

void BlockList::reserve(std::size_t blocks) {
    params_.reserve(blocks);
    elements_.reserve(blocks * k_);
}

unsigned compute_L(std::uint64_t n, unsigned k) {
    require_inputs(n, k);
    unsigned L = 0;
    while (true) {
        const std::uint64_t shift = std::uint64_t{L + 1} * k - 1;
        if (shift >= 64 || (std::uint64_t{1} << shift) > n) break;
        ++L;
    }
    return L;
}

BlockList x_blocks(std::uint64_t n, unsigned k) {
    require_inputs(n, k);
    BlockList out(k);
    append_x(out, n, k);
    return out;
}

BlockList y_blocks(std::uint64_t n, unsigned k) {
    require_inputs(n, k);
    BlockList out(k);
    append_y(out, n, k);
    return out;
}

BlockList z_blocks(std::uint64_t n, unsigned k) {
    require_inputs(n, k);
    BlockList out(k);
    append_z(out, n, k);
    return out;
}

Family build_family(std::uint64_t n, unsigned k) {
    require_inputs(n, k);
    Family f{n, k, compute_L(n, k), BlockList(k)};
    f.blocks.reserve(exclusion_lower_bound(n, k));
    append_x(f.blocks, n, k);
    append_y(f.blocks, n, k);
    append_z(f.blocks, n, k);
    return f;
}

std::uint64_t exclusion_lower_bound(std::uint64_t n, unsigned k) {
    require_inputs(n, k);
    return x_count(n, k) + y_count(n, k) + z_count(n, k);
}

std::optional<std::vector<std::uint64_t>> block_elements(const BlockParams& params, unsigned k) {
    require_length(k);
    if (params.base == 0) return std::nullopt;
    std::optional<std::uint64_t> m = params.base;
    if (params.label == BlockLabel::X) {
        if (params.ell == 0) return std::nullopt;
        auto scale = detail::pow(2, (params.ell - 1) * k);
        m = scale ? detail::mul(*scale, params.base) : std::nullopt;
    }
    if (!m) return std::nullopt;
    try {
        return expand(Progression{*m, label_ratio(params.label), k});
    } catch (const OverflowError&) {
        return std::nullopt;
    }
}

const char* violation_name(Violation v) noexcept {
    switch (v) {
        case Violation::None: return "none";
        case Violation::HeaderMismatch: return "header-mismatch";
        case Violation::BadParameters: return "bad-parameters";
        case Violation::WrongElements: return "wrong-elements";
        case Violation::OutOfRange: return "out-of-range";
        case Violation::NotProgression: return "not-progression";
        case Violation::SmallOddElement: return "small-odd-element";
        case Violation::Overlap: return "overlap";
    }
    return "unknown";
}

namespace {

// Per-family constants for the element checks.
struct Checker {
    std::uint64_t n;
    unsigned k;
    unsigned L;
    std::uint64_t odd_floor;           // floor(n / 2^(k-1))
    std::optional<std::uint64_t> p3, p5, p6, p7, p10;  // powers ^(k-1), nullopt past 64 bits
    std::array<Ratio, 3> ratios;

    Checker(std::uint64_t n_, unsigned k_, unsigned L_)
        : n(n_), k(k_), L(L_),
          odd_floor(k_ - 1 >= 64 ? 0 : n_ >> (k_ - 1)),
          p3(detail::pow(3, k_ - 1)), p5(detail::pow(5, k_ - 1)), p6(detail::pow(6, k_ - 1)),
          p7(detail::pow(7, k_ - 1)), p10(detail::pow(10, k_ - 1)),
          ratios{label_ratio(BlockLabel::X), label_ratio(BlockLabel::Y), label_ratio(BlockLabel::Z)} {}

    const Ratio& ratio(BlockLabel label) const { return ratios[static_cast<int>(label)]; }

    // base * pw > n, with pw = nullopt meaning "beyond 64 bits".
    bool above(std::uint64_t base, const std::optional<std::uint64_t>& pw) const {
        return !pw || u128(base) * *pw > n;
    }
    bool within(std::uint64_t base, const std::optional<std::uint64_t>& pw) const {
        return pw && u128(base) * *pw <= n;
    }

    bool params_ok(const BlockParams& p) const {
        switch (p.label) {
            case BlockLabel::X: {
                if (p.ell < 1 || p.ell > L || p.base % 2 == 0) return false;
                const std::uint64_t shift = std::uint64_t{p.ell} * k - 1;
                return shift < 64 && u128(p.base) << shift <= n;
            }
            case BlockLabel::Y:
                return p.ell == 0 && y_base_ok(p.base) && above(p.base, p6) && within(p.base, p5);
            case BlockLabel::Z:
                return p.ell == 0 && z_base_ok(p.base) && above(p.base, p10) && within(p.base, p7);
        }
        return false;
    }

    std::optional<u128> expected_first(const BlockParams& p) const {
        if (p.label == BlockLabel::X) {
            const std::uint64_t shift = std::uint64_t{p.ell - 1} * k;
            if (shift >= 64) return std::nullopt;
            return u128(p.base) << shift;
        }
        const auto& pw = p.label == BlockLabel::Y ? p3 : p5;
        if (!pw) return std::nullopt;
        return u128(p.base) * *pw;
    }
};

VerificationReport violation(Violation kind, std::size_t block, std::string message,
                             std::optional<std::uint64_t> element = std::nullopt,
                             std::optional<std::size_t> other = std::nullopt) {
    return {kind, block, other, element, std::move(message)};
}

std::string describe(const Block& b) {
    std::string s(1, label_char(b.params.label));
    if (b.params.label == BlockLabel::X) s += "_" + std::to_string(b.params.ell);
    s += "(" + std::to_string(b.params.base) + ")";
    return s;
}

// First failing check for a block, in reporting order.
Violation first_violation(const Checker& c, const Block& b) {
    const auto& e = b.elements;
    for (auto x : e)
        if (x < 1 || x > c.n) return Violation::OutOfRange;
    const Ratio& r = c.ratio(b.params.label);
    const std::uint64_t p = r.p(), q = r.q();
    for (std::size_t j = 1; j < e.size(); ++j)
        if (u128(e[j]) * q != u128(e[j - 1]) * p) return Violation::NotProgression;
    if (b.params.label != BlockLabel::X) {
        for (auto x : e)
            if (x % 2 == 0 || x <= c.odd_floor) return Violation::SmallOddElement;
    }
    if (!c.params_ok(b.params)) return Violation::BadParameters;
    const auto first = c.expected_first(b.params);
    if (!first || *first != e[0]) return Violation::WrongElements;
    return Violation::None;
}

VerificationReport block_report(const Checker& c, const Block& b, std::size_t i, Violation kind) {
    const auto& e = b.elements;
    switch (kind) {
        case Violation::OutOfRange: {
            const auto x = *std::find_if(e.begin(), e.end(), [&](auto v) { return v < 1 || v > c.n; });
            return violation(kind, i, describe(b) + " element " + std::to_string(x) + " outside [1, n]", x);
        }
        case Violation::NotProgression: {
            const Ratio& r = c.ratio(b.params.label);
            std::size_t j = 1;
            while (u128(e[j]) * r.q() == u128(e[j - 1]) * r.p()) ++j;
            return violation(kind, i,
                             describe(b) + " is not a progression with ratio " + std::to_string(r.p()) +
                                 "/" + std::to_string(r.q()),
                             e[j]);
        }
        case Violation::SmallOddElement: {
            const auto x =
                *std::find_if(e.begin(), e.end(), [&](auto v) { return v % 2 == 0 || v <= c.odd_floor; });
            return violation(kind, i,
                             describe(b) + " element " + std::to_string(x) + " is even or at most n/2^(k-1)",
                             x);
        }
        case Violation::BadParameters:
            return violation(kind, i, describe(b) + " violates its range or congruence condition");
        case Violation::WrongElements:
            return violation(kind, i, describe(b) + " elements do not match its parameters", e[0]);
        default:
            return {};
    }
}

VerificationReport overlap_report(const BlockList& blocks, std::size_t i, std::uint64_t x,
                                  std::size_t owner) {
    return violation(Violation::Overlap, i,
                     describe(blocks[i]) + " and " + describe(blocks[owner]) + " share " +
                         std::to_string(x),
                     x, owner);
}

std::size_t find_owner(const BlockList& blocks, std::size_t before, std::uint64_t x) {
    for (std::size_t j = 0; j < before; ++j) {
        const auto e = blocks[j].elements;
        if (std::find(e.begin(), e.end(), x) != e.end()) return j;
    }
    return before;  // repeated inside block `before` itself
}

}  // namespace

VerificationReport verify_family(const Family& f) {
    if (f.k < 3 || f.n == 0 || f.blocks.k() != f.k)
        return {Violation::HeaderMismatch, {}, {}, {}, "k, n or block length inconsistent"};
    if (f.L != compute_L(f.n, f.k))
        return {Violation::HeaderMismatch, {}, {}, {},
                "L = " + std::to_string(f.L) + " but expected " + std::to_string(compute_L(f.n, f.k))};

    const Checker checker(f.n, f.k, f.L);
    const std::size_t count = f.blocks.size();
    const std::uint64_t total = std::uint64_t{count} * f.k;

    // Dense families use a bitmap over [1, n]; sparse ones a hash map.
    const bool dense = f.n <= (std::uint64_t{1} << 32) && f.n / 64 <= 16 * total + 4096;
    std::vector<std::uint64_t> seen(dense ? f.n / 64 + 1 : 0);
    std::unordered_map<std::uint64_t, std::size_t> owners;
    if (!dense) owners.reserve(total);

    for (std::size_t i = 0; i < count; ++i) {
        const Block b = f.blocks[i];
        if (auto v = first_violation(checker, b); v != Violation::None)
            return block_report(checker, b, i, v);
        for (auto x : b.elements) {
            if (dense) {
                std::uint64_t& word = seen[x >> 6];
                const std::uint64_t bit = std::uint64_t{1} << (x & 63);
                if (word & bit) return overlap_report(f.blocks, i, x, find_owner(f.blocks, i, x));
                word |= bit;
            } else {
                auto [it, inserted] = owners.emplace(x, i);
                if (!inserted) return overlap_report(f.blocks, i, x, it->second);
            }
        }
    }
    return {};
}

}  // namespace gpf
