#include "gpf/progressions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "checked.hpp"
#include "gpf/errors.hpp"

namespace gpf {

namespace {

using detail::u128;

// Calls visit(terms) for every k-GP in {1..n}, ordered by (p, q, m). `terms`
// is scratch storage reused between calls.
template <typename Visit>
void walk_progressions(std::uint64_t n, unsigned k, Visit&& visit) {
    std::vector<std::uint64_t> terms(k);
    for (std::uint64_t p = 2;; ++p) {
        auto top = detail::pow_at_most(p, k - 1, n);
        if (!top) break;
        for (std::uint64_t q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const std::uint64_t bottom = *detail::pow(q, k - 1);
            const std::uint64_t max_m = n / *top;
            for (std::uint64_t m = 1; m <= max_m; ++m) {
                std::uint64_t t = m * bottom;
                terms[0] = t;
                for (unsigned i = 1; i < k; ++i) {
                    t = t / q * p;
                    terms[i] = t;
                }
                if (!visit(std::span<const std::uint64_t>(terms))) return;
            }
        }
    }
}

bool is_progression(std::span<const std::uint64_t> sorted) {
    for (std::size_t i = 1; i + 1 < sorted.size(); ++i) {
        if (u128(sorted[i]) * sorted[i] != u128(sorted[i - 1]) * sorted[i + 1]) return false;
    }
    return true;
}

GpSet make_set(std::span<const std::uint64_t> terms) {
    return detail::GpSetAccess::make({terms.begin(), terms.end()});
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    u128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap) return cap + 1;
    }
    return static_cast<std::uint64_t>(r);
}

}  // namespace

void require_length(unsigned k) {
    if (k < 3) throw DomainError("progression length k must be at least 3, got " + std::to_string(k));
}

Ratio Ratio::canonical(std::int64_t p, std::int64_t q) {
    if (p < 1 || q < 1) throw DomainError("ratio terms must be positive");
    if (p == q) throw DomainError("ratio 1 is not a common ratio");
    return of_terms(static_cast<std::uint64_t>(std::min(p, q)),
                    static_cast<std::uint64_t>(std::max(p, q)));
}

Ratio Ratio::of_terms(std::uint64_t lower, std::uint64_t upper) {
    if (lower == 0 || upper == 0) throw DomainError("ratio terms must be positive");
    if (lower == upper) throw DomainError("ratio 1 is not a common ratio");
    if (lower > upper) std::swap(lower, upper);
    const std::uint64_t g = std::gcd(lower, upper);
    return Ratio(upper / g, lower / g);
}

Ratio canonical_ratio(std::int64_t p, std::int64_t q) { return Ratio::canonical(p, q); }

std::vector<std::uint64_t> expand(const Progression& prog) {
    require_length(prog.k);
    if (prog.m == 0) throw DomainError("multiplier must be positive");
    const std::uint64_t p = prog.ratio.p();
    const std::uint64_t q = prog.ratio.q();
    auto bottom = detail::pow(q, prog.k - 1);
    auto first = bottom ? detail::mul(prog.m, *bottom) : std::nullopt;
    if (!first) throw OverflowError("first term of progression exceeds 64 bits");

    std::vector<std::uint64_t> terms;
    terms.reserve(prog.k);
    std::uint64_t t = *first;
    terms.push_back(t);
    for (unsigned i = 1; i < prog.k; ++i) {
        auto next = detail::mul(t / q, p);
        if (!next) throw OverflowError("term " + std::to_string(i) + " of progression exceeds 64 bits");
        t = *next;
        terms.push_back(t);
    }
    return terms;
}

GpSet GpSet::from_elements(std::vector<std::uint64_t> elements) {
    std::sort(elements.begin(), elements.end());
    if (elements.size() < 3) throw DomainError("a progression needs at least 3 terms");
    if (elements.front() == 0) throw DomainError("progression terms must be positive");
    if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
        throw DomainError("progression terms must be distinct");
    if (!is_progression(elements)) throw DomainError("values do not form a geometric progression");
    return GpSet(std::move(elements));
}

bool GpSet::contains(std::uint64_t x) const noexcept {
    return std::binary_search(elements_.begin(), elements_.end(), x);
}

Ratio GpSet::ratio() const { return Ratio::of_terms(elements_[0], elements_[1]); }

Progression GpSet::to_progression() const {
    const Ratio r = ratio();
    const auto k = static_cast<unsigned>(elements_.size());
    return Progression{elements_[0] / *detail::pow(r.q(), k - 1), r, k};
}

void for_each_gp(std::uint64_t n, unsigned k, const std::function<bool(const GpSet&)>& visit) {
    require_length(k);
    if (n == 0) throw DomainError("n must be at least 1");
    walk_progressions(n, k, [&](std::span<const std::uint64_t> terms) {
        return visit(make_set(terms));
    });
}

std::vector<GpSet> enumerate_gps(std::uint64_t n, unsigned k) {
    std::vector<GpSet> out;
    for_each_gp(n, k, [&](const GpSet& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

std::vector<GpSet> brute_force_gps(std::uint64_t n, unsigned k) {
    require_length(k);
    if (n == 0) throw DomainError("n must be at least 1");
    if (binomial_saturating(n, k, kBruteForceSubsetLimit) > kBruteForceSubsetLimit)
        throw DomainError("brute force refuses binomial(" + std::to_string(n) + ", " +
                          std::to_string(k) + ") subsets");

    std::vector<GpSet> out;
    if (k > n) return out;
    std::vector<std::uint64_t> subset(k);
    std::iota(subset.begin(), subset.end(), std::uint64_t{1});
    for (;;) {
        if (is_progression(subset)) out.push_back(make_set(subset));
        // Advance to the next k-subset in lexicographic order.
        std::size_t i = k;
        while (i > 0 && subset[i - 1] == n - k + i) --i;
        if (i == 0) break;
        ++subset[i - 1];
        for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
    return out;
}

namespace detail {

std::optional<GpSet> find_gp_by_pairs(std::span<const std::uint64_t> sorted, unsigned k) {
    if (sorted.size() < k) return std::nullopt;
    const std::uint64_t max = sorted.back();
    const long double limit = static_cast<long double>(max) * (1.0L + 1e-9L) + 1.0L;
    std::vector<std::uint64_t> terms(k);
    for (std::size_t i = 0; i + k <= sorted.size(); ++i) {
        const std::uint64_t a0 = sorted[i];
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            const std::uint64_t a1 = sorted[j];
            const long double r = static_cast<long double>(a1) / a0;
            // Last term a0 r^(k-1) only grows with a1.
            if (a0 * std::pow(r, static_cast<long double>(k - 1)) > limit) break;
            const Ratio ratio = Ratio::of_terms(a0, a1);
            terms[0] = a0;
            terms[1] = a1;
            bool ok = true;
            for (unsigned t = 2; t < k && ok; ++t) {
                const std::uint64_t prev = terms[t - 1];
                if (prev % ratio.q() != 0) { ok = false; break; }
                auto next = mul(prev / ratio.q(), ratio.p());
                if (!next || *next > max ||
                    !std::binary_search(sorted.begin(), sorted.end(), *next)) {
                    ok = false;
                    break;
                }
                terms[t] = *next;
            }
            if (ok) return make_set(terms);
        }
    }
    return std::nullopt;
}

std::optional<GpSet> find_gp_by_walk(std::span<const std::uint64_t> sorted, unsigned k) {
    if (sorted.size() < k) return std::nullopt;
    const std::uint64_t max = sorted.back();
    std::vector<bool> member(max + 1, false);
    for (auto x : sorted) member[x] = true;
    std::optional<GpSet> found;
    walk_progressions(max, k, [&](std::span<const std::uint64_t> terms) {
        for (auto t : terms)
            if (!member[t]) return true;
        found = make_set(terms);
        return false;
    });
    return found;
}

}  // namespace detail

std::optional<GpSet> find_gp(std::span<const std::uint64_t> set, unsigned k) {
    require_length(k);
    std::vector<std::uint64_t> sorted(set.begin(), set.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (!sorted.empty() && sorted.front() == 0) throw DomainError("set members must be positive");
    if (sorted.size() < k) return std::nullopt;

    // Walking all progressions below max costs about max log(max); scanning
    // pairs costs about |set|^2. Dense sets favour the walk.
    constexpr std::uint64_t kWalkCeiling = std::uint64_t{1} << 28;
    const std::uint64_t max = sorted.back();
    const u128 pairs = u128(sorted.size()) * sorted.size();
    if (max <= kWalkCeiling && u128(max) * 8 < pairs) return detail::find_gp_by_walk(sorted, k);
    return detail::find_gp_by_pairs(sorted, k);
}

}  // namespace gpf
