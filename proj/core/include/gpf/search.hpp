#pragma once

// Largest k-GP-free subsets of {1..n}.
//
// A ⊆ {1..n} is k-GP-free exactly when its complement meets every k-GP inside
// {1..n}, so the maximum size is n minus a minimum hitting set of the GP
// hypergraph. The exact solver is a branch and bound over that hitting set.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gpf/big_rational.hpp"
#include "gpf/progressions.hpp"

namespace gpf {

struct Hypergraph {
    std::uint64_t n = 0;
    unsigned k = 3;
    std::vector<GpSet> edges;
};

Hypergraph gp_hypergraph(std::uint64_t n, unsigned k);

/// Node limit is checked first; the wall-clock limit only every few thousand nodes.
struct Budget {
    std::optional<std::uint64_t> max_nodes;
    std::optional<std::chrono::milliseconds> timeout;
};

enum class Method { Exact, Greedy, Squarefree };

const char* method_name(Method m) noexcept;
/// Throws DomainError for anything but "exact", "greedy" or "squarefree".
Method parse_method(const std::string& name);

struct SearchResult {
    std::uint64_t n = 0;
    unsigned k = 3;
    Method method = Method::Exact;
    std::uint64_t max_size = 0;
    std::vector<std::uint64_t> witness;  // ascending, verified GP-free
    bool optimal = false;
    std::uint64_t nodes_explored = 0;
    std::chrono::nanoseconds elapsed{0};
};

/// Branch and bound. When the budget runs out the best set found so far is
/// returned with optimal = false.
SearchResult max_gp_free_exact(std::uint64_t n, unsigned k, const Budget& budget = {});

/// Ascending scan keeping x whenever no progression ending at x is completed.
/// optimal is set only when the size meets the block-family certificate.
SearchResult greedy_gp_free(std::uint64_t n, unsigned k);

std::vector<std::uint64_t> squarefree_set(std::uint64_t n);

struct DensityReport {
    SearchResult result;
    BigRational density;            // size / n
    BigRational improved_bound;     // asymptotic bound for comparison
    std::uint64_t exclusion_lower_bound = 0;
    bool certificate_holds = false; // n - size >= exclusion_lower_bound
};

DensityReport density_report(std::uint64_t n, unsigned k, Method method, const Budget& budget = {});

}  // namespace gpf
