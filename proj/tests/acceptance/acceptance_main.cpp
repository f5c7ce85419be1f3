// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "gpf/bounds.hpp"
#include "gpf/construction.hpp"
#include "gpf/progressions.hpp"
#include "gpf/search.hpp"
#include "support/oracles.hpp"

namespace {

using namespace gpf;
using Clock = std::chrono::steady_clock;
using IntSet = std::vector<std::uint64_t>;

struct Verdict {
    bool pass;
    std::string detail;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<IntSet> sorted_sets(const std::vector<GpSet>& gps) {
    std::vector<IntSet> out;
    for (const auto& g : gps) out.emplace_back(g.elements().begin(), g.elements().end());
    std::sort(out.begin(), out.end());
    return out;
}

Verdict table_reproduction() {
    const auto start = Clock::now();
    const char* argv[] = {"gpf", "table"};
    std::ostringstream out, err;
    const int code = cli::run(2, argv, out, err);
    const double elapsed = seconds_since(start);

    const std::vector<std::pair<unsigned, std::string>> published{
        {3, "0.84948"}, {4, "0.93147"}, {5, "0.96733"}, {6, "0.98404"},
        {7, "0.99211"}, {10, "0.99902"}, {17, "0.99999"}};
    std::string expected = "k\td_U(A_k) <=\n";
    for (auto& [k, v] : published) expected += std::to_string(k) + "\t" + v + "\n";

    const bool pass = code == 0 && out.str() == expected && elapsed < 1.0;
    return {pass, "exit " + std::to_string(code) + ", " + (out.str() == expected ? "exact match" : "MISMATCH") +
                      ", " + std::to_string(elapsed) + " s (limit 1 s)"};
}

Verdict exact_rational_identity() {
    const BigRational imp = improved_bound(3);
    const BigRational c = exclusion_constant(3);
    const bool values = imp == BigRational(18731, 22050) && c == BigRational(3319, 22050);
    const bool sum = imp + c == BigRational(1);
    const bool rendered = render_table({3}).front().rendered == BigRational(18731, 22050).to_fixed(5) &&
                          BigRational(18731, 22050).to_fixed(5) == "0.84948";
    return {values && sum && rendered,
            "improved(3) = " + imp.str() + ", C_3 = " + c.str() + ", rendering " + (rendered ? "agrees" : "DIFFERS")};
}

Verdict oracle_equivalence() {
    const auto start = Clock::now();
    std::size_t checked = 0;
    std::string first_bad;
    for (unsigned k = 3; k <= 5; ++k)
        for (std::uint64_t n = 1; n <= 40; ++n) {
            ++checked;
            if (sorted_sets(enumerate_gps(n, k)) != sorted_sets(brute_force_gps(n, k)) && first_bad.empty())
                first_bad = "n=" + std::to_string(n) + " k=" + std::to_string(k);
        }
    const double elapsed = seconds_since(start);
    return {first_bad.empty() && elapsed < 30.0,
            std::to_string(checked) + " (n,k) pairs" + (first_bad.empty() ? "" : ", first mismatch " + first_bad) +
                ", " + std::to_string(elapsed) + " s (limit 30 s)"};
}

Verdict family_sweep() {
    const auto start = Clock::now();
    std::uint64_t families = 0, blocks = 0;
    std::string first_bad;
    for (unsigned k = 3; k <= 5; ++k)
        for (std::uint64_t n = 1; n <= 100000; ++n) {
            const Family f = build_family(n, k);
            const VerificationReport r = verify_family(f);
            ++families;
            blocks += f.blocks.size();
            if (!r.ok() && first_bad.empty())
                first_bad = "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + r.message;
        }
    const double elapsed = seconds_since(start);
    return {first_bad.empty() && elapsed < 60.0,
            std::to_string(families) + " families, " + std::to_string(blocks) + " blocks" +
                (first_bad.empty() ? "" : ", first failure " + first_bad) + ", " + std::to_string(elapsed) +
                " s (limit 60 s)"};
}

Verdict asymptotics() {
    const std::uint64_t n = 1000000;
    const BigRational tolerance(1, 10000);
    bool pass = true;
    std::string detail;
    for (unsigned k = 3; k <= 5; ++k) {
        const std::uint64_t count = exclusion_lower_bound(n, k);
        BigRational gap = BigRational(static_cast<std::int64_t>(count), static_cast<std::int64_t>(n)) -
                          exclusion_constant(k);
        if (gap.sign() < 0) gap = -gap;
        pass = pass && gap <= tolerance;
        detail += "k=" + std::to_string(k) + ": " + std::to_string(count) + " blocks, |gap| = " +
                  std::to_string(gap.to_double()) + "; ";
    }
    return {pass, detail + "tolerance 1e-4"};
}

Verdict certificate_consistency() {
    std::size_t runs = 0, incomplete = 0, violations = 0;
    std::string first_bad;
    auto sweep = [&](unsigned k, std::uint64_t max_n) {
        for (std::uint64_t n = 1; n <= max_n; ++n) {
            const SearchResult r = max_gp_free_exact(n, k);
            ++runs;
            if (!r.optimal) {
                ++incomplete;
                continue;
            }
            if (n - r.max_size < exclusion_lower_bound(n, k)) {
                ++violations;
                if (first_bad.empty()) first_bad = "n=" + std::to_string(n) + " k=" + std::to_string(k);
            }
        }
    };
    sweep(3, 100);
    sweep(4, 200);
    sweep(5, 200);
    return {violations == 0 && incomplete == 0,
            std::to_string(runs) + " exact searches, " + std::to_string(incomplete) + " incomplete, " +
                std::to_string(violations) + " certificate violations" +
                (first_bad.empty() ? "" : " (first " + first_bad + ")")};
}

Verdict small_case_ground_truth() {
    bool pass = true;
    std::string detail;
    for (unsigned n = 1; n <= 25; ++n) {
        std::vector<std::uint64_t> masks;
        for (const auto& g : brute_force_gps(n, 3)) {
            std::uint64_t m = 0;
            for (auto x : g.elements()) m |= std::uint64_t{1} << (x - 1);
            masks.push_back(m);
        }
        const unsigned truth = testing::max_free_by_subsets(n, masks);
        const SearchResult r = max_gp_free_exact(n, 3);
        if (n == 10) {
            detail += "n=10: exact " + std::to_string(r.max_size) + ", subsets " + std::to_string(truth) + "; ";
            pass = pass && r.max_size == 8;
        }
        if (!r.optimal || r.max_size != truth) {
            pass = false;
            detail += "mismatch at n=" + std::to_string(n) + "; ";
        }
    }
    return {pass, detail + "n = 1..25 compared"};
}

Verdict squarefree_baseline() {
    const auto set = squarefree_set(1000000);
    const BigRational density(static_cast<std::int64_t>(set.size()), 1000000);
    const bool in_range = BigRational(6076, 10000) <= density && density <= BigRational(6082, 10000);
    const bool free = is_gp_free(squarefree_set(10000), 3);
    return {in_range && free, "count " + std::to_string(set.size()) + " (density " + density.to_fixed(6) +
                                  ", window [0.6076, 0.6082]), squarefree_set(10^4) " +
                                  (free ? "3-GP-free" : "HAS A 3-GP")};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"table reproduction", table_reproduction},
        {"exact rational identity", exact_rational_identity},
        {"oracle equivalence", oracle_equivalence},
        {"family validity sweep", family_sweep},
        {"block-count asymptotics", asymptotics},
        {"certificate consistency", certificate_consistency},
        {"small-case ground truth", small_case_ground_truth},
        {"squarefree baseline", squarefree_baseline},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& [name, check] = criteria[i];
        Verdict v;
        try {
            v = check();
        } catch (const std::exception& e) {
            v = {false, std::string("threw: ") + e.what()};
        }
        failures += !v.pass;
        std::printf("%s [%zu] %s: %s\n", v.pass ? "PASS" : "FAIL", i + 1, name.c_str(), v.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
