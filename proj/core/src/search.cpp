#include "gpf/search.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "checked.hpp"
#include "gpf/bounds.hpp"
#include "gpf/construction.hpp"
#include "gpf/errors.hpp"

namespace gpf {

namespace {

using Clock = std::chrono::steady_clock;

void require_inputs(std::uint64_t n, unsigned k) {
    require_length(k);
    if (n == 0) throw DomainError("n must be at least 1");
}

void verify_witness(const SearchResult& r) {
    if (r.witness.size() != r.max_size)
        throw std::logic_error("witness size disagrees with reported maximum");
    if (!r.witness.empty() && r.witness.back() > r.n)
        throw std::logic_error("witness leaves {1..n}");
    if (auto gp = find_gp(r.witness, r.k))
        throw std::logic_error("reported witness contains a progression");
}

std::vector<std::uint64_t> complement(std::uint64_t n, const std::vector<std::uint64_t>& removed) {
    std::vector<std::uint64_t> kept;
    kept.reserve(n - removed.size());
    auto it = removed.begin();
    for (std::uint64_t x = 1; x <= n; ++x) {
        if (it != removed.end() && *it == x) {
            ++it;
            continue;
        }
        kept.push_back(x);
    }
    return kept;
}

// Minimum hitting set of the GP hypergraph on {1..n}.
class HittingSetSolver {
public:
    HittingSetSolver(std::uint64_t n, unsigned k, const Budget& budget)
        : k_(k), budget_(budget), start_(Clock::now()) {
        std::vector<GpSet> edges = enumerate_gps(n, k);
        std::sort(edges.begin(), edges.end(), [](const GpSet& a, const GpSet& b) {
            if (a.back() != b.back()) return a.back() < b.back();
            return a < b;
        });

        for (const auto& e : edges) values_.insert(values_.end(), e.elements().begin(), e.elements().end());
        std::sort(values_.begin(), values_.end());
        values_.erase(std::unique(values_.begin(), values_.end()), values_.end());

        const std::size_t V = values_.size();
        edge_vertices_.reserve(edges.size() * k);
        for (const auto& e : edges)
            for (auto x : e.elements()) edge_vertices_.push_back(index_of(x));
        edge_count_ = edges.size();

        incidence_.assign(V, {});
        for (std::size_t e = 0; e < edge_count_; ++e)
            for (auto v : vertices(e)) incidence_[v].push_back(static_cast<std::uint32_t>(e));

        // The block family is a packing of pairwise disjoint edges; it seeds the bound.
        std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint32_t> by_prefix;
        for (std::size_t e = 0; e < edge_count_; ++e)
            by_prefix[{edges[e].elements()[0], edges[e].elements()[1]}] = static_cast<std::uint32_t>(e);
        const Family family = build_family(n, k);
        for (std::size_t b = 0; b < family.blocks.size(); ++b) {
            const auto el = family.blocks[b].elements;
            seed_.push_back(by_prefix.at({el[0], el[1]}));
        }

        status_.assign(V, Status::Free);
        hits_.assign(edge_count_, 0);
        free_.assign(edge_count_, k);
        vertex_stamp_.assign(V, 0);
        edge_stamp_.assign(edge_count_, 0);
    }

    // Installs an initial solution given as a set of removed integers.
    void set_incumbent(const std::vector<std::uint64_t>& removed) {
        best_.clear();
        for (auto x : removed)
            if (auto it = std::lower_bound(values_.begin(), values_.end(), x);
                it != values_.end() && *it == x)
                best_.push_back(static_cast<std::uint32_t>(it - values_.begin()));
        best_cost_ = best_.size();
    }

    bool run() {
        solve();
        return !aborted_;
    }

    std::vector<std::uint64_t> best_removed() const {
        std::vector<std::uint64_t> out;
        for (auto v : best_) out.push_back(values_[v]);
        std::sort(out.begin(), out.end());
        return out;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    enum class Status : std::uint8_t { Free, In, Out };

    std::span<const std::uint32_t> vertices(std::size_t e) const {
        return {edge_vertices_.data() + e * k_, k_};
    }

    std::uint32_t index_of(std::uint64_t x) const {
        return static_cast<std::uint32_t>(std::lower_bound(values_.begin(), values_.end(), x) -
                                          values_.begin());
    }

    void include(std::uint32_t v) {
        status_[v] = Status::In;
        chosen_.push_back(v);
        for (auto e : incidence_[v]) {
            ++hits_[e];
            --free_[e];
        }
        trail_.push_back(v);
    }

    void exclude(std::uint32_t v) {
        status_[v] = Status::Out;
        for (auto e : incidence_[v]) --free_[e];
        trail_.push_back(v);
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            const auto v = trail_.back();
            trail_.pop_back();
            if (status_[v] == Status::In) {
                chosen_.pop_back();
                for (auto e : incidence_[v]) {
                    --hits_[e];
                    ++free_[e];
                }
            } else {
                for (auto e : incidence_[v]) ++free_[e];
            }
            status_[v] = Status::Free;
        }
    }

    // Forces the last free vertex of every unhit edge. False if some edge can no longer be hit.
    bool propagate() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t e = 0; e < edge_count_; ++e) {
                if (hits_[e] != 0) continue;
                if (free_[e] == 0) return false;
                if (free_[e] == 1) {
                    for (auto v : vertices(e))
                        if (status_[v] == Status::Free) {
                            include(v);
                            break;
                        }
                    changed = true;
                }
            }
        }
        return true;
    }

    bool try_pack(std::size_t e) {
        if (hits_[e] != 0 || edge_stamp_[e] == stamp_) return false;
        for (auto v : vertices(e))
            if (status_[v] == Status::Free && vertex_stamp_[v] == stamp_) return false;
        edge_stamp_[e] = stamp_;
        for (auto v : vertices(e))
            if (status_[v] == Status::Free) vertex_stamp_[v] = stamp_;
        return true;
    }

    // Unhit edges whose free parts are pairwise disjoint each need their own vertex.
    std::size_t packing_bound() {
        ++stamp_;
        std::size_t count = 0;
        for (auto e : seed_) count += try_pack(e);
        for (unsigned size = 1; size <= k_; ++size)
            for (std::size_t e = 0; e < edge_count_; ++e)
                if (free_[e] == size) count += try_pack(e);
        return count;
    }

    bool out_of_budget() {
        if (budget_.max_nodes && nodes_ > *budget_.max_nodes) return true;
        if (budget_.timeout && nodes_ % 4096 == 0 && Clock::now() - start_ > *budget_.timeout)
            return true;
        return false;
    }

    void solve() {
        if (aborted_) return;
        ++nodes_;
        if (out_of_budget()) {
            aborted_ = true;
            return;
        }
        const std::size_t mark = trail_.size();
        if (!propagate() || chosen_.size() >= best_cost_ ||
            chosen_.size() + packing_bound() >= best_cost_) {
            undo_to(mark);
            return;
        }

        std::size_t branch = edge_count_;
        for (std::size_t e = 0; e < edge_count_; ++e)
            if (hits_[e] == 0) {
                branch = e;
                break;
            }
        if (branch == edge_count_) {
            best_ = chosen_;
            best_cost_ = chosen_.size();
            undo_to(mark);
            return;
        }

        // Branch i takes the i-th free vertex and rules out the ones before it.
        for (auto v : vertices(branch)) {
            if (status_[v] != Status::Free) continue;
            const std::size_t inner = trail_.size();
            include(v);
            solve();
            undo_to(inner);
            if (aborted_) break;
            exclude(v);
        }
        undo_to(mark);
    }

    unsigned k_;
    Budget budget_;
    Clock::time_point start_;

    std::vector<std::uint64_t> values_;
    std::vector<std::uint32_t> edge_vertices_;
    std::size_t edge_count_ = 0;
    std::vector<std::vector<std::uint32_t>> incidence_;
    std::vector<std::uint32_t> seed_;

    std::vector<Status> status_;
    std::vector<unsigned> hits_;
    std::vector<unsigned> free_;
    std::vector<std::uint32_t> trail_;
    std::vector<std::uint32_t> chosen_;
    std::vector<std::uint32_t> best_;
    std::size_t best_cost_ = 0;

    std::vector<std::uint64_t> vertex_stamp_;
    std::vector<std::uint64_t> edge_stamp_;
    std::uint64_t stamp_ = 0;

    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

}  // namespace

const char* method_name(Method m) noexcept {
    switch (m) {
        case Method::Exact: return "exact";
        case Method::Greedy: return "greedy";
        case Method::Squarefree: return "squarefree";
    }
    return "unknown";
}

Method parse_method(const std::string& name) {
    if (name == "exact") return Method::Exact;
    if (name == "greedy") return Method::Greedy;
    if (name == "squarefree") return Method::Squarefree;
    throw DomainError("unknown method \"" + name + "\"");
}

Hypergraph gp_hypergraph(std::uint64_t n, unsigned k) {
    return Hypergraph{n, k, enumerate_gps(n, k)};
}

SearchResult greedy_gp_free(std::uint64_t n, unsigned k) {
    require_inputs(n, k);
    const auto start = Clock::now();

    // Progressions ending at x are m p^(k-1) = x with q < p coprime to p. Index
    // the admissible p by the multiples of p^(k-1) they divide.
    std::vector<std::uint64_t> tops;  // p^(k-1) for p = 2, 3, ...
    for (std::uint64_t p = 2;; ++p) {
        auto t = detail::pow_at_most(p, k - 1, n);
        if (!t) break;
        tops.push_back(*t);
    }
    std::vector<std::uint32_t> offset(n + 2, 0);
    for (std::size_t i = 0; i < tops.size(); ++i)
        for (std::uint64_t x = tops[i]; x <= n; x += tops[i]) ++offset[x + 1];
    std::partial_sum(offset.begin(), offset.end(), offset.begin());
    std::vector<std::uint32_t> fill(offset.begin(), offset.end() - 1);
    std::vector<std::uint32_t> powers_of(offset.back());
    for (std::size_t i = 0; i < tops.size(); ++i)
        for (std::uint64_t x = tops[i]; x <= n; x += tops[i])
            powers_of[fill[x]++] = static_cast<std::uint32_t>(i);

    std::vector<bool> kept(n + 1, false);
    SearchResult r{n, k, Method::Greedy, 0, {}, false, 0, {}};
    for (std::uint64_t x = 1; x <= n; ++x) {
        bool completes = false;
        for (auto idx = offset[x]; idx < offset[x + 1] && !completes; ++idx) {
            const std::uint64_t p = powers_of[idx] + 2;
            for (std::uint64_t q = 1; q < p && !completes; ++q) {
                if (std::gcd(p, q) != 1) continue;
                // Walk down from x: term i-1 = term i * q / p.
                std::uint64_t t = x;
                bool all = true;
                for (unsigned i = 1; i < k && all; ++i) {
                    t = t / p * q;
                    all = kept[t];
                }
                completes = all;
                ++r.nodes_explored;
            }
        }
        if (!completes) {
            kept[x] = true;
            r.witness.push_back(x);
        }
    }
    r.max_size = r.witness.size();
    r.optimal = n - r.max_size == exclusion_lower_bound(n, k);
    r.elapsed = Clock::now() - start;
    verify_witness(r);
    return r;
}

SearchResult max_gp_free_exact(std::uint64_t n, unsigned k, const Budget& budget) {
    require_inputs(n, k);
    const auto start = Clock::now();
    const SearchResult greedy = greedy_gp_free(n, k);

    HittingSetSolver solver(n, k, budget);
    solver.set_incumbent(complement(n, greedy.witness));
    const bool complete = solver.run();

    SearchResult r{n, k, Method::Exact, 0, {}, complete, solver.nodes(), {}};
    r.witness = complement(n, solver.best_removed());
    r.max_size = r.witness.size();
    r.elapsed = Clock::now() - start;
    verify_witness(r);
    return r;
}

std::vector<std::uint64_t> squarefree_set(std::uint64_t n) {
    if (n == 0) throw DomainError("n must be at least 1");
    std::vector<bool> square_divisible(n + 1, false);
    for (std::uint64_t d = 2; d * d <= n; ++d)
        for (std::uint64_t x = d * d; x <= n; x += d * d) square_divisible[x] = true;
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 1; x <= n; ++x)
        if (!square_divisible[x]) out.push_back(x);
    return out;
}

DensityReport density_report(std::uint64_t n, unsigned k, Method method, const Budget& budget) {
    require_inputs(n, k);
    DensityReport report;
    switch (method) {
        case Method::Exact: report.result = max_gp_free_exact(n, k, budget); break;
        case Method::Greedy: report.result = greedy_gp_free(n, k); break;
        case Method::Squarefree: {
            const auto start = Clock::now();
            SearchResult& r = report.result;
            r = SearchResult{n, k, Method::Squarefree, 0, squarefree_set(n), false, 0, {}};
            r.max_size = r.witness.size();
            r.elapsed = Clock::now() - start;
            verify_witness(r);
            break;
        }
    }
    const auto& r = report.result;
    report.density = BigRational::parse(std::to_string(r.max_size) + "/" + std::to_string(n));
    report.improved_bound = improved_bound(k);
    report.exclusion_lower_bound = exclusion_lower_bound(n, k);
    report.certificate_holds = r.max_size <= n && n - r.max_size >= report.exclusion_lower_bound;
    return report;
}

}  // namespace gpf
