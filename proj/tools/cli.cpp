#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gpf/bounds.hpp"
#include "gpf/construction.hpp"
#include "gpf/errors.hpp"
#include "gpf/io.hpp"
#include "gpf/progressions.hpp"
#include "gpf/search.hpp"

namespace gpf::cli {

namespace {

struct Config {
    std::uint64_t n = 0;
    unsigned k = 3;
    std::string k_range;
    std::string format = "table";
    std::string set;
    std::string method = "exact";
    std::optional<std::uint64_t> budget_nodes;
    std::optional<double> timeout_secs;
    std::string output;
    std::string input;
    bool verify = false;
    bool json = false;
    bool verbose = false;
};

struct Outcome {
    std::string text;
    int code = kOk;
};

// "3..17", "5", or comma-separated mixtures of both.
std::vector<unsigned> parse_k_range(const std::string& spec) {
    std::vector<unsigned> ks;
    std::stringstream items(spec);
    std::string item;
    auto number = [&](const std::string& s) {
        auto values = io::parse_integer_list(s);
        if (values.size() != 1) throw DomainError("bad k value \"" + s + "\"");
        return static_cast<unsigned>(values[0]);
    };
    while (std::getline(items, item, ',')) {
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            ks.push_back(number(item));
            continue;
        }
        const unsigned lo = number(item.substr(0, dots));
        const unsigned hi = number(item.substr(dots + 2));
        if (hi < lo) throw DomainError("empty k range \"" + item + "\"");
        for (unsigned k = lo; k <= hi; ++k) ks.push_back(k);
    }
    if (ks.empty()) throw DomainError("no k values given");
    for (unsigned k : ks) require_length(k);
    return ks;
}

Budget make_budget(const Config& c) {
    Budget b;
    b.max_nodes = c.budget_nodes;
    if (c.timeout_secs)
        b.timeout = std::chrono::milliseconds(static_cast<long long>(*c.timeout_secs * 1000.0));
    return b;
}

Outcome cmd_check(const Config& c) {
    const auto values = io::parse_integer_list(c.set);
    const auto witness = find_gp(values, c.k);
    if (c.format == "json") {
        nlohmann::ordered_json doc{{"schema", io::kSchemaVersion}, {"k", c.k}, {"set", values},
                                   {"gp_free", !witness.has_value()}};
        if (witness)
            doc["witness"] = std::vector<std::uint64_t>(witness->elements().begin(), witness->elements().end());
        else
            doc["witness"] = nullptr;
        return {doc.dump(2) + "\n"};
    }
    if (witness) return {"progression found: " + io::gpsets_to_text(std::span(&*witness, 1))};
    return {"gp-free: yes\n"};
}

Outcome cmd_enumerate(const Config& c) {
    const auto gps = enumerate_gps(c.n, c.k);
    if (c.format == "json") return {io::gpsets_to_json(gps)};
    return {io::gpsets_to_text(gps)};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Outcome cmd_family(const Config& c) {
    if (c.input.empty() && c.n == 0) throw DomainError("family needs --n or --input");
    const Family f = c.input.empty() ? build_family(c.n, c.k) : io::family_from_json(read_file(c.input));
    if (!c.verify) return {c.format == "json" ? io::family_to_json(f) : io::family_certificate(f)};
    const VerificationReport r = verify_family(f);
    const int code = r.ok() ? kOk : kVerificationFailure;
    if (c.format == "json") return {io::verification_to_json(f, r), code};
    std::string text = std::to_string(f.blocks.size()) + " blocks, ";
    if (r.ok()) return {text + "disjoint: yes\n"};
    text += std::string("verification failed: ") + violation_name(r.kind) + ": " + r.message + "\n";
    return {text, code};
}

Outcome cmd_bounds(const Config& c) {
    const auto ks = c.k_range.empty() ? kTableKs : parse_k_range(c.k_range);
    std::vector<BoundReport> reports;
    for (unsigned k : ks) reports.push_back(bound_report(k));
    if (c.format == "json") return {io::bounds_to_json(reports)};
    if (c.format == "csv") return {io::bounds_to_csv(reports)};
    return {io::bounds_to_table(reports)};
}

Outcome cmd_table(const Config& c) {
    const auto rows = render_table(c.k_range.empty() ? kTableKs : parse_k_range(c.k_range));
    if (c.format == "json") return {io::table_to_json(rows)};
    if (c.format == "csv") return {io::table_to_csv(rows)};
    return {format_table(rows)};
}

Outcome cmd_search(const Config& c, bool force_json) {
    const DensityReport d = density_report(c.n, c.k, parse_method(c.method), make_budget(c));
    const int code = d.certificate_holds ? kOk : kVerificationFailure;
    if (force_json || c.format == "json") return {io::search_to_json(d), code};
    return {io::search_to_text(d), code};
}

void add_format(CLI::App* sub, Config& c, std::vector<std::string> allowed) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember(std::move(allowed)));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"Geometric-progression-free sets: block families, density bounds and searches", "gpf"};
    app.require_subcommand(1, 1);
    app.add_option("-o,--output", c.output, "Write results to this file instead of stdout");
    app.add_flag("-v,--verbose", c.verbose, "Report timing on stderr");

    auto positive_n = CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max());
    auto length_k = CLI::Range(3u, std::numeric_limits<unsigned>::max());

    auto* check = app.add_subcommand("check", "Look for a k-term progression inside a set");
    check->add_option("--set", c.set, "Comma-separated positive integers")->required();
    check->add_option("--k", c.k, "Progression length")->check(length_k);
    add_format(check, c, {"table", "json"});

    auto* enumerate = app.add_subcommand("enumerate", "List every k-term progression inside {1..n}");
    enumerate->add_option("--n", c.n)->required()->check(positive_n);
    enumerate->add_option("--k", c.k)->check(length_k);
    add_format(enumerate, c, {"table", "json", "csv"});

    auto* family = app.add_subcommand("family", "Build the disjoint block family for (n, k)");
    family->add_option("--n", c.n)->check(positive_n);
    family->add_option("--k", c.k)->check(length_k);
    family->add_option("--input", c.input, "Read a family JSON document instead of building one");
    family->add_flag("--verify", c.verify, "Verify the family instead of printing it");
    add_format(family, c, {"table", "json"});

    auto* bounds = app.add_subcommand("bounds", "Exact density upper bounds");
    bounds->add_option("--k", c.k_range, "k value or inclusive range such as 3..17");
    add_format(bounds, c, {"table", "json", "csv"});

    auto* table = app.add_subcommand("table", "Improved bound to five decimals for the standard k values");
    table->add_option("--k", c.k_range, "k value or inclusive range");
    add_format(table, c, {"table", "json", "csv"});

    auto add_search_flags = [&](CLI::App* sub) {
        sub->add_option("--n", c.n)->required()->check(positive_n);
        sub->add_option("--k", c.k)->check(length_k);
        sub->add_option("--method", c.method)->check(CLI::IsMember({"exact", "greedy", "squarefree"}));
        sub->add_option("--budget-nodes", c.budget_nodes, "Node limit for the exact search");
        sub->add_option("--timeout-secs", c.timeout_secs, "Wall-clock limit for the exact search");
        add_format(sub, c, {"table", "json"});
    };
    auto* search = app.add_subcommand("search", "Largest k-GP-free subset of {1..n}");
    add_search_flags(search);
    search->add_flag("--json", c.json, "Same as --format json");
    auto* report = app.add_subcommand("report", "Density of a GP-free subset against the bounds");
    add_search_flags(report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << "error: " << e.what() << "\n\n" << app.help();
        return kDomainError;
    }

    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
        if (check->parsed()) outcome = cmd_check(c);
        else if (enumerate->parsed()) outcome = cmd_enumerate(c);
        else if (family->parsed()) outcome = cmd_family(c);
        else if (bounds->parsed()) outcome = cmd_bounds(c);
        else if (table->parsed()) outcome = cmd_table(c);
        else if (search->parsed()) outcome = cmd_search(c, c.json);
        else if (report->parsed()) outcome = cmd_search(c, false);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    } catch (const OverflowError& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    } catch (const std::logic_error& e) {
        err << "internal check failed: " << e.what() << '\n';
        return kVerificationFailure;
    }

    if (c.output.empty()) {
        out << outcome.text;
    } else {
        std::ofstream file(c.output, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << c.output << " for writing\n";
            return kDomainError;
        }
        file << outcome.text;
    }
    if (c.verbose) {
        const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
        err << "elapsed: " << ms.count() << " ms\n";
    }
    return outcome.code;
}

}  // namespace gpf::cli
