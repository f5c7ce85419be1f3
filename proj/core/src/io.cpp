#include "gpf/io.hpp"

#include <charconv>
#include <sstream>

#include <json.hpp>

#include "gpf/errors.hpp"

namespace gpf::io {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string join(std::span<const std::uint64_t> values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json rational_json(const BigRational& r, const std::string& rendered) {
    return ordered_json{{"numerator", r.numerator()},
                        {"denominator", r.denominator()},
                        {"decimal", rendered}};
}

GpSet gpset_from_values(std::vector<std::uint64_t> values) {
    return GpSet::from_elements(std::move(values));
}

}  // namespace

std::vector<std::uint64_t> parse_integer_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::size_t i = 0;
    auto skip_space = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_space();
    if (i == text.size()) return out;
    for (;;) {
        skip_space();
        std::uint64_t v = 0;
        const char* first = text.data() + i;
        const char* last = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr == first)
            throw DomainError("expected a nonnegative integer in \"" + text + "\"");
        out.push_back(v);
        i = static_cast<std::size_t>(ptr - text.data());
        skip_space();
        if (i == text.size()) break;
        if (text[i] != ',') throw DomainError("expected ',' in \"" + text + "\"");
        ++i;
    }
    return out;
}

std::string gpsets_to_text(std::span<const GpSet> sets) {
    std::string out;
    for (const auto& s : sets) out += join(s.elements()) + "\n";
    return out;
}

std::string gpsets_to_json(std::span<const GpSet> sets) {
    json arr = json::array();
    for (const auto& s : sets) arr.push_back(std::vector<std::uint64_t>(s.elements().begin(), s.elements().end()));
    return arr.dump() + "\n";
}

std::vector<GpSet> gpsets_from_text(const std::string& text) {
    std::vector<GpSet> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(gpset_from_values(parse_integer_list(line)));
    }
    return out;
}

std::vector<GpSet> gpsets_from_json(const std::string& text) {
    std::vector<GpSet> out;
    try {
        for (const auto& item : json::parse(text)) out.push_back(gpset_from_values(item.get<std::vector<std::uint64_t>>()));
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed progression list: ") + e.what());
    }
    return out;
}

std::string family_to_json(const Family& f) {
    ordered_json blocks = ordered_json::array();
    for (std::size_t i = 0; i < f.blocks.size(); ++i) {
        const Block b = f.blocks[i];
        ordered_json params;
        switch (b.params.label) {
            case BlockLabel::X: params = {{"ell", b.params.ell}, {"a", b.params.base}}; break;
            case BlockLabel::Y: params = {{"b", b.params.base}}; break;
            case BlockLabel::Z: params = {{"c", b.params.base}}; break;
        }
        blocks.push_back({{"label", std::string(1, label_char(b.params.label))},
                          {"params", params},
                          {"elements", std::vector<std::uint64_t>(b.elements.begin(), b.elements.end())}});
    }
    ordered_json doc{{"schema", kSchemaVersion}, {"n", f.n}, {"k", f.k}, {"L", f.L}, {"blocks", blocks}};
    return dump(doc);
}

Family family_from_json(const std::string& text) {
    try {
        const json doc = json::parse(text);
        if (doc.at("schema").get<int>() != kSchemaVersion) throw DomainError("unsupported family schema");
        Family f;
        f.n = doc.at("n").get<std::uint64_t>();
        f.k = doc.at("k").get<unsigned>();
        f.L = doc.at("L").get<unsigned>();
        f.blocks = BlockList(f.k);
        for (const auto& b : doc.at("blocks")) {
            const std::string label = b.at("label").get<std::string>();
            const json& p = b.at("params");
            BlockParams params;
            if (label == "X") {
                params = {BlockLabel::X, p.at("ell").get<unsigned>(), p.at("a").get<std::uint64_t>()};
            } else if (label == "Y") {
                params = {BlockLabel::Y, 0, p.at("b").get<std::uint64_t>()};
            } else if (label == "Z") {
                params = {BlockLabel::Z, 0, p.at("c").get<std::uint64_t>()};
            } else {
                throw DomainError("unknown block label \"" + label + "\"");
            }
            f.blocks.push_back(params, b.at("elements").get<std::vector<std::uint64_t>>());
        }
        return f;
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed family document: ") + e.what());
    }
}

std::string family_certificate(const Family& f) {
    std::string out;
    for (std::size_t i = 0; i < f.blocks.size(); ++i) {
        const Block b = f.blocks[i];
        switch (b.params.label) {
            case BlockLabel::X:
                out += "X \xE2\x84\x93=" + std::to_string(b.params.ell) + " a=" + std::to_string(b.params.base);
                break;
            case BlockLabel::Y: out += "Y b=" + std::to_string(b.params.base); break;
            case BlockLabel::Z: out += "Z c=" + std::to_string(b.params.base); break;
        }
        out += " : " + join(b.elements) + "\n";
    }
    return out;
}

std::string verification_to_json(const Family& f, const VerificationReport& r) {
    ordered_json doc{{"schema", kSchemaVersion},
                     {"n", f.n},
                     {"k", f.k},
                     {"L", f.L},
                     {"blocks", f.blocks.size()},
                     {"ok", r.ok()},
                     {"violation", violation_name(r.kind)}};
    if (r.block) doc["block"] = *r.block;
    if (r.other_block) doc["other_block"] = *r.other_block;
    if (r.element) doc["element"] = *r.element;
    if (!r.message.empty()) doc["message"] = r.message;
    return dump(doc);
}

std::string bounds_to_table(std::span<const BoundReport> reports) {
    std::ostringstream out;
    out << "k\triddell\tbrown_gordon\timproved\n";
    for (const auto& r : reports)
        out << r.k << '\t' << r.riddell_rendered << '\t' << r.brown_gordon_rendered << '\t'
            << r.improved_rendered << '\n';
    return out.str();
}

std::string bounds_to_csv(std::span<const BoundReport> reports) {
    std::ostringstream out;
    out << "k,riddell,riddell_exact,brown_gordon,brown_gordon_exact,improved,improved_exact\n";
    for (const auto& r : reports)
        out << r.k << ',' << r.riddell_rendered << ',' << r.riddell.str() << ','
            << r.brown_gordon_rendered << ',' << r.brown_gordon.str() << ',' << r.improved_rendered
            << ',' << r.improved.str() << '\n';
    return out.str();
}

std::string bounds_to_json(std::span<const BoundReport> reports) {
    ordered_json rows = ordered_json::array();
    for (const auto& r : reports)
        rows.push_back({{"k", r.k},
                        {"riddell", rational_json(r.riddell, r.riddell_rendered)},
                        {"brown_gordon", rational_json(r.brown_gordon, r.brown_gordon_rendered)},
                        {"improved", rational_json(r.improved, r.improved_rendered)}});
    return dump(ordered_json{{"schema", kSchemaVersion}, {"bounds", rows}});
}

std::string table_to_json(std::span<const TableRow> rows) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) arr.push_back({{"k", r.k}, {"bound", rational_json(r.bound, r.rendered)}});
    return dump(ordered_json{{"schema", kSchemaVersion}, {"table", arr}});
}

std::string table_to_csv(std::span<const TableRow> rows) {
    std::string out = "k,bound,exact\n";
    for (const auto& r : rows) out += std::to_string(r.k) + "," + r.rendered + "," + r.bound.str() + "\n";
    return out;
}

std::string search_to_json(const DensityReport& d) {
    const SearchResult& r = d.result;
    ordered_json doc{{"schema", kSchemaVersion},
                     {"n", r.n},
                     {"k", r.k},
                     {"method", method_name(r.method)},
                     {"max_size", r.max_size},
                     {"optimal", r.optimal},
                     {"nodes_explored", r.nodes_explored},
                     {"density", rational_json(d.density, d.density.to_fixed(6))},
                     {"improved_bound", rational_json(d.improved_bound, render_bound(d.improved_bound))},
                     {"exclusion_lower_bound", d.exclusion_lower_bound},
                     {"certificate_holds", d.certificate_holds},
                     {"witness", r.witness}};
    return dump(doc);
}

std::string search_to_text(const DensityReport& d) {
    const SearchResult& r = d.result;
    std::ostringstream out;
    out << "n = " << r.n << ", k = " << r.k << ", method = " << method_name(r.method) << '\n'
        << "size: " << r.max_size << (r.optimal ? " (optimal)" : " (not proven optimal)") << '\n'
        << "density: " << d.density.to_fixed(6) << " (" << d.density.str() << ")\n"
        << "improved bound: " << render_bound(d.improved_bound) << '\n'
        << "certified exclusions: " << d.exclusion_lower_bound << ", actual: " << (r.n - r.max_size)
        << (d.certificate_holds ? " (consistent)" : " (INCONSISTENT)") << '\n'
        << "nodes: " << r.nodes_explored << '\n';
    return out.str();
}

}  // namespace gpf::io
