#include "gpf/bounds.hpp"

#include <sstream>

#include "gpf/errors.hpp"
#include "gpf/progressions.hpp"

namespace gpf {

namespace {

BigRational inverse_power(std::int64_t base, unsigned exp) {
    return BigRational(1) / BigRational::power(base, exp);
}

// 1 / (2^k - 1)
BigRational dyadic_term(unsigned k) {
    return BigRational(1) / (BigRational::power(2, k) - BigRational(1));
}

// (2/5)(1/5^(k-1) - 1/6^(k-1))
BigRational ratio_5_3_term(unsigned k) {
    return BigRational(2, 5) * (inverse_power(5, k - 1) - inverse_power(6, k - 1));
}

// (4/15)(1/7^(k-1) - 1/10^(k-1))
BigRational ratio_7_5_term(unsigned k) {
    return BigRational(4, 15) * (inverse_power(7, k - 1) - inverse_power(10, k - 1));
}

}  // namespace

BigRational riddell_bound(unsigned k) {
    require_length(k);
    return BigRational(1) - dyadic_term(k);
}

BigRational brown_gordon_bound(unsigned k) {
    require_length(k);
    return BigRational(1) - inverse_power(2, k) - ratio_5_3_term(k);
}

BigRational improved_bound(unsigned k) {
    require_length(k);
    return BigRational(1) - dyadic_term(k) - ratio_5_3_term(k) - ratio_7_5_term(k);
}

BigRational exclusion_constant(unsigned k) {
    require_length(k);
    return dyadic_term(k) + ratio_5_3_term(k) + ratio_7_5_term(k);
}

std::string render_bound(const BigRational& value) {
    constexpr unsigned kDigits = 5;
    std::string s = value.to_fixed(kDigits);
    if (s == "1.00000" && value < BigRational(1)) {
        unsigned digits = kDigits;
        do {
            s = value.to_fixed(++digits);
        } while (s.front() == '1');
        s += " (<1)";
    }
    return s;
}

BoundReport bound_report(unsigned k) {
    BoundReport r;
    r.k = k;
    r.riddell = riddell_bound(k);
    r.brown_gordon = brown_gordon_bound(k);
    r.improved = improved_bound(k);
    r.riddell_rendered = render_bound(r.riddell);
    r.brown_gordon_rendered = render_bound(r.brown_gordon);
    r.improved_rendered = render_bound(r.improved);
    return r;
}

std::vector<TableRow> render_table(const std::vector<unsigned>& ks) {
    std::vector<TableRow> rows;
    rows.reserve(ks.size());
    for (unsigned k : ks) {
        BigRational b = improved_bound(k);
        std::string rendered = render_bound(b);
        rows.push_back({k, std::move(b), std::move(rendered)});
    }
    return rows;
}

std::string format_table(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    out << "k\td_U(A_k) <=\n";
    for (const auto& row : rows) out << row.k << '\t' << row.rendered << '\n';
    return out.str();
}

}  // namespace gpf
