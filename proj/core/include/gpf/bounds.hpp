#pragma once

// Density upper bounds for sets of positive integers with no k-term
// geometric progression, evaluated exactly:
//
//   older ratio-2 bound    1 - 1/(2^k - 1)
//   two-family bound       1 - 1/2^k - (2/5)(1/5^(k-1) - 1/6^(k-1))
//   three-family bound     1 - 1/(2^k - 1) - (2/5)(1/5^(k-1) - 1/6^(k-1))
//                                          - (4/15)(1/7^(k-1) - 1/10^(k-1))

#include <string>
#include <vector>

#include "gpf/big_rational.hpp"

namespace gpf {

BigRational riddell_bound(unsigned k);
BigRational brown_gordon_bound(unsigned k);
BigRational improved_bound(unsigned k);

/// Density of the disjoint block family: 1/(2^k-1) + (2/5)(...) + (4/15)(...).
BigRational exclusion_constant(unsigned k);

/// Five decimals, round half away from zero. A value below 1 that would round to
/// 1.00000 is printed with as many digits as needed to stay below 1, plus " (<1)".
std::string render_bound(const BigRational& value);

struct BoundReport {
    unsigned k = 3;
    BigRational riddell;
    BigRational brown_gordon;
    BigRational improved;
    std::string riddell_rendered;
    std::string brown_gordon_rendered;
    std::string improved_rendered;
};

BoundReport bound_report(unsigned k);

inline const std::vector<unsigned> kTableKs = {3, 4, 5, 6, 7, 10, 17};

struct TableRow {
    unsigned k;
    BigRational bound;
    std::string rendered;
};

std::vector<TableRow> render_table(const std::vector<unsigned>& ks = kTableKs);

/// Plain-text table, one "k  bound" row per line.
std::string format_table(const std::vector<TableRow>& rows);

}  // namespace gpf
