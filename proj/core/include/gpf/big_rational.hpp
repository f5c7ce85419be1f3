#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace gpf {

/// Exact rational number, always in lowest terms with a positive denominator.
class BigRational {
public:
    BigRational() = default;
    BigRational(std::int64_t value);  // NOLINT: implicit from integers is intended
    BigRational(std::int64_t num, std::int64_t den);

    /// Parses "a" or "a/b" in base 10. Throws DomainError on malformed input or b = 0.
    static BigRational parse(const std::string& text);

    /// base^exp exactly.
    static BigRational power(std::int64_t base, unsigned exp);

    std::string numerator() const;
    std::string denominator() const;
    /// "a/b", or "a" when the denominator is 1.
    std::string str() const;
    double to_double() const;
    int sign() const;

    /// Fixed-point rendering with `digits` fractional digits, round half away from zero.
    std::string to_fixed(unsigned digits) const;

    BigRational operator-() const;
    BigRational& operator+=(const BigRational& o);
    BigRational& operator-=(const BigRational& o);
    BigRational& operator*=(const BigRational& o);
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b);
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b);

private:
    explicit BigRational(mpq_class v);
    mpq_class value_;
};

}  // namespace gpf
