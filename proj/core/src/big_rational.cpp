#include "gpf/big_rational.hpp"

#include <utility>

#include "gpf/errors.hpp"

namespace gpf {

namespace {

mpz_class from_int(std::int64_t v) {
    // mpz_class has no portable int64 constructor; go through the decimal form.
    return mpz_class(std::to_string(v));
}

}  // namespace

BigRational::BigRational(std::int64_t value) : value_(from_int(value)) {}

BigRational::BigRational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("zero denominator");
    value_ = mpq_class(from_int(num), from_int(den));
    value_.canonicalize();
}

BigRational::BigRational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

BigRational BigRational::parse(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    auto valid = [](const std::string& s) {
        std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (!valid(num) || !valid(den) || den[0] == '-')
        throw DomainError("malformed rational \"" + text + "\"");
    mpz_class d(den);
    if (d == 0) throw DomainError("zero denominator in \"" + text + "\"");
    return BigRational(mpq_class(mpz_class(num), d));
}

BigRational BigRational::power(std::int64_t base, unsigned exp) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), from_int(base).get_mpz_t(), exp);
    return BigRational(mpq_class(r));
}

std::string BigRational::numerator() const { return value_.get_num().get_str(); }
std::string BigRational::denominator() const { return value_.get_den().get_str(); }

std::string BigRational::str() const {
    if (value_.get_den() == 1) return numerator();
    return numerator() + "/" + denominator();
}

double BigRational::to_double() const { return value_.get_d(); }
int BigRational::sign() const { return sgn(value_); }

std::string BigRational::to_fixed(unsigned digits) const {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    const mpz_class num = abs(value_.get_num());
    const mpz_class& den = value_.get_den();
    // round(|x| * 10^d) with halves going up: floor((2 |num| 10^d + den) / (2 den)).
    mpz_class scaled = (2 * num * scale + den) / (2 * den);

    std::string digits_str = scaled.get_str();
    if (digits_str.size() <= digits) digits_str.insert(0, digits + 1 - digits_str.size(), '0');
    std::string out = sgn(value_) < 0 && scaled != 0 ? "-" : "";
    out += digits_str.substr(0, digits_str.size() - digits);
    if (digits > 0) out += "." + digits_str.substr(digits_str.size() - digits);
    return out;
}

BigRational BigRational::operator-() const { return BigRational(mpq_class(-value_)); }

BigRational& BigRational::operator+=(const BigRational& o) {
    value_ += o.value_;
    return *this;
}
BigRational& BigRational::operator-=(const BigRational& o) {
    value_ -= o.value_;
    return *this;
}
BigRational& BigRational::operator*=(const BigRational& o) {
    value_ *= o.value_;
    return *this;
}
BigRational& BigRational::operator/=(const BigRational& o) {
    if (sgn(o.value_) == 0) throw DomainError("division by zero");
    value_ /= o.value_;
    return *this;
}

bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }

std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

}  // namespace gpf
