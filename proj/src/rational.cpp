#include "nlosc/rational.hpp"

#include <charconv>
#include <cmath>
#include <limits>

namespace nlosc {

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        const u128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v); }

constexpr i128 kMax64 = std::numeric_limits<std::int64_t>::max();
constexpr i128 kMin64 = std::numeric_limits<std::int64_t>::min();

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    std::int64_t v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc::result_out_of_range)
        throw RationalOverflow("rational literal out of range: '" + std::string(whole) + "'");
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw std::invalid_argument("malformed rational literal: '" + std::string(whole) + "'");
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
}

}  // namespace

Rational Rational::normalized(i128 num, i128 den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const u128 g = gcd128(abs128(num), static_cast<u128>(den));
    if (g > 1) {
        num /= static_cast<i128>(g);
        den /= static_cast<i128>(g);
    }
    if (num > kMax64 || num < kMin64 || den > kMax64) throw RationalOverflow("rational result exceeds 64 bits");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
}

Rational::Rational(std::int64_t value) : num_(value), den_(1) {}

Rational::Rational(std::int64_t num, std::int64_t den) { *this = normalized(num, den); }

Rational Rational::parse(std::string_view text) {
    const std::string_view s = trim(text);
    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        const std::int64_t p = parse_int(trim(s.substr(0, slash)), text);
        const std::int64_t q = parse_int(trim(s.substr(slash + 1)), text);
        if (q == 0) throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
        return Rational(p, q);
    }
    return Rational(parse_int(s, text));
}

double Rational::to_double() const noexcept {
    constexpr std::int64_t exact = std::int64_t{1} << 53;
    if (num_ > -exact && num_ < exact && den_ < exact)
        return static_cast<double>(num_) / static_cast<double>(den_);
    return static_cast<double>(static_cast<long double>(num_) / static_cast<long double>(den_));
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const { return normalized(-static_cast<i128>(num_), den_); }

Rational& Rational::operator+=(const Rational& o) {
    *this = normalized(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                       static_cast<i128>(den_) * o.den_);
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    *this = normalized(static_cast<i128>(num_) * o.den_ - static_cast<i128>(o.num_) * den_,
                       static_cast<i128>(den_) * o.den_);
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    *this = normalized(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    *this = normalized(static_cast<i128>(num_) * o.den_, static_cast<i128>(den_) * o.num_);
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const i128 lhs = static_cast<i128>(a.num_) * b.den_;
    const i128 rhs = static_cast<i128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace nlosc
