#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nlosc {

class RationalOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Exact rational number with 64-bit numerator and denominator.
///
/// Always normalized: den() > 0 and gcd(|num()|, den()) == 1. Intermediate
/// products are formed in 128 bits; a result that does not fit back into 64
/// bits after reduction throws RationalOverflow rather than wrapping.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);

    /// Accepts "p/q", "p", with optional leading sign and surrounding spaces.
    static Rational parse(std::string_view text);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    /// Correctly rounded when |num| and den are both below 2^53, which covers
    /// every coefficient this library uses.
    double to_double() const noexcept;
    std::string to_string() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    __extension__ typedef __int128 wide;
    static Rational normalized(wide num, wide den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline double to_real(const Rational& r) { return r.to_double(); }

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace nlosc
