#ifndef POINTFREE_RATIONAL_HPP
#define POINTFREE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace pointfree {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always canonical: positive denominator,
/// gcd(|num|, den) = 1. Backed by arbitrary-precision integers; there is
/// no floating point anywhere on this path.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}                // NOLINT: implicit for literals
    Rational(long long n) : v_(n) {}          // NOLINT
    Rational(const BigInt& n) : v_(n) {}      // NOLINT
    Rational(const BigInt& num, const BigInt& den);
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Parses "p/q" or "p" (optionally signed). Throws std::invalid_argument
    /// on malformed input or zero denominator.
    static Rational parse(std::string_view text);

    BigInt num() const { return boost::multiprecision::numerator(v_); }
    BigInt den() const { return boost::multiprecision::denominator(v_); }

    /// Canonical text form: "p/q", or "p" when the denominator is 1.
    std::string str() const;

    bool is_zero() const { return v_.is_zero(); }
    int sign() const { return v_.sign(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    boost::multiprecision::cpp_rational v_;
};

Rational abs(const Rational& r);
const Rational& min(const Rational& a, const Rational& b);
const Rational& max(const Rational& a, const Rational& b);

/// Largest integer <= r.
BigInt floor(const Rational& r);
/// Smallest integer >= r.
BigInt ceil(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace pointfree

#endif
