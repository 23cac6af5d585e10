#include "pointfree/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace pointfree {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) {
        throw std::invalid_argument("Rational: zero denominator");
    }
    // canonical form: positive denominator, reduced by the backend
    if (den.sign() < 0) {
        v_ = boost::multiprecision::cpp_rational(-num, -den);
    } else {
        v_ = boost::multiprecision::cpp_rational(num, den);
    }
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::invalid_argument("Rational: division by zero");
    }
    v_ /= o.v_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational Rational::parse(std::string_view text) {
    auto strip = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = strip(text);
    if (text.empty()) {
        throw std::invalid_argument("Rational: empty string");
    }
    auto parse_int = [&](std::string_view s) -> BigInt {
        s = strip(s);
        bool neg = false;
        if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
            neg = s.front() == '-';
            s.remove_prefix(1);
        }
        if (s.empty()) {
            throw std::invalid_argument("Rational: missing digits");
        }
        BigInt value = 0;
        for (char c : s) {
            if (c < '0' || c > '9') {
                throw std::invalid_argument("Rational: invalid character in number");
            }
            value = value * 10 + (c - '0');
        }
        return neg ? BigInt(-value) : value;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    return Rational(num, den);
}

std::string Rational::str() const {
    std::string s = num().str();
    if (den() != 1) {
        s += "/";
        s += den().str();
    }
    return s;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }

const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

BigInt floor(const Rational& r) {
    BigInt q = r.num() / r.den();
    if (r.sign() < 0 && q * r.den() != r.num()) {
        --q;
    }
    return q;
}

BigInt ceil(const Rational& r) {
    BigInt q = r.num() / r.den();
    if (r.sign() > 0 && q * r.den() != r.num()) {
        ++q;
    }
    return q;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace pointfree
