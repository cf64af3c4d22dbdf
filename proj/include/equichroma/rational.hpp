#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

namespace equichroma {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number. Kept reduced with a positive denominator at all
// times, so equality is plain member comparison and printed values are
// always in lowest terms.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {}
    Rational(BigInt numerator, BigInt denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        reduce();
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        const BigInt lhs = num_ * o.den_;
        const BigInt rhs = o.num_ * den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // "7/3" in lowest terms, or the bare integer when the denominator is 1.
    std::string to_string() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

    // Decimal rendering with round-half-up at the last kept digit.
    // Presentation only; all comparisons elsewhere are exact.
    std::string to_decimal(int significant = 6) const;

private:
    void reduce() {
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        const BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

inline std::string Rational::to_decimal(int significant) const {
    if (significant < 1) throw std::invalid_argument("to_decimal: need at least one digit");
    if (num_ == 0) return "0";

    const bool negative = num_ < 0;
    const BigInt a = negative ? BigInt(-num_) : num_;
    const BigInt& d = den_;

    auto pow10 = [](int e) {
        BigInt p = 1;
        for (int i = 0; i < e; ++i) p *= 10;
        return p;
    };

    // Exponent e such that 10^e <= a/d < 10^(e+1).
    int e = static_cast<int>(a.str().size()) - static_cast<int>(d.str().size());
    auto value_below = [&](int exp) {
        // a/d < 10^exp ?
        return exp >= 0 ? a < d * pow10(exp) : a * pow10(-exp) < d;
    };
    while (value_below(e)) --e;
    while (!value_below(e + 1)) ++e;

    // First `significant` digits, rounded half-up.
    const int shift = significant - 1 - e;
    BigInt q, r, divisor;
    if (shift >= 0) {
        divisor = d;
        q = a * pow10(shift) / divisor;
        r = a * pow10(shift) % divisor;
    } else {
        divisor = d * pow10(-shift);
        q = a / divisor;
        r = a % divisor;
    }
    if (2 * r >= divisor) ++q;
    if (q == pow10(significant)) {
        q /= 10;
        ++e;
    }
    std::string digits = q.str();

    std::string out;
    if (e >= significant - 1 && e <= significant + 6) {
        out = digits + std::string(static_cast<std::size_t>(e + 1 - significant), '0');
    } else if (e >= 0 && e < significant - 1) {
        out = digits.substr(0, static_cast<std::size_t>(e + 1)) + "." +
              digits.substr(static_cast<std::size_t>(e + 1));
    } else if (e < 0 && e >= -5) {
        out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
    } else {
        out = digits.substr(0, 1);
        if (significant > 1) out += "." + digits.substr(1);
        out += "e" + std::to_string(e);
    }
    return negative ? "-" + out : out;
}

} // namespace equichroma
