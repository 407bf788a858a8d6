#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace rankgen {

using BigInt = mpz_class;

// Exact rational scalar; the coefficient field for every polynomial and
// series in this project. Always in lowest terms, denominator > 0, zero is
// 0/1. All operations are exact; nothing ever rounds except the explicit
// decimal renderers.
class BigRational {
public:
    BigRational() : value_(0) {}
    BigRational(long n) : value_((signed long)n) {}  // NOLINT: implicit on purpose
    explicit BigRational(const BigInt& n) : value_(n) {}
    BigRational(const BigInt& num, const BigInt& den);
    BigRational(long num, long den) : BigRational(BigInt(num), BigInt(den)) {}

    // Accepts "123", "-4.25", "1e-6", "2.5e3" and "p/q"; exact, no floats.
    static BigRational parse_decimal(std::string_view text);

    BigInt numerator() const { return BigInt(value_.get_num()); }
    BigInt denominator() const { return BigInt(value_.get_den()); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }
    BigRational abs() const;
    BigInt to_integer() const;  // requires is_integer()

    friend BigRational operator+(const BigRational& a, const BigRational& b);
    friend BigRational operator-(const BigRational& a, const BigRational& b);
    friend BigRational operator-(const BigRational& a);
    friend BigRational operator*(const BigRational& a, const BigRational& b);
    friend BigRational operator/(const BigRational& a, const BigRational& b);
    BigRational& operator+=(const BigRational& o);
    BigRational& operator-=(const BigRational& o);
    BigRational& operator*=(const BigRational& o);

    friend bool operator==(const BigRational& a, const BigRational& b) {
        return a.value_ == b.value_;
    }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return !(a == b); }
    friend bool operator<(const BigRational& a, const BigRational& b) {
        return a.value_ < b.value_;
    }
    friend bool operator<=(const BigRational& a, const BigRational& b) {
        return a.value_ <= b.value_;
    }
    friend bool operator>(const BigRational& a, const BigRational& b) { return b < a; }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return b <= a; }

    // "p" when integral, otherwise "p/q"; round-trips through parse_decimal.
    std::string to_string() const;

    // Fixed-point rendering with `places` digits after the point, rounded
    // half away from zero. Exact integer arithmetic throughout.
    std::string decimal_fixed(int places) const;

    // Plain-decimal rendering with `digits` significant digits (no exponent
    // notation; values here are all of moderate magnitude).
    std::string decimal_significant(int digits) const;

    // Largest e with 10^e <= |value|; requires a nonzero value.
    int floor_log10_abs() const;

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& r);

// 10^e for e >= 0.
BigInt pow10(unsigned long e);

}  // namespace rankgen
