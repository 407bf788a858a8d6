#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rankgen/errors.hpp"
#include "rankgen/polynomial.hpp"
#include "rankgen/rational.hpp"

namespace rankgen {

// Formal power series whose coefficients are known exactly through x^order.
// Binary operations truncate to the smaller order; no operation ever claims
// a coefficient it cannot compute exactly.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);
    // Pads with zeros up to order+1 entries; rejects longer inputs.
    TruncatedSeries(int order, std::vector<BigRational> coeffs);

    static TruncatedSeries constant(const BigRational& c, int order);
    static TruncatedSeries monomial(const BigRational& c, int exponent, int order);
    static TruncatedSeries from_polynomial(const Polynomial& p, int order);

    int order() const { return order_; }
    const BigRational& at(int n) const;
    const BigRational& operator[](int n) const { return at(n); }

    // Index of the lowest-order nonzero coefficient, or -1 if identically
    // zero through the truncation order.
    int valuation() const;

    bool is_integral() const;      // every stored coefficient has denominator 1
    BigInt integer_at(int n) const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.order_ == b.order_ && a.coeff_ == b.coeff_;
    }

    std::string to_string(int max_terms = 8) const;

private:
    int order_ = 0;
    std::vector<BigRational> coeff_;  // exactly order_+1 entries
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const BigRational& c, const TruncatedSeries& a);

// q with q*b == a through the common order; throws ZeroConstantTerm if b(0)=0.
TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b);

// s with s*s == a through the order and s(0)=1; throws NonUnitConstantTerm
// if a(0) != 1. Recurrence: s_0 = 1, s_n = (a_n - sum_{i=1}^{n-1} s_i s_{n-i}) / 2.
TruncatedSeries sqrt_unit(const TruncatedSeries& a);

// Multiplication by x^m; the result keeps a's order, so the top m known
// coefficients of a fall outside the claimed window.
TruncatedSeries shift(const TruncatedSeries& a, int m);

// View of the first new_order+1 coefficients; new_order must not exceed a's.
TruncatedSeries truncate(const TruncatedSeries& a, int new_order);

// Coefficientwise equality for all n <= through, which must be within both orders.
bool agrees_through(const TruncatedSeries& a, const TruncatedSeries& b, int through);

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s);

}  // namespace rankgen
