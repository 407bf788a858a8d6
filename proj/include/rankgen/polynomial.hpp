#pragma once

#include <iosfwd>
#include <initializer_list>
#include <string>
#include <vector>

#include "rankgen/rational.hpp"

namespace rankgen {

// Dense univariate polynomial over BigRational. Normalized so the stored
// leading coefficient is nonzero; the zero polynomial stores nothing.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<BigRational> coeffs);
    Polynomial(std::initializer_list<long> ints);

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return Polynomial({1}); }
    static Polynomial monomial(const BigRational& c, int exponent);

    bool is_zero() const { return coeff_.empty(); }
    int degree() const { return (int)coeff_.size() - 1; }  // -1 for zero
    const BigRational& operator[](int i) const;            // 0 beyond the degree

    BigRational eval(const BigRational& x) const;  // Horner
    Polynomial times_x_power(int m) const;
    Polynomial derivative() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const BigRational& c, const Polynomial& p);
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeff_ == b.coeff_;
    }

    std::string to_string() const;  // e.g. "1 - 2x - 2x^2"

private:
    std::vector<BigRational> coeff_;
    void normalize();
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace rankgen
