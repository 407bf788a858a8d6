#include "rankgen/polynomial.hpp"

#include <ostream>
#include <stdexcept>

namespace rankgen {

namespace {
const BigRational kZero;
}

Polynomial::Polynomial(std::vector<BigRational> coeffs) : coeff_(std::move(coeffs)) {
    normalize();
}

Polynomial::Polynomial(std::initializer_list<long> ints) {
    coeff_.reserve(ints.size());
    for (long v : ints) coeff_.emplace_back(v);
    normalize();
}

void Polynomial::normalize() {
    while (!coeff_.empty() && coeff_.back().is_zero()) coeff_.pop_back();
}

Polynomial Polynomial::monomial(const BigRational& c, int exponent) {
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    if (c.is_zero()) return Polynomial();
    std::vector<BigRational> v((size_t)exponent + 1);
    v.back() = c;
    return Polynomial(std::move(v));
}

const BigRational& Polynomial::operator[](int i) const {
    if (i < 0 || i >= (int)coeff_.size()) return kZero;
    return coeff_[(size_t)i];
}

BigRational Polynomial::eval(const BigRational& x) const {
    BigRational acc;
    for (size_t i = coeff_.size(); i-- > 0;) {
        acc = acc * x + coeff_[i];
    }
    return acc;
}

Polynomial Polynomial::times_x_power(int m) const {
    if (m < 0) throw std::invalid_argument("negative shift");
    if (is_zero()) return Polynomial();
    std::vector<BigRational> v((size_t)m, BigRational());
    v.insert(v.end(), coeff_.begin(), coeff_.end());
    return Polynomial(std::move(v));
}

Polynomial Polynomial::derivative() const {
    if (coeff_.size() <= 1) return Polynomial();
    std::vector<BigRational> v(coeff_.size() - 1);
    for (size_t i = 1; i < coeff_.size(); ++i) {
        v[i - 1] = BigRational((long)i) * coeff_[i];
    }
    return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<BigRational> v(std::max(a.coeff_.size(), b.coeff_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = a[(int)i] + b[(int)i];
    return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<BigRational> v(std::max(a.coeff_.size(), b.coeff_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = a[(int)i] - b[(int)i];
    return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a) {
    std::vector<BigRational> v(a.coeff_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = -a.coeff_[i];
    return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<BigRational> v(a.coeff_.size() + b.coeff_.size() - 1);
    for (size_t i = 0; i < a.coeff_.size(); ++i) {
        if (a.coeff_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeff_.size(); ++j) {
            v[i + j] += a.coeff_[i] * b.coeff_[j];
        }
    }
    return Polynomial(std::move(v));
}

Polynomial operator*(const BigRational& c, const Polynomial& p) {
    std::vector<BigRational> v(p.coeff_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = c * p.coeff_[i];
    return Polynomial(std::move(v));
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < coeff_.size(); ++i) {
        const BigRational& c = coeff_[i];
        if (c.is_zero()) continue;
        const BigRational a = c.abs();
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        const bool unit = a == BigRational(1);
        if (i == 0 || !unit) out += a.to_string();
        if (i >= 1) {
            out += "x";
            if (i >= 2) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << p.to_string();
}

}  // namespace rankgen
