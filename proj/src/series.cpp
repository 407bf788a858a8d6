#include "rankgen/series.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace rankgen {

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("negative series order");
    coeff_.resize((size_t)order + 1);
}

TruncatedSeries::TruncatedSeries(int order, std::vector<BigRational> coeffs)
    : order_(order), coeff_(std::move(coeffs)) {
    if (order < 0) throw std::invalid_argument("negative series order");
    if ((int)coeff_.size() > order + 1) {
        throw std::invalid_argument("coefficient list longer than order allows");
    }
    coeff_.resize((size_t)order + 1);
}

TruncatedSeries TruncatedSeries::constant(const BigRational& c, int order) {
    TruncatedSeries s(order);
    s.coeff_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(const BigRational& c, int exponent, int order) {
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    TruncatedSeries s(order);
    if (exponent <= order) s.coeff_[(size_t)exponent] = c;
    return s;
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, int order) {
    TruncatedSeries s(order);
    for (int i = 0; i <= std::min(order, p.degree()); ++i) s.coeff_[(size_t)i] = p[i];
    return s;
}

const BigRational& TruncatedSeries::at(int n) const {
    if (n < 0 || n > order_) {
        throw std::out_of_range("series coefficient " + std::to_string(n) +
                                " beyond truncation order " + std::to_string(order_));
    }
    return coeff_[(size_t)n];
}

int TruncatedSeries::valuation() const {
    for (int n = 0; n <= order_; ++n) {
        if (!coeff_[(size_t)n].is_zero()) return n;
    }
    return -1;
}

bool TruncatedSeries::is_integral() const {
    for (const auto& c : coeff_) {
        if (!c.is_integer()) return false;
    }
    return true;
}

BigInt TruncatedSeries::integer_at(int n) const {
    return at(n).to_integer();
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    std::vector<BigRational> v((size_t)n + 1);
    for (int i = 0; i <= n; ++i) v[(size_t)i] = a.at(i) + b.at(i);
    return TruncatedSeries(n, std::move(v));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<BigRational> v((size_t)n + 1);
    for (int i = 0; i <= n; ++i) v[(size_t)i] = a.at(i) - b.at(i);
    return TruncatedSeries(n, std::move(v));
}

TruncatedSeries operator-(const TruncatedSeries& a) {
    std::vector<BigRational> v((size_t)a.order() + 1);
    for (int i = 0; i <= a.order(); ++i) v[(size_t)i] = -a.at(i);
    return TruncatedSeries(a.order(), std::move(v));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<BigRational> v((size_t)n + 1);
    for (int i = 0; i <= n; ++i) {
        if (a.at(i).is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b.at(j).is_zero()) continue;
            v[(size_t)(i + j)] += a.at(i) * b.at(j);
        }
    }
    return TruncatedSeries(n, std::move(v));
}

TruncatedSeries operator*(const BigRational& c, const TruncatedSeries& a) {
    std::vector<BigRational> v((size_t)a.order() + 1);
    for (int i = 0; i <= a.order(); ++i) v[(size_t)i] = c * a.at(i);
    return TruncatedSeries(a.order(), std::move(v));
}

TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (b.at(0).is_zero()) throw ZeroConstantTerm();
    const int n = std::min(a.order(), b.order());
    std::vector<BigRational> q((size_t)n + 1);
    for (int i = 0; i <= n; ++i) {
        BigRational acc = a.at(i);
        for (int j = 1; j <= i; ++j) {
            if (b.at(j).is_zero()) continue;
            acc -= b.at(j) * q[(size_t)(i - j)];
        }
        q[(size_t)i] = acc / b.at(0);
    }
    return TruncatedSeries(n, std::move(q));
}

TruncatedSeries sqrt_unit(const TruncatedSeries& a) {
    if (a.at(0) != BigRational(1)) throw NonUnitConstantTerm();
    const int n = a.order();
    std::vector<BigRational> s((size_t)n + 1);
    s[0] = BigRational(1);
    const BigRational half(1, 2);
    for (int i = 1; i <= n; ++i) {
        BigRational acc = a.at(i);
        for (int j = 1; j < i; ++j) {
            acc -= s[(size_t)j] * s[(size_t)(i - j)];
        }
        s[(size_t)i] = half * acc;
    }
    return TruncatedSeries(n, std::move(s));
}

TruncatedSeries shift(const TruncatedSeries& a, int m) {
    if (m < 0) throw std::invalid_argument("negative shift");
    const int n = a.order();
    std::vector<BigRational> v((size_t)n + 1);
    for (int i = m; i <= n; ++i) v[(size_t)i] = a.at(i - m);
    return TruncatedSeries(n, std::move(v));
}

TruncatedSeries truncate(const TruncatedSeries& a, int new_order) {
    if (new_order > a.order()) {
        throw std::invalid_argument("cannot extend a series by truncation");
    }
    std::vector<BigRational> v((size_t)new_order + 1);
    for (int i = 0; i <= new_order; ++i) v[(size_t)i] = a.at(i);
    return TruncatedSeries(new_order, std::move(v));
}

bool agrees_through(const TruncatedSeries& a, const TruncatedSeries& b, int through) {
    if (through > a.order() || through > b.order()) {
        throw std::invalid_argument("comparison window beyond a truncation order");
    }
    for (int i = 0; i <= through; ++i) {
        if (a.at(i) != b.at(i)) return false;
    }
    return true;
}

std::string TruncatedSeries::to_string(int max_terms) const {
    std::string out;
    int shown = 0;
    for (int i = 0; i <= order_ && shown < max_terms; ++i) {
        const BigRational& c = coeff_[(size_t)i];
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
        ++shown;
    }
    if (out.empty()) out = "0";
    out += " + O(x^" + std::to_string(order_ + 1) + ")";
    return out;
}

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) {
    return os << s.to_string();
}

}  // namespace rankgen
