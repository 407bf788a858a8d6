#include "rankgen/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace rankgen {

BigInt pow10(unsigned long e) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, e);
    return p;
}

BigRational::BigRational(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

BigRational BigRational::abs() const {
    BigRational r;
    r.value_ = ::abs(value_);
    return r;
}

BigInt BigRational::to_integer() const {
    if (!is_integer()) {
        throw std::domain_error("rational " + to_string() + " is not an integer");
    }
    return numerator();
}

BigRational operator+(const BigRational& a, const BigRational& b) {
    BigRational r;
    r.value_ = a.value_ + b.value_;
    return r;
}

BigRational operator-(const BigRational& a, const BigRational& b) {
    BigRational r;
    r.value_ = a.value_ - b.value_;
    return r;
}

BigRational operator-(const BigRational& a) {
    BigRational r;
    r.value_ = -a.value_;
    return r;
}

BigRational operator*(const BigRational& a, const BigRational& b) {
    BigRational r;
    r.value_ = a.value_ * b.value_;
    return r;
}

BigRational operator/(const BigRational& a, const BigRational& b) {
    if (b.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    BigRational r;
    r.value_ = a.value_ / b.value_;
    return r;
}

BigRational& BigRational::operator+=(const BigRational& o) {
    value_ += o.value_;
    return *this;
}

BigRational& BigRational::operator-=(const BigRational& o) {
    value_ -= o.value_;
    return *this;
}

BigRational& BigRational::operator*=(const BigRational& o) {
    value_ *= o.value_;
    return *this;
}

std::string BigRational::to_string() const {
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string BigRational::decimal_fixed(int places) const {
    if (places < 0) {
        throw std::invalid_argument("negative decimal places");
    }
    BigInt num = numerator();
    const bool neg = sgn(num) < 0;
    if (neg) num = -num;
    num *= pow10((unsigned long)places);
    const BigInt den = denominator();
    // round half away from zero: floor((2|n| + d) / 2d)
    BigInt q = (2 * num + den) / (2 * den);
    std::string digits = q.get_str();
    if ((int)digits.size() <= places) {
        digits.insert(0, (size_t)(places + 1 - (int)digits.size()), '0');
    }
    std::string out;
    if (neg && sgn(q) != 0) out += '-';
    out.append(digits, 0, digits.size() - (size_t)places);
    if (places > 0) {
        out += '.';
        out.append(digits, digits.size() - (size_t)places, (size_t)places);
    }
    return out;
}

int BigRational::floor_log10_abs() const {
    if (is_zero()) {
        throw std::domain_error("log10 of zero");
    }
    BigInt a = numerator();
    if (sgn(a) < 0) a = -a;
    BigInt b = denominator();
    long e = (long)mpz_sizeinbase(a.get_mpz_t(), 10) - (long)mpz_sizeinbase(b.get_mpz_t(), 10);
    auto pow_le_value = [&](long ex) {  // 10^ex <= a/b ?
        if (ex >= 0) return b * pow10((unsigned long)ex) <= a;
        return b <= a * pow10((unsigned long)(-ex));
    };
    while (!pow_le_value(e)) --e;
    while (pow_le_value(e + 1)) ++e;
    return (int)e;
}

std::string BigRational::decimal_significant(int digits) const {
    if (digits < 1) {
        throw std::invalid_argument("need at least one significant digit");
    }
    if (is_zero()) return "0";
    const int e = floor_log10_abs();
    long p = (long)digits - 1 - e;
    // q = round(|v| * 10^p), half away from zero
    BigInt num = numerator();
    if (sgn(num) < 0) num = -num;
    BigInt den = denominator();
    if (p >= 0) {
        num *= pow10((unsigned long)p);
    } else {
        den *= pow10((unsigned long)(-p));
    }
    BigInt q = (2 * num + den) / (2 * den);
    if (q >= pow10((unsigned long)digits)) {  // rounding carried into an extra digit
        q /= 10;
        --p;
    }
    std::string ds = q.get_str();
    std::string out = sign() < 0 ? "-" : "";
    if (p <= 0) {
        out += ds;
        out.append((size_t)(-p), '0');
    } else {
        if ((long)ds.size() <= p) {
            ds.insert(0, (size_t)(p + 1 - (long)ds.size()), '0');
        }
        out.append(ds, 0, ds.size() - (size_t)p);
        out += '.';
        out.append(ds, ds.size() - (size_t)p, (size_t)p);
    }
    return out;
}

BigRational BigRational::parse_decimal(std::string_view text) {
    const auto fail = [&]() -> BigRational {
        throw std::invalid_argument("cannot parse rational from '" + std::string(text) + "'");
    };
    if (text.empty()) return fail();

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        try {
            BigInt num(std::string(text.substr(0, slash)), 10);
            BigInt den(std::string(text.substr(slash + 1)), 10);
            return BigRational(num, den);
        } catch (const std::invalid_argument&) {
            return fail();
        }
    }

    size_t i = 0;
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
        neg = text[i] == '-';
        ++i;
    }
    std::string mantissa;
    long frac_len = 0;
    bool saw_digit = false;
    while (i < text.size() && std::isdigit((unsigned char)text[i])) {
        mantissa += text[i++];
        saw_digit = true;
    }
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && std::isdigit((unsigned char)text[i])) {
            mantissa += text[i++];
            ++frac_len;
            saw_digit = true;
        }
    }
    if (!saw_digit) return fail();
    long exp10 = 0;
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool exp_neg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            exp_neg = text[i] == '-';
            ++i;
        }
        if (i >= text.size()) return fail();
        long v = 0;
        while (i < text.size() && std::isdigit((unsigned char)text[i])) {
            v = v * 10 + (text[i++] - '0');
            if (v > 1000000) return fail();  // absurd exponent
        }
        exp10 = exp_neg ? -v : v;
    }
    if (i != text.size()) return fail();

    BigInt m(mantissa.empty() ? "0" : mantissa, 10);
    if (neg) m = -m;
    const long net = exp10 - frac_len;
    if (net >= 0) {
        return BigRational(BigInt(m * pow10((unsigned long)net)));
    }
    return BigRational(m, pow10((unsigned long)(-net)));
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) {
    return os << r.to_string();
}

}  // namespace rankgen
