#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "rankgen/errors.hpp"
#include "rankgen/polynomial.hpp"
#include "rankgen/rational.hpp"
#include "rankgen/series.hpp"

using namespace rankgen;

namespace {

TruncatedSeries from_ints(int order, std::vector<long> ints) {
    std::vector<BigRational> v;
    v.reserve(ints.size());
    for (long i : ints) v.emplace_back(i);
    return TruncatedSeries(order, std::move(v));
}

// Deterministic random rationals for the property tests.
struct Rng {
    std::mt19937 gen{20240517};
    BigRational rational(long num_span = 9, long den_span = 9) {
        std::uniform_int_distribution<long> num(-num_span, num_span);
        std::uniform_int_distribution<long> den(1, den_span);
        return BigRational(num(gen), den(gen));
    }
    TruncatedSeries series(int order) {
        std::vector<BigRational> v((size_t)order + 1);
        for (auto& c : v) c = rational();
        return TruncatedSeries(order, std::move(v));
    }
};

}  // namespace

TEST_CASE("rational invariants: lowest terms, positive denominator, zero is 0/1") {
    const BigRational r(BigInt(6), BigInt(-4));
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    const BigRational z;
    CHECK(z.numerator() == 0);
    CHECK(z.denominator() == 1);
    CHECK(z.is_zero());
    CHECK_THROWS_AS(BigRational(BigInt(1), BigInt(0)), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(BigRational(1, 3) + BigRational(1, 6) == BigRational(1, 2));
    CHECK(BigRational(1, 3) * BigRational(3, 7) == BigRational(1, 7));
    CHECK(BigRational(2, 3) / BigRational(4, 3) == BigRational(1, 2));
    CHECK(BigRational(-5, 10).abs() == BigRational(1, 2));
    CHECK(BigRational(7).is_integer());
    CHECK(BigRational(7).to_integer() == 7);
    CHECK_FALSE(BigRational(1, 2).is_integer());
    CHECK_THROWS_AS(BigRational(1, 2).to_integer(), std::domain_error);
    CHECK_THROWS_AS(BigRational(1) / BigRational(0), std::domain_error);
    CHECK(BigRational(1, 3) < BigRational(1, 2));
}

TEST_CASE("rational round-trip under random add/mul") {
    Rng rng;
    for (int i = 0; i < 200; ++i) {
        const BigRational a = rng.rational(99, 99);
        BigRational b = rng.rational(99, 99);
        CHECK((a + b) - b == a);
        if (b.is_zero()) b = BigRational(1);
        CHECK((a * b) / b == a);
    }
}

TEST_CASE("decimal parsing is exact") {
    CHECK(BigRational::parse_decimal("1e-6") == BigRational(1, 1000000));
    CHECK(BigRational::parse_decimal("0.25") == BigRational(1, 4));
    CHECK(BigRational::parse_decimal("-2.5e1") == BigRational(-25));
    CHECK(BigRational::parse_decimal("2.5e3") == BigRational(2500));
    CHECK(BigRational::parse_decimal("42") == BigRational(42));
    CHECK(BigRational::parse_decimal("3/4") == BigRational(3, 4));
    CHECK(BigRational::parse_decimal("-22/7") == BigRational(-22, 7));
    CHECK_THROWS_AS(BigRational::parse_decimal(""), std::invalid_argument);
    CHECK_THROWS_AS(BigRational::parse_decimal("abc"), std::invalid_argument);
    CHECK_THROWS_AS(BigRational::parse_decimal("1.2.3"), std::invalid_argument);
    CHECK_THROWS_AS(BigRational::parse_decimal("1e"), std::invalid_argument);
}

TEST_CASE("fixed decimal rendering rounds half away from zero") {
    CHECK(BigRational(1, 3).decimal_fixed(5) == "0.33333");
    CHECK(BigRational(2, 3).decimal_fixed(5) == "0.66667");
    CHECK(BigRational(-1, 8).decimal_fixed(2) == "-0.13");
    CHECK(BigRational(1, 2).decimal_fixed(0) == "1");
    CHECK(BigRational(-1, 2).decimal_fixed(0) == "-1");
    CHECK(BigRational(0).decimal_fixed(3) == "0.000");
    CHECK(BigRational(12345).decimal_fixed(2) == "12345.00");
}

TEST_CASE("significant-digit rendering") {
    CHECK(BigRational(1, 22).decimal_significant(6) == "0.0454545");
    CHECK(BigRational(162564, 100000).decimal_significant(6) == "1.62564");
    CHECK(BigRational(999999, 1000).decimal_significant(3) == "1000");
    CHECK(BigRational(9999, 10000).decimal_significant(3) == "1.00");
    CHECK(BigRational(123456789).decimal_significant(4) == "123500000");
    CHECK(BigRational(-1, 22).decimal_significant(3) == "-0.0455");
    CHECK(BigRational(0).decimal_significant(4) == "0");
}

TEST_CASE("string round trip") {
    CHECK(BigRational(22, 7).to_string() == "22/7");
    CHECK(BigRational(-3).to_string() == "-3");
    CHECK(BigRational::parse_decimal(BigRational(-355, 113).to_string()) ==
          BigRational(-355, 113));
}

TEST_CASE("polynomial normalization and evaluation") {
    const Polynomial p({BigRational(1), BigRational(0), BigRational(0)});
    CHECK(p.degree() == 0);
    CHECK(Polynomial().is_zero());
    CHECK(Polynomial().degree() == -1);

    // n_2(x) = 1 - 2x - 2x^2 at 1/4
    const Polynomial n2{1, -2, -2};
    CHECK(n2.eval(BigRational(1, 4)) == BigRational(3, 8));
    // d_2(x) = 2 + x at 1/4 equals 16 n_2(1/4)^2
    const Polynomial d2{2, 1};
    CHECK(d2.eval(BigRational(1, 4)) == BigRational(9, 4));
    CHECK(d2.eval(BigRational(1, 4)) ==
          BigRational(16) * n2.eval(BigRational(1, 4)) * n2.eval(BigRational(1, 4)));
    // any polynomial at 0 gives its constant term
    CHECK(n2.eval(BigRational(0)) == BigRational(1));
}

TEST_CASE("polynomial ring operations") {
    const Polynomial a{1, 1};
    CHECK(a * a == Polynomial{1, 2, 1});
    CHECK(a - a == Polynomial());
    CHECK(a.times_x_power(2) == Polynomial{0, 0, 1, 1});
    CHECK((BigRational(2) * a) == Polynomial{2, 2});
    CHECK(Polynomial{0, 1, 2, 3}.derivative() == Polynomial{1, 4, 9});
    CHECK(Polynomial{1, -2, -2}.to_string() == "1 - 2x - 2x^2");
}

TEST_CASE("series addition truncates to the smaller order") {
    const TruncatedSeries a = from_ints(1, {1, 1});   // 1 + x
    const TruncatedSeries b = from_ints(1, {1, -1});  // 1 - x
    const TruncatedSeries sum = a + b;
    CHECK(sum == TruncatedSeries::constant(BigRational(2), 1));

    const TruncatedSeries long5 = from_ints(5, {1, 2, 3, 4, 5, 6});
    const TruncatedSeries short3 = from_ints(3, {1, 1, 1, 1});
    CHECK((long5 + short3).order() == 3);

    // additive identity
    CHECK(long5 + TruncatedSeries(5) == long5);
}

TEST_CASE("series multiplication is Cauchy convolution") {
    const TruncatedSeries a = from_ints(2, {1, 1});  // 1 + x
    CHECK(a * a == from_ints(2, {1, 2, 1}));

    // geometric series times (1-x) collapses to 1
    const TruncatedSeries geo = from_ints(9, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
    const TruncatedSeries one_minus_x = from_ints(9, {1, -1});
    CHECK(geo * one_minus_x == TruncatedSeries::constant(BigRational(1), 9));

    // leaf series times R_1, coefficients through order 3 by hand convolution
    const TruncatedSeries leaves = from_ints(3, {1, 1, 3, 10});
    const TruncatedSeries r1 = from_ints(3, {0, 0, 1, 2});
    CHECK(leaves * r1 == from_ints(3, {0, 0, 1, 3}));
}

TEST_CASE("series division") {
    const TruncatedSeries one = TruncatedSeries::constant(BigRational(1), 8);
    const TruncatedSeries one_minus_x = one - TruncatedSeries::monomial(BigRational(1), 1, 8);
    const TruncatedSeries geo = div(one, one_minus_x);
    for (int n = 0; n <= 8; ++n) CHECK(geo.at(n) == BigRational(1));

    const TruncatedSeries a = from_ints(6, {2, 5, -1, 3, 0, 7, 1});
    CHECK(div(a, a) == TruncatedSeries::constant(BigRational(1), 6));

    CHECK_THROWS_AS(div(one, TruncatedSeries::monomial(BigRational(1), 1, 8)), ZeroConstantTerm);
}

TEST_CASE("series square root") {
    const TruncatedSeries one = TruncatedSeries::constant(BigRational(1), 5);
    CHECK(sqrt_unit(one) == one);

    // sqrt(1-4x): coefficients are -2 Catalan(n-1); frozen by squaring below
    const TruncatedSeries radicand =
        one - TruncatedSeries::monomial(BigRational(4), 1, 5);
    const TruncatedSeries root = sqrt_unit(radicand);
    CHECK(root == from_ints(5, {1, -2, -2, -4, -10, -28}));
    CHECK(root * root == radicand);

    // perfect square
    const TruncatedSeries one_plus_x = from_ints(5, {1, 1});
    CHECK(sqrt_unit(one_plus_x * one_plus_x) == one_plus_x);

    CHECK_THROWS_AS(sqrt_unit(TruncatedSeries::constant(BigRational(2), 3)),
                    NonUnitConstantTerm);
}

TEST_CASE("series shift") {
    CHECK(shift(TruncatedSeries::constant(BigRational(1), 5), 3) ==
          TruncatedSeries::monomial(BigRational(1), 3, 5));
    const TruncatedSeries a = from_ints(5, {0, 0, 1, 2});
    CHECK(shift(a, 0) == a);
    CHECK(shift(a, 1) == from_ints(5, {0, 0, 0, 1, 2}));
    CHECK(shift(a, 9) == TruncatedSeries(5));  // everything pushed past the order
}

TEST_CASE("division by T/(1-T) recovers the non-leaf-root series") {
    // (1 - sqrt(1-4x))/2 is the tree series; x * T/(1-T) counts trees whose
    // root has at least one child, so its coefficients are t(n) for n >= 2.
    const int N = 4;
    const TruncatedSeries one = TruncatedSeries::constant(BigRational(1), N);
    const TruncatedSeries root =
        sqrt_unit(one - TruncatedSeries::monomial(BigRational(4), 1, N));
    const TruncatedSeries t = BigRational(1, 2) * (one - root);
    const TruncatedSeries r1 = shift(div(t, one - t), 1);
    CHECK(r1 == from_ints(4, {0, 0, 1, 2, 5}));
}

TEST_CASE("series accessors and integrality") {
    const TruncatedSeries a = from_ints(3, {1, 2, 3, 4});
    CHECK(a.is_integral());
    CHECK(a.integer_at(3) == 4);
    CHECK(a.valuation() == 0);
    CHECK(TruncatedSeries(4).valuation() == -1);
    CHECK_THROWS_AS(a.at(4), std::out_of_range);

    TruncatedSeries half = TruncatedSeries::constant(BigRational(1, 2), 2);
    CHECK_FALSE(half.is_integral());
    CHECK_THROWS_AS(half.integer_at(0), std::domain_error);

    CHECK_THROWS_AS(TruncatedSeries(2, {BigRational(1), BigRational(1), BigRational(1),
                                        BigRational(1)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(truncate(a, 5), std::invalid_argument);
    CHECK(truncate(a, 1) == from_ints(1, {1, 2}));
}

TEST_CASE("order-zero series behave like scalars") {
    const TruncatedSeries two = TruncatedSeries::constant(BigRational(2), 0);
    const TruncatedSeries three = TruncatedSeries::constant(BigRational(3), 0);
    CHECK((two * three).at(0) == BigRational(6));
    CHECK(div(three, two).at(0) == BigRational(3, 2));
    CHECK(sqrt_unit(TruncatedSeries::constant(BigRational(1), 0)).at(0) == BigRational(1));
    CHECK(shift(two, 1) == TruncatedSeries(0));
    CHECK_THROWS_AS(TruncatedSeries(-1), std::invalid_argument);
}

TEST_CASE("property: division then multiplication round-trips") {
    Rng rng;
    for (int trial = 0; trial < 40; ++trial) {
        const int order = 6 + trial % 8;
        TruncatedSeries a = rng.series(order);
        TruncatedSeries b = rng.series(order);
        while (b.at(0).is_zero()) b = rng.series(order);
        CHECK(div(a, b) * b == a);
    }
}

TEST_CASE("property: sqrt squared recovers the radicand") {
    Rng rng;
    for (int trial = 0; trial < 40; ++trial) {
        const int order = 6 + trial % 8;
        std::vector<BigRational> v((size_t)order + 1);
        v[0] = BigRational(1);
        for (size_t i = 1; i < v.size(); ++i) v[i] = rng.rational();
        const TruncatedSeries a(order, std::move(v));
        const TruncatedSeries s = sqrt_unit(a);
        CHECK(s * s == a);
        CHECK(s.at(0) == BigRational(1));
    }
}

TEST_CASE("property: convolution is commutative and associative") {
    Rng rng;
    for (int trial = 0; trial < 30; ++trial) {
        const int order = 5 + trial % 6;
        const TruncatedSeries a = rng.series(order);
        const TruncatedSeries b = rng.series(order);
        const TruncatedSeries c = rng.series(order);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
}
