#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rankgen/asymptotics.hpp"
#include "rankgen/errors.hpp"
#include "rankgen/genfun.hpp"

using namespace rankgen;
using namespace rankgen::asym;

namespace {

BigRational pow4_rat(int e) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 4, (unsigned long)(e >= 0 ? e : -e));
    return e >= 0 ? BigRational(p) : BigRational(BigInt(1), p);
}

}  // namespace

TEST_CASE("protected fraction limits 1, 1/2, 1/6, 1/22, 1/86") {
    CHECK(protected_fraction_limit(0).exact == BigRational(1));
    CHECK(protected_fraction_limit(1).exact == BigRational(1, 2));
    CHECK(protected_fraction_limit(2).exact == BigRational(1, 6));
    CHECK(protected_fraction_limit(3).exact == BigRational(1, 22));
    CHECK(protected_fraction_limit(4).exact == BigRational(1, 86));
    CHECK(protected_fraction_limit(0).tail_bound == BigRational(0));
    CHECK_THROWS_AS(protected_fraction_limit(-1), UnsupportedIndex);

    // each level keeps about a quarter of the previous one
    for (int k = 5; k <= 12; ++k) {
        const BigRational ratio =
            protected_fraction_limit(k + 1).value / protected_fraction_limit(k).value;
        CHECK((ratio - BigRational(1, 4)).abs() < BigRational(1, 100));
    }
}

TEST_CASE("root protection limits 1, 4/9, 16/121, 64/1849") {
    CHECK(root_protected_limit(1).exact == BigRational(1));
    CHECK(root_protected_limit(2).exact == BigRational(4, 9));
    CHECK(root_protected_limit(3).exact == BigRational(16, 121));
    CHECK(root_protected_limit(4).exact == BigRational(64, 1849));
    CHECK_THROWS_AS(root_protected_limit(0), UnsupportedIndex);

    // k = 10 written out directly
    CHECK(root_protected_limit(10).exact ==
          BigRational(9) / (pow4_rat(-9) + BigRational(4) + pow4_rat(10)));
}

TEST_CASE("rank fraction limits") {
    CHECK(rank_fraction_limit(0).exact == BigRational(1, 2));
    CHECK(rank_fraction_limit(1).exact == BigRational(1, 3));
    CHECK(rank_fraction_limit(1).exact ==
          *protected_fraction_limit(1).exact - *protected_fraction_limit(2).exact);

    // telescoping: p_k - p_{k+1} = rank fraction at k, so partial sums reach 1 - p_{K+1}
    BigRational acc;
    for (int k = 0; k <= 30; ++k) {
        CHECK(rank_fraction_limit(k).value ==
              protected_fraction_limit(k).value - protected_fraction_limit(k + 1).value);
        acc += rank_fraction_limit(k).value;
    }
    CHECK(acc == BigRational(1) - protected_fraction_limit(31).value);
    CHECK(BigRational(1) - acc < BigRational(3) * pow4_rat(-30));
}

TEST_CASE("limits agree with the unsimplified polynomial forms") {
    const BigRational quarter(1, 4);
    for (int k = 2; k <= 30; ++k) {
        const BigRational dk = genfun::d_poly(k).eval(quarter);
        const BigRational nk = genfun::n_poly(k).eval(quarter);
        // r_k limit = (1/4)^{k-2} / d_k(1/4)
        CHECK(root_protected_limit(k).value == pow4_rat(-(k - 2)) / dk);
        // p_k limit = (1/4)^{k-3} n_k(1/4) / (4 d_k(1/4))
        CHECK(protected_fraction_limit(k).value ==
              pow4_rat(-(k - 3)) * nk / (BigRational(4) * dk));
    }
}

TEST_CASE("expected root rank constant at tolerance 1e-5") {
    const BigRational tol(1, 100000);
    const LimitValue v = expected_root_rank_constant(tol);
    CHECK_FALSE(v.exact.has_value());
    CHECK(v.decimal(5) == "1.62297");

    // K = 10 is the smallest term count with 3*4^-K below 1e-5
    const BigRational tail = BigRational(3) * pow4_rat(-10);
    CHECK(tail < tol);
    CHECK(BigRational(3) * pow4_rat(-9) >= tol);
    CHECK(v.tail_bound == BigRational(1, 2) * tail);
    CHECK(v.tail_bound < tol);

    // the enclosure is [partial sum, partial sum + tail]
    BigRational partial;
    for (int k = 1; k <= 10; ++k) partial += root_protected_limit(k).value;
    CHECK(v.value - v.tail_bound == partial);
    CHECK(root_protected_limit(1).value == BigRational(1));  // first term

    // both enclosure endpoints already round to the published constant
    CHECK((v.value - v.tail_bound).decimal_fixed(5) == "1.62297");
    CHECK((v.value + v.tail_bound).decimal_fixed(5) == "1.62297");

    // longer partial sums stay inside the enclosure, monotonically
    BigRational longer = partial;
    for (int k = 11; k <= 20; ++k) {
        const BigRational next = longer + root_protected_limit(k).value;
        CHECK(next > longer);
        CHECK(next <= v.value + v.tail_bound);
        longer = next;
    }
}

TEST_CASE("expected vertex rank constant at tolerance 1e-6") {
    const BigRational tol(1, 1000000);
    const LimitValue v = expected_vertex_rank_constant(tol);
    CHECK(v.decimal(6) == "0.727649");
    CHECK(v.tail_bound == BigRational(1, 2) * pow4_rat(-10));
    CHECK(v.tail_bound < tol);

    BigRational partial;
    for (int k = 1; k <= 10; ++k) partial += protected_fraction_limit(k).value;
    CHECK(v.value - v.tail_bound == partial);

    // first two terms: 1/2 + 1/6 = 2/3
    CHECK(protected_fraction_limit(1).value + protected_fraction_limit(2).value ==
          BigRational(2, 3));

    BigRational longer = partial;
    for (int k = 11; k <= 20; ++k) {
        longer += protected_fraction_limit(k).value;
        CHECK(longer <= v.value + v.tail_bound);
        CHECK(longer >= v.value - v.tail_bound);
    }
    CHECK_THROWS_AS(expected_vertex_rank_constant(BigRational(0)), std::invalid_argument);
}

TEST_CASE("decimal places for tolerance") {
    CHECK(decimal_places_for_tolerance(BigRational(1, 100000)) == 5);
    CHECK(decimal_places_for_tolerance(BigRational(1, 1000000)) == 6);
    CHECK(decimal_places_for_tolerance(BigRational(1)) == 0);
    CHECK(decimal_places_for_tolerance(BigRational(3, 1000)) == 3);
}

TEST_CASE("convergence of p_3 toward 1/22") {
    const auto rows = convergence_report(Family::pk, 3, 50);
    REQUIRE(rows.size() == 50);
    const auto& r50 = rows[49];
    CHECK(r50.n == 50);
    CHECK(r50.exact_ratio == BigRational(BigInt("88972411304864387146864997"),
                                         BigInt("1959816327613912069440802200")));
    // the published fraction itself; the published approx 0.0453986 misprints
    // its last digits (the fraction divides to 0.04539834...)
    CHECK(r50.exact_ratio.decimal_significant(6) == "0.0453983");
    CHECK(r50.limit.exact == BigRational(1, 22));
    CHECK(r50.abs_gap < rows[9].abs_gap);  // |gap(50)| < |gap(10)|

    // same shrinking gap at level 2
    const auto p2 = convergence_report(Family::pk, 2, 50);
    CHECK(p2[49].abs_gap < p2[9].abs_gap);

    // levels 0 and 1 sit at their limits exactly: every vertex is
    // 0-protected, and non-leaves are exactly half of all vertices
    const auto p0 = convergence_report(Family::pk, 0, 20);
    const auto p1 = convergence_report(Family::pk, 1, 20);
    for (const auto& row : p0) CHECK(row.abs_gap == BigRational(0));
    for (size_t i = 1; i < p1.size(); ++i) {  // from n = 2 on
        CHECK(p1[i].exact_ratio == BigRational(1, 2));
        CHECK(p1[i].abs_gap == BigRational(0));
    }
}

TEST_CASE("convergence of the expected ranks at n = 50") {
    const auto er = convergence_report(Family::ER, 0, 50, BigRational(1, 100000));
    CHECK(er[49].exact_ratio == BigRational(BigInt("1874097069430998779470999"),
                                            BigInt("1152833133890536511435766")));
    CHECK(er[49].exact_ratio.decimal_significant(6) == "1.62564");

    const auto et = convergence_report(Family::ET, 0, 50);
    CHECK(et[49].exact_ratio == BigRational(BigInt("4630522930774422812075437903"),
                                            BigInt("6369403064745214225682607150")));
    CHECK(et[49].exact_ratio.decimal_significant(6) == "0.726995");
}

TEST_CASE("rank-k convergence rows are consistent with pk rows") {
    const auto rk0 = convergence_report(Family::rank_k, 0, 12);
    const auto p0 = convergence_report(Family::pk, 0, 12);
    const auto p1 = convergence_report(Family::pk, 1, 12);
    for (int i = 0; i < 12; ++i) {
        CHECK(rk0[(size_t)i].exact_ratio ==
              p0[(size_t)i].exact_ratio - p1[(size_t)i].exact_ratio);
    }
    const auto rk = convergence_report(Family::rk, 1, 8);
    CHECK(rk[7].exact_ratio == BigRational(1));  // every root of a size-8 tree is 1-protected
}

TEST_CASE("complex evaluation of polynomials") {
    const Polynomial d2{2, 1};
    const auto [re, im] = eval_at_complex(d2, BigRational(-4, 15), BigRational(0));
    CHECK(re == BigRational(26, 15));
    CHECK(im == BigRational(0));

    // (1+x) at i: 1 + i
    const auto [re2, im2] = eval_at_complex(Polynomial{1, 1}, BigRational(0), BigRational(1));
    CHECK(re2 == BigRational(1));
    CHECK(im2 == BigRational(1));

    const Polynomial d3{1, 3, 2, 1};
    const auto [re3, im3] = eval_at_complex(d3, BigRational(4, 15), BigRational(0));
    CHECK(re3 == BigRational(6619, 3375));
    CHECK(im3 == BigRational(0));
    CHECK(re3 >= BigRational(131, 3375));
}

TEST_CASE("d_k spot-check on the disk of radius 4/15") {
    const auto rep = disk_spotcheck_dk(30, 100);
    for (const auto& c : rep.checks()) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.pass);
    }
    CHECK(rep.checks().back().detail.find("min |d_k|") != std::string::npos);
}

TEST_CASE("published n=50 report passes") {
    const auto rep = paper50_report();
    for (const auto& c : rep.checks()) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.pass);
    }
    // the raw-vs-printed comparisons must spell out both sets of integers
    bool saw_verbatim = false;
    for (const auto& c : rep.checks()) {
        if (c.detail.find("88972411304864387146864997") != std::string::npos) {
            saw_verbatim = true;
        }
    }
    CHECK(saw_verbatim);
}
