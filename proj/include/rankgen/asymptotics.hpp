#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rankgen/polynomial.hpp"
#include "rankgen/rational.hpp"
#include "rankgen/report.hpp"

namespace rankgen::asym {

// A limiting constant. Closed-form rational limits carry `exact` and a zero
// tail bound. For the infinite expected-rank sums, `value` is the center of
// the certified enclosure [value - tail_bound, value + tail_bound], which
// contains the true limit and every longer partial sum.
struct LimitValue {
    std::optional<BigRational> exact;
    BigRational value;
    BigRational tail_bound;

    std::string decimal(int places) const { return value.decimal_fixed(places); }

    static LimitValue from_exact(BigRational v) {
        return {v, v, BigRational(0)};
    }
};

// lim t_k(n)/v(n) = 3/(4^k + 2); k = 0 gives 1 since every vertex is 0-protected.
LimitValue protected_fraction_limit(int k);

// lim r_k(n)/t(n) = 9/(4^{1-k} + 4 + 4^k), k >= 1.
LimitValue root_protected_limit(int k);

// Limiting fraction of vertices of exact rank k: 9/(10 + 4^{1-k} + 4^{1+k}).
LimitValue rank_fraction_limit(int k);

// sum_{k>=1} 9/(4^{1-k} + 4 + 4^k), the limiting expected root rank. K is the
// smallest term count whose geometric tail bound 3*4^{-K} is below the tolerance.
LimitValue expected_root_rank_constant(const BigRational& tolerance);

// sum_{k>=1} 3/(4^k + 2), the limiting expected vertex rank; tail bound 4^{-K}.
LimitValue expected_vertex_rank_constant(const BigRational& tolerance);

// Smallest p with 10^-p <= tolerance; the natural rendering width.
int decimal_places_for_tolerance(const BigRational& tolerance);

enum class Family { pk, rk, rank_k, ER, ET };

struct ConvergenceRow {
    int n = 0;
    BigRational exact_ratio;  // from generating-function coefficients, never floats
    LimitValue limit;
    BigRational abs_gap;      // |exact_ratio - limit.value|
};

// Exact finite-n ratios against the limit, for n = 1..n_max:
//   pk:     t_k(n) / v(n)        rk:  r_k(n) / t(n)
//   rank_k: (t_k(n) - t_{k+1}(n)) / v(n)
//   ER:     r(n) / t(n)          ET:  vertex rank sum / v(n)
std::vector<ConvergenceRow> convergence_report(Family family, int k, int n_max,
                                               const BigRational& tolerance = BigRational(1,
                                                                                          1000000));

// Exact evaluation of p at the complex rational point re + im*i; returns
// (real, imaginary) parts.
std::pair<BigRational, BigRational> eval_at_complex(const Polynomial& p, const BigRational& re,
                                                    const BigRational& im);

// Evaluates |d_k| at deterministic rational points of the closed disk of
// radius 4/15 (including +-4/15) for k <= k_max and reports the minimum
// modulus found. A falsification spot-check, not a proof of nonvanishing.
VerificationReport disk_spotcheck_dk(int k_max, int samples);

// The three exact n=50 ratio checks against the published values, reporting
// raw coefficients verbatim alongside the printed (reduced) integers.
VerificationReport paper50_report();

}  // namespace rankgen::asym
