#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rankgen/polynomial.hpp"
#include "rankgen/report.hpp"
#include "rankgen/series.hpp"

namespace rankgen::genfun {

// Catalan numbers c_0..c_max via the convolution recurrence
// c_0 = 1, c_{n+1} = sum_i c_i c_{n-i}. Deliberately independent of the
// square-root construction below so the two can cross-check each other.
std::vector<BigInt> catalan_numbers(int max_index);

// T(x) = (1 - sqrt(1-4x)) / 2: [x^n] counts rooted plane trees on n
// vertices, the (n-1)st Catalan number.
TruncatedSeries catalan_series(int order);

// V(x) = x / sqrt(1-4x): [x^n] counts all vertices over all trees on n
// vertices, the central binomial coefficient C(2n-2, n-1).
TruncatedSeries vertex_series(int order);

// L(x) = (1 + 1/sqrt(1-4x)) / 2: [x^n] = l(n) counts the leaves over all
// trees of size n+1.
TruncatedSeries leaf_series(int order);

// Trees counted by size and leaf count: entry n is a polynomial in y whose
// y^m coefficient is the number of trees on n vertices with m leaves.
class BivariatePoly {
public:
    explicit BivariatePoly(int order);
    int order() const { return order_; }
    const Polynomial& at(int n) const;
    BigRational coefficient(int n, int m) const { return at(n)[m]; }
    void set_at(int n, Polynomial p);
    friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) {
        return a.order_ == b.order_ && a.coeff_ == b.coeff_;
    }

private:
    int order_ = 0;
    std::vector<Polynomial> coeff_;
};

BivariatePoly biv_add(const BivariatePoly& a, const BivariatePoly& b);
BivariatePoly biv_sub(const BivariatePoly& a, const BivariatePoly& b);
BivariatePoly biv_mul(const BivariatePoly& a, const BivariatePoly& b);
// q with q*b == a through the x-order; b's x^0 coefficient must be the
// constant polynomial 1.
BivariatePoly biv_div_unit(const BivariatePoly& a, const BivariatePoly& b);
BivariatePoly biv_shift_x(const BivariatePoly& a, int m);

// The unique zero-constant-term solution of T = xy + x * T/(1-T), computed
// by fixed-point iteration; round m pins down x-order m, so order+1 rounds
// suffice and termination is structural.
BivariatePoly bivariate_series(int order);

// d/dy of the bivariate series at y=1, divided by x; equals leaf_series(order-1)
// coefficientwise. Requires order >= 1.
TruncatedSeries leaf_series_from_bivariate(int order);

// n_k(x) = 1 - 2x - 2x^2 - ... - 2x^k, k >= 1.
Polynomial n_poly(int k);

// d_2 = 2 + x and, for k >= 3,
// d_k(x) = sum_{i=0}^{k-3} (i+1) x^i + sum_{i=k-2}^{2k-3} (2k-2-i) x^i,
// the unique family satisfying d_{k+1} = d_k - x^{k-2} n_k + x^{2k-1} and
// n_k^2 - (1-4x) = 4x^3 d_k. Throws UnsupportedIndex for k < 2.
Polynomial d_poly(int k);

enum class RkMethod { closed, recursive };

// R_k(x): [x^n] counts trees on n vertices whose root is k-protected.
//   closed:    R_1 = (1 - 2x - sqrt(1-4x))/2 and, for k >= 2,
//              R_k = x^{k-2} (n_k - sqrt(1-4x)) / (2 d_k).
//   recursive: R_k = x * R_{k-1} / (1 - R_{k-1}) iterated from R_1.
// The two must agree coefficientwise; tests and the verify suite hold them to it.
TruncatedSeries root_protected_series(int k, int order, RkMethod method = RkMethod::closed);

// T_k = L * R_k: [x^n] counts k-protected vertices over all trees on n vertices.
TruncatedSeries protected_vertex_series(int k, int order);

// [x^n] = sum of root ranks over all trees on n vertices; equals
// sum_{k=1}^{order-1} R_k since no root of a size-n tree is n-protected.
TruncatedSeries root_rank_sum_series(int order);

// [x^n] = sum of the ranks of every vertex of every tree on n vertices.
TruncatedSeries vertex_rank_sum_series(int order);

// Exact polynomial identity d_{k+1} = d_k - x^{k-2} n_k + x^{2k-1} for
// 2 <= k <= k_max.
VerificationReport check_d_recurrence(int k_max);

// Exact polynomial identity n_k^2 - (1-4x) = 4x^3 d_k for 2 <= k <= k_max,
// plus its rational corollary d_k(1/4) = 16 n_k(1/4)^2.
VerificationReport check_nd_identity(int k_max);

// Closed-form vs recursive R_k, coefficientwise, for 1 <= k <= k_max.
VerificationReport check_rk_equivalence(int k_max, int order);

// Equality entry naming the lowest differing exponent on failure.
CheckResult compare_polynomials(std::string name, const Polynomial& got, const Polynomial& want);

struct SeriesFamilyId {
    enum class Tag { T, V, L, R, Tk, RootRankSum, VertexRankSum };
    Tag tag = Tag::T;
    int k = 0;  // >= 1 when tag is R or Tk
};

// Family name as used on the CLI: T, V, L, R, Tk, RootRankSum, VertexRankSum.
std::optional<SeriesFamilyId> parse_family(std::string_view name, int k);
TruncatedSeries make_series(const SeriesFamilyId& id, int order);

}  // namespace rankgen::genfun
