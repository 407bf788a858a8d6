#include "rankgen/genfun.hpp"

#include <algorithm>
#include <stdexcept>

#include "rankgen/errors.hpp"

namespace rankgen::genfun {

namespace {

TruncatedSeries one_minus_4x(int order) {
    TruncatedSeries s = TruncatedSeries::constant(BigRational(1), order);
    return s - TruncatedSeries::monomial(BigRational(4), 1, order);
}

TruncatedSeries sqrt_1m4x(int order) { return sqrt_unit(one_minus_4x(order)); }

const BigRational kHalf(1, 2);

// R_1 = (1 - 2x - sqrt(1-4x)) / 2, sharing a precomputed sqrt.
TruncatedSeries r1_from(const TruncatedSeries& root, int order) {
    TruncatedSeries num = TruncatedSeries::constant(BigRational(1), order) -
                          TruncatedSeries::monomial(BigRational(2), 1, order) - root;
    return kHalf * num;
}

// Closed form for k >= 2, sharing a precomputed sqrt.
TruncatedSeries rk_closed_from(const TruncatedSeries& root, int k, int order) {
    TruncatedSeries num = TruncatedSeries::from_polynomial(n_poly(k), order) - root;
    TruncatedSeries den = TruncatedSeries::from_polynomial(BigRational(2) * d_poly(k), order);
    return shift(div(num, den), k - 2);
}

}  // namespace

std::vector<BigInt> catalan_numbers(int max_index) {
    if (max_index < 0) throw std::invalid_argument("negative Catalan index");
    std::vector<BigInt> c((size_t)max_index + 1);
    c[0] = 1;
    for (int n = 0; n < max_index; ++n) {
        BigInt acc = 0;
        for (int i = 0; i <= n; ++i) acc += c[(size_t)i] * c[(size_t)(n - i)];
        c[(size_t)n + 1] = acc;
    }
    return c;
}

TruncatedSeries catalan_series(int order) {
    TruncatedSeries s = sqrt_1m4x(order);
    return kHalf * (TruncatedSeries::constant(BigRational(1), order) - s);
}

TruncatedSeries vertex_series(int order) {
    TruncatedSeries inv = div(TruncatedSeries::constant(BigRational(1), order), sqrt_1m4x(order));
    return shift(inv, 1);
}

TruncatedSeries leaf_series(int order) {
    TruncatedSeries inv = div(TruncatedSeries::constant(BigRational(1), order), sqrt_1m4x(order));
    return kHalf * (TruncatedSeries::constant(BigRational(1), order) + inv);
}

BivariatePoly::BivariatePoly(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("negative series order");
    coeff_.resize((size_t)order + 1);
}

const Polynomial& BivariatePoly::at(int n) const {
    if (n < 0 || n > order_) {
        throw std::out_of_range("bivariate coefficient beyond truncation order");
    }
    return coeff_[(size_t)n];
}

void BivariatePoly::set_at(int n, Polynomial p) {
    if (n < 0 || n > order_) {
        throw std::out_of_range("bivariate coefficient beyond truncation order");
    }
    coeff_[(size_t)n] = std::move(p);
}

BivariatePoly biv_add(const BivariatePoly& a, const BivariatePoly& b) {
    const int n = std::min(a.order(), b.order());
    BivariatePoly r(n);
    for (int i = 0; i <= n; ++i) r.set_at(i, a.at(i) + b.at(i));
    return r;
}

BivariatePoly biv_sub(const BivariatePoly& a, const BivariatePoly& b) {
    const int n = std::min(a.order(), b.order());
    BivariatePoly r(n);
    for (int i = 0; i <= n; ++i) r.set_at(i, a.at(i) - b.at(i));
    return r;
}

BivariatePoly biv_mul(const BivariatePoly& a, const BivariatePoly& b) {
    const int n = std::min(a.order(), b.order());
    BivariatePoly r(n);
    for (int i = 0; i <= n; ++i) {
        Polynomial acc;
        for (int j = 0; j <= i; ++j) acc = acc + a.at(j) * b.at(i - j);
        r.set_at(i, std::move(acc));
    }
    return r;
}

BivariatePoly biv_div_unit(const BivariatePoly& a, const BivariatePoly& b) {
    if (!(b.at(0) == Polynomial::one())) {
        throw ZeroConstantTerm();
    }
    const int n = std::min(a.order(), b.order());
    BivariatePoly q(n);
    for (int i = 0; i <= n; ++i) {
        Polynomial acc = a.at(i);
        for (int j = 1; j <= i; ++j) acc = acc - b.at(j) * q.at(i - j);
        q.set_at(i, std::move(acc));
    }
    return q;
}

BivariatePoly biv_shift_x(const BivariatePoly& a, int m) {
    if (m < 0) throw std::invalid_argument("negative shift");
    BivariatePoly r(a.order());
    for (int i = m; i <= a.order(); ++i) r.set_at(i, a.at(i - m));
    return r;
}

BivariatePoly bivariate_series(int order) {
    BivariatePoly xy(order);
    if (order >= 1) xy.set_at(1, Polynomial::monomial(BigRational(1), 1));

    BivariatePoly one(order);
    one.set_at(0, Polynomial::one());

    BivariatePoly t(order);  // zero start
    for (int round = 0; round <= order; ++round) {
        // T has zero x^0 coefficient throughout, so 1 - T stays unit.
        BivariatePoly quotient = biv_div_unit(t, biv_sub(one, t));
        t = biv_add(xy, biv_shift_x(quotient, 1));
    }
    return t;
}

TruncatedSeries leaf_series_from_bivariate(int order) {
    if (order < 1) throw std::invalid_argument("bivariate leaf extraction needs order >= 1");
    BivariatePoly t = bivariate_series(order);
    // sum_m m * t_{n,m} = leaves over trees of size n = l(n-1); divide by x.
    std::vector<BigRational> v((size_t)order);
    for (int n = 1; n <= order; ++n) {
        v[(size_t)(n - 1)] = t.at(n).derivative().eval(BigRational(1));
    }
    return TruncatedSeries(order - 1, std::move(v));
}

Polynomial n_poly(int k) {
    if (k < 1) throw UnsupportedIndex("n_k is defined for k >= 1");
    std::vector<BigRational> c((size_t)k + 1, BigRational(-2));
    c[0] = BigRational(1);
    return Polynomial(std::move(c));
}

Polynomial d_poly(int k) {
    if (k < 2) throw UnsupportedIndex("d_k is defined for k >= 2");
    if (k == 2) return Polynomial{2, 1};
    std::vector<BigRational> c((size_t)(2 * k - 2));
    for (int i = 0; i <= k - 3; ++i) c[(size_t)i] = BigRational(i + 1);
    for (int i = k - 2; i <= 2 * k - 3; ++i) c[(size_t)i] = BigRational(2 * k - 2 - i);
    return Polynomial(std::move(c));
}

TruncatedSeries root_protected_series(int k, int order, RkMethod method) {
    if (k < 1) throw UnsupportedIndex("R_k is defined for k >= 1");
    const TruncatedSeries root = sqrt_1m4x(order);
    if (method == RkMethod::closed) {
        if (k == 1) return r1_from(root, order);
        return rk_closed_from(root, k, order);
    }
    TruncatedSeries r = r1_from(root, order);
    const TruncatedSeries one = TruncatedSeries::constant(BigRational(1), order);
    for (int i = 2; i <= k; ++i) {
        r = shift(div(r, one - r), 1);
    }
    return r;
}

TruncatedSeries protected_vertex_series(int k, int order) {
    return leaf_series(order) * root_protected_series(k, order);
}

namespace {

// sum_{k=1}^{order-1} R_k with one shared sqrt; valid because no root of a
// size-n tree is n-protected.
TruncatedSeries rk_sum(int order) {
    TruncatedSeries acc(order);
    if (order < 2) return acc;
    const TruncatedSeries root = sqrt_1m4x(order);
    acc = acc + r1_from(root, order);
    for (int k = 2; k <= order - 1; ++k) {
        acc = acc + rk_closed_from(root, k, order);
    }
    return acc;
}

}  // namespace

TruncatedSeries root_rank_sum_series(int order) { return rk_sum(order); }

TruncatedSeries vertex_rank_sum_series(int order) {
    // L * sum_k R_k == sum_k (L * R_k) exactly.
    return leaf_series(order) * rk_sum(order);
}

CheckResult compare_polynomials(std::string name, const Polynomial& got, const Polynomial& want) {
    if (got == want) {
        return {std::move(name), true, {}};
    }
    const int deg = std::max(got.degree(), want.degree());
    for (int i = 0; i <= deg; ++i) {
        if (got[i] != want[i]) {
            return {std::move(name), false,
                    "coefficient of x^" + std::to_string(i) + ": got " + got[i].to_string() +
                        ", want " + want[i].to_string()};
        }
    }
    return {std::move(name), false, "degree mismatch"};
}

VerificationReport check_d_recurrence(int k_max) {
    if (k_max < 2) throw std::invalid_argument("d-recurrence check needs k_max >= 2");
    VerificationReport rep;
    for (int k = 2; k <= k_max; ++k) {
        Polynomial rhs = d_poly(k) - n_poly(k).times_x_power(k - 2) +
                         Polynomial::monomial(BigRational(1), 2 * k - 1);
        rep.add(compare_polynomials("d_{k+1} = d_k - x^{k-2} n_k + x^{2k-1} at k=" +
                                        std::to_string(k),
                                    d_poly(k + 1), rhs));
    }
    return rep;
}

VerificationReport check_nd_identity(int k_max) {
    if (k_max < 2) throw std::invalid_argument("nd-identity check needs k_max >= 2");
    VerificationReport rep;
    const Polynomial one_m_4x{1, -4};
    const BigRational quarter(1, 4);
    for (int k = 2; k <= k_max; ++k) {
        const Polynomial nk = n_poly(k);
        const Polynomial dk = d_poly(k);
        Polynomial lhs = nk * nk - one_m_4x;
        Polynomial rhs = (BigRational(4) * dk).times_x_power(3);
        rep.add(compare_polynomials("n_k^2 - (1-4x) = 4x^3 d_k at k=" + std::to_string(k), lhs,
                                    rhs));

        const BigRational nv = nk.eval(quarter);
        const BigRational dv = dk.eval(quarter);
        const bool ok = dv == BigRational(16) * nv * nv;
        rep.add("d_k(1/4) = 16 n_k(1/4)^2 at k=" + std::to_string(k), ok,
                ok ? "" : "d_k(1/4)=" + dv.to_string() + ", 16 n_k^2(1/4)=" +
                              (BigRational(16) * nv * nv).to_string());
    }
    return rep;
}

VerificationReport check_rk_equivalence(int k_max, int order) {
    if (k_max < 1) throw std::invalid_argument("R_k equivalence check needs k_max >= 1");
    VerificationReport rep;
    const TruncatedSeries root = sqrt_1m4x(order);
    const TruncatedSeries one = TruncatedSeries::constant(BigRational(1), order);
    TruncatedSeries recursive = r1_from(root, order);
    for (int k = 1; k <= k_max; ++k) {
        if (k >= 2) recursive = shift(div(recursive, one - recursive), 1);
        const TruncatedSeries closed =
            k == 1 ? r1_from(root, order) : rk_closed_from(root, k, order);
        std::string name = "closed R_k == recursive R_k at k=" + std::to_string(k) +
                           ", order " + std::to_string(order);
        if (closed == recursive) {
            rep.add(std::move(name), true);
            continue;
        }
        std::string detail = "mismatch";
        for (int n = 0; n <= order; ++n) {
            if (closed.at(n) != recursive.at(n)) {
                detail = "coefficient of x^" + std::to_string(n) + ": closed " +
                         closed.at(n).to_string() + ", recursive " + recursive.at(n).to_string();
                break;
            }
        }
        rep.add(std::move(name), false, std::move(detail));
    }
    return rep;
}

std::optional<SeriesFamilyId> parse_family(std::string_view name, int k) {
    using Tag = SeriesFamilyId::Tag;
    SeriesFamilyId id;
    if (name == "T") {
        id.tag = Tag::T;
    } else if (name == "V") {
        id.tag = Tag::V;
    } else if (name == "L") {
        id.tag = Tag::L;
    } else if (name == "R") {
        id.tag = Tag::R;
    } else if (name == "Tk") {
        id.tag = Tag::Tk;
    } else if (name == "RootRankSum") {
        id.tag = Tag::RootRankSum;
    } else if (name == "VertexRankSum") {
        id.tag = Tag::VertexRankSum;
    } else {
        return std::nullopt;
    }
    if (id.tag == Tag::R || id.tag == Tag::Tk) {
        if (k < 1) return std::nullopt;
        id.k = k;
    }
    return id;
}

TruncatedSeries make_series(const SeriesFamilyId& id, int order) {
    using Tag = SeriesFamilyId::Tag;
    switch (id.tag) {
        case Tag::T: return catalan_series(order);
        case Tag::V: return vertex_series(order);
        case Tag::L: return leaf_series(order);
        case Tag::R: return root_protected_series(id.k, order);
        case Tag::Tk: return protected_vertex_series(id.k, order);
        case Tag::RootRankSum: return root_rank_sum_series(order);
        case Tag::VertexRankSum: return vertex_rank_sum_series(order);
    }
    throw std::logic_error("unreachable family tag");
}

}  // namespace rankgen::genfun
