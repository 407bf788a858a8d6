#include "rankgen/oracle.hpp"

#include <cstdint>
#include <limits>
#include <mutex>
#include <stdexcept>

#include "rankgen/errors.hpp"
#include "rankgen/genfun.hpp"

namespace rankgen::oracle {

namespace {

// Every tree of size s is one s-byte record: child counts in preorder.
// trees(n) is assembled from the first-subtree split: a tree on n vertices
// is a first subtree of size j plus the tree formed by the root and its
// remaining children, so
//   record = [rest[0] + 1] ++ first ++ rest[1:]
// which yields each tree exactly once and realizes the Catalan convolution.
// Levels are memoized; cross-checks over many sizes reuse them.
class TreeStore {
public:
    const std::vector<std::uint8_t>& records(int n) {
        std::lock_guard<std::mutex> lock(mu_);
        ensure(n);
        return buf_[(size_t)n];
    }

private:
    void ensure(int n) {
        if ((int)buf_.size() <= n) buf_.resize((size_t)n + 1);
        if (n >= 1 && buf_[1].empty()) buf_[1] = {0};
        for (int s = 2; s <= n; ++s) {
            if (!buf_[(size_t)s].empty()) continue;
            auto& out = buf_[(size_t)s];
            for (int j = 1; j <= s - 1; ++j) {
                const auto& first = buf_[(size_t)j];
                const auto& rest = buf_[(size_t)(s - j)];
                for (size_t f = 0; f < first.size(); f += (size_t)j) {
                    for (size_t r = 0; r < rest.size(); r += (size_t)(s - j)) {
                        out.push_back((std::uint8_t)(rest[r] + 1));
                        out.insert(out.end(), first.begin() + (long)f,
                                   first.begin() + (long)(f + (size_t)j));
                        out.insert(out.end(), rest.begin() + (long)(r + 1),
                                   rest.begin() + (long)(r + (size_t)(s - j)));
                    }
                }
            }
        }
    }

    std::mutex mu_;
    std::vector<std::vector<std::uint8_t>> buf_;
};

TreeStore& store() {
    static TreeStore s;
    return s;
}

void check_size(int n, int size_cap) {
    if (n < 1) throw std::invalid_argument("tree size must be at least 1");
    if (n > size_cap) throw SizeCapExceeded(n, size_cap);
}

PlaneTree decode(const std::uint8_t*& p) {
    PlaneTree t;
    const int degree = *p++;
    t.children.reserve((size_t)degree);
    for (int i = 0; i < degree; ++i) t.children.push_back(decode(p));
    return t;
}

// Bottom-up rank pass over one preorder record. ranks[i] is filled for every
// vertex; returns the number of leaves.
struct ScanFrame {
    int vertex;
    int remaining;
    int min_child_rank;
};

int scan_ranks(const std::uint8_t* rec, int n, std::vector<int>& ranks,
               std::vector<ScanFrame>& stack) {
    ranks.resize((size_t)n);
    stack.clear();
    int leaves = 0;
    for (int v = 0; v < n; ++v) {
        const int degree = rec[v];
        if (degree > 0) {
            stack.push_back({v, degree, std::numeric_limits<int>::max()});
            continue;
        }
        ++leaves;
        ranks[(size_t)v] = 0;
        int finished = 0;
        while (!stack.empty()) {
            ScanFrame& top = stack.back();
            top.min_child_rank = std::min(top.min_child_rank, finished);
            if (--top.remaining > 0) break;
            finished = top.min_child_rank + 1;
            ranks[(size_t)top.vertex] = finished;
            stack.pop_back();
        }
    }
    return leaves;
}

}  // namespace

int PlaneTree::size() const {
    int s = 1;
    for (const auto& c : children) s += c.size();
    return s;
}

PlaneTree PlaneTree::path(int n) {
    if (n < 1) throw std::invalid_argument("path needs at least one vertex");
    PlaneTree t;
    for (int i = 1; i < n; ++i) {
        PlaneTree parent;
        parent.children.push_back(std::move(t));
        t = std::move(parent);
    }
    return t;
}

namespace {

PlaneTree parse_parens(std::string_view text, size_t& pos) {
    if (pos >= text.size() || text[pos] != '(') {
        throw std::invalid_argument("expected '(' at position " + std::to_string(pos));
    }
    ++pos;
    PlaneTree t;
    while (pos < text.size() && text[pos] == '(') {
        t.children.push_back(parse_parens(text, pos));
    }
    if (pos >= text.size() || text[pos] != ')') {
        throw std::invalid_argument("expected ')' at position " + std::to_string(pos));
    }
    ++pos;
    return t;
}

}  // namespace

PlaneTree PlaneTree::from_parens(std::string_view text) {
    size_t pos = 0;
    PlaneTree t = parse_parens(text, pos);
    if (pos != text.size()) {
        throw std::invalid_argument("trailing characters after tree");
    }
    return t;
}

std::string PlaneTree::to_parens() const {
    std::string out = "(";
    for (const auto& c : children) out += c.to_parens();
    out += ")";
    return out;
}

namespace {

int rank_into(const PlaneTree& t, std::vector<int>& out) {
    const size_t slot = out.size();
    out.push_back(0);
    if (t.is_leaf()) return 0;
    int best = std::numeric_limits<int>::max();
    for (const auto& c : t.children) best = std::min(best, rank_into(c, out));
    out[slot] = best + 1;
    return out[slot];
}

}  // namespace

RankProfile vertex_ranks(const PlaneTree& t) {
    RankProfile p;
    p.root_rank = rank_into(t, p.ranks);
    for (int r : p.ranks) p.leaf_count += r == 0 ? 1 : 0;
    return p;
}

void enumerate_trees(int n, const std::function<void(const PlaneTree&)>& visit, int size_cap) {
    check_size(n, size_cap);
    const auto& rec = store().records(n);
    for (size_t off = 0; off < rec.size(); off += (size_t)n) {
        const std::uint8_t* p = rec.data() + off;
        visit(decode(p));
    }
}

std::vector<PlaneTree> all_trees(int n, int size_cap) {
    std::vector<PlaneTree> out;
    enumerate_trees(n, [&](const PlaneTree& t) { out.push_back(t); }, size_cap);
    return out;
}

BigInt RankTally::vertex_count_at(int k) const {
    auto it = vertex_counts.find(k);
    return it == vertex_counts.end() ? BigInt(0) : it->second;
}

BigInt RankTally::root_count_at(int k) const {
    auto it = root_counts.find(k);
    return it == root_counts.end() ? BigInt(0) : it->second;
}

BigInt RankTally::rank_count_at(int k) const {
    auto it = rank_histogram.find(k);
    return it == rank_histogram.end() ? BigInt(0) : it->second;
}

BigInt RankTally::bivariate_at(int m) const {
    auto it = bivariate.find(m);
    return it == bivariate.end() ? BigInt(0) : it->second;
}

RankTally tally(int n, int size_cap) {
    check_size(n, size_cap);
    const auto& rec = store().records(n);

    std::vector<long> hist((size_t)n, 0);       // vertex ranks are < n
    std::vector<long> root_hist((size_t)n, 0);  // root ranks too
    std::vector<long> biv((size_t)n + 1, 0);
    long tree_count = 0;
    long leaf_total = 0;
    long root_rank_sum = 0;
    long vertex_rank_sum = 0;

    std::vector<int> ranks;
    std::vector<ScanFrame> stack;
    for (size_t off = 0; off < rec.size(); off += (size_t)n) {
        const int leaves = scan_ranks(rec.data() + off, n, ranks, stack);
        ++tree_count;
        leaf_total += leaves;
        ++biv[(size_t)leaves];
        root_hist[(size_t)ranks[0]] += 1;
        root_rank_sum += ranks[0];
        for (int r : ranks) {
            hist[(size_t)r] += 1;
            vertex_rank_sum += r;
        }
    }

    RankTally t;
    t.n = n;
    t.tree_count = tree_count;
    t.leaf_total = leaf_total;
    t.root_rank_sum = root_rank_sum;
    t.vertex_rank_sum = vertex_rank_sum;
    for (int m = 0; m <= n; ++m) {
        if (biv[(size_t)m] > 0) t.bivariate[m] = biv[(size_t)m];
    }
    long suffix = 0;
    for (int k = n - 1; k >= 0; --k) {
        suffix += hist[(size_t)k];
        if (hist[(size_t)k] > 0) t.rank_histogram[k] = hist[(size_t)k];
        if (suffix > 0 || k == 0) t.vertex_counts[k] = suffix;
    }
    suffix = 0;
    for (int k = n - 1; k >= 1; --k) {
        suffix += root_hist[(size_t)k];
        if (suffix > 0) t.root_counts[k] = suffix;
    }
    return t;
}

VerificationReport cross_check(int n_max, int k_max, int size_cap) {
    check_size(n_max, size_cap);
    if (k_max < 1) throw std::invalid_argument("cross-check needs k_max >= 1");
    VerificationReport rep;

    const int N = n_max;
    const auto cat = genfun::catalan_numbers(N);
    const TruncatedSeries t_series = genfun::catalan_series(N);
    const TruncatedSeries v_series = genfun::vertex_series(N);
    const TruncatedSeries l_series = genfun::leaf_series(N);
    const genfun::BivariatePoly biv = genfun::bivariate_series(N);
    const TruncatedSeries er_series = genfun::root_rank_sum_series(N);
    const TruncatedSeries et_series = genfun::vertex_rank_sum_series(N);
    std::vector<TruncatedSeries> rk, tk;
    rk.reserve((size_t)k_max);
    tk.reserve((size_t)k_max);
    for (int k = 1; k <= k_max; ++k) {
        rk.push_back(genfun::root_protected_series(k, N));
        tk.push_back(l_series * rk.back());
    }

    // One report entry per (n, family); the detail pinpoints any mismatch.
    for (int n = 1; n <= n_max; ++n) {
        const RankTally t = tally(n, size_cap);
        const std::string at = "n=" + std::to_string(n) + " ";

        bool ok = t.tree_count == cat[(size_t)(n - 1)] &&
                  BigRational(t.tree_count) == t_series.at(n);
        rep.add(at + "tree count == Catalan(n-1) == [x^n] T", ok,
                ok ? "" : "oracle " + t.tree_count.get_str());

        ok = BigRational(t.vertex_count_at(0)) == v_series.at(n);
        rep.add(at + "vertex total == [x^n] V", ok,
                ok ? "" : "oracle " + t.vertex_count_at(0).get_str() + ", series " +
                              v_series.at(n).to_string());

        ok = BigRational(t.leaf_total) == l_series.at(n - 1);
        rep.add(at + "leaf total == l(n-1)", ok,
                ok ? "" : "oracle " + t.leaf_total.get_str() + ", series " +
                              l_series.at(n - 1).to_string());

        std::string detail;
        for (int k = 1; k <= k_max && detail.empty(); ++k) {
            if (BigRational(t.vertex_count_at(k)) != tk[(size_t)(k - 1)].at(n)) {
                detail = "k=" + std::to_string(k) + ": oracle " +
                         t.vertex_count_at(k).get_str() + ", series " +
                         tk[(size_t)(k - 1)].at(n).to_string();
            }
        }
        rep.add(at + "t_k(n) for k=1.." + std::to_string(k_max), detail.empty(), detail);

        detail.clear();
        for (int k = 1; k <= k_max && detail.empty(); ++k) {
            if (BigRational(t.root_count_at(k)) != rk[(size_t)(k - 1)].at(n)) {
                detail = "k=" + std::to_string(k) + ": oracle " + t.root_count_at(k).get_str() +
                         ", series " + rk[(size_t)(k - 1)].at(n).to_string();
            }
        }
        rep.add(at + "r_k(n) for k=1.." + std::to_string(k_max), detail.empty(), detail);

        detail.clear();
        for (int m = 0; m <= n && detail.empty(); ++m) {
            if (BigRational(t.bivariate_at(m)) != biv.coefficient(n, m)) {
                detail = "m=" + std::to_string(m) + ": oracle " + t.bivariate_at(m).get_str() +
                         ", series " + biv.coefficient(n, m).to_string();
            }
        }
        rep.add(at + "t_{n,m} for m=0..n", detail.empty(), detail);

        ok = BigRational(t.root_rank_sum) == er_series.at(n);
        rep.add(at + "root rank sum == [x^n] sum_k R_k", ok,
                ok ? "" : "oracle " + t.root_rank_sum.get_str() + ", series " +
                              er_series.at(n).to_string());

        ok = BigRational(t.vertex_rank_sum) == et_series.at(n);
        rep.add(at + "vertex rank sum == [x^n] sum_k T_k", ok,
                ok ? "" : "oracle " + t.vertex_rank_sum.get_str() + ", series " +
                              et_series.at(n).to_string());
    }
    return rep;
}

}  // namespace rankgen::oracle
