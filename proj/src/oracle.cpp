#include "hookpairs/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "hookpairs/hooks.hpp"

namespace hookpairs {

namespace mp = boost::multiprecision;

namespace {

int resolve_n_max(const Composition& alpha, const SearchBounds& bounds) {
    int n_max;
    if (bounds.n_max < 0) {
        // default l(alpha)+|alpha|, capped for tractability
        int def = checked_int(Int(alpha.length()) + alpha.weight(), "ambient bound");
        n_max = std::min(def, std::max(bounds.factorial_cap, alpha.length()));
    } else {
        n_max = bounds.n_max;
    }
    if (n_max < alpha.length()) throw DomainError("n_max smaller than l(alpha)");
    return n_max;
}

// Candidate rank vectors sigma are built position by position; a position i
// only admits ranks congruent to r(alpha,i) mod m/gcd(m,n) (integrality of
// beta_i) and within the window forced by 0 <= beta_i <= |alpha|.  The
// candidate beta values are computed up front in exact arithmetic; the
// recursion itself only shuffles precomputed entries.
struct RankPermSearch {
    int n = 0;
    Int weight;
    // per position: admissible (rank, beta value) choices
    std::vector<std::vector<std::pair<int, Int>>> candidates;
    std::vector<int> order;  // positions, most constrained first
    std::vector<int> sigma;  // 1-based ranks per position (0 = unset)
    std::vector<Int> beta;
    std::vector<bool> used;
    std::vector<std::vector<Int>>* out = nullptr;

    void run(std::size_t depth, const Int& partial_weight) {
        if (depth == order.size()) {
            finish();
            return;
        }
        int pos = order[depth];
        for (const auto& [s, b] : candidates[static_cast<std::size_t>(pos)]) {
            if (used[static_cast<std::size_t>(s)]) continue;
            if (partial_weight + b > weight) continue;
            used[static_cast<std::size_t>(s)] = true;
            sigma[static_cast<std::size_t>(pos)] = s;
            beta[static_cast<std::size_t>(pos)] = b;
            run(depth + 1, partial_weight + b);
            used[static_cast<std::size_t>(s)] = false;
        }
    }

    void finish() {
        // sigma must really be the rank vector of beta
        for (int i = 0; i < n; ++i) {
            int r = 0;
            for (int j = 0; j < n; ++j) {
                if (beta[static_cast<std::size_t>(j)] > beta[static_cast<std::size_t>(i)]) ++r;
                else if (j <= i && beta[static_cast<std::size_t>(j)] == beta[static_cast<std::size_t>(i)]) ++r;
            }
            if (r != sigma[static_cast<std::size_t>(i)]) return;
        }
        out->push_back(beta);
    }
};

std::vector<Composition> enumerate_rank_perm(const Composition& alpha, const Int& m, const Int& n,
                                             int n_max, int factorial_cap) {
    if (n_max > factorial_cap)
        throw DomainError("rank-permutation search infeasible: n_max " + std::to_string(n_max) +
                          " exceeds the factorial-feasibility cap " +
                          std::to_string(factorial_cap));
    RankPermSearch s;
    s.n = n_max;
    Composition ap = alpha.padded(n_max);
    std::vector<int> rank = rank_vector(ap);
    s.weight = ap.weight();
    Int g = mp::gcd(m, n);
    Int step = m / g;

    s.candidates.resize(static_cast<std::size_t>(n_max));
    for (int i = 0; i < n_max; ++i) {
        for (int r = 1; r <= n_max; ++r) {
            Int diff = rank[static_cast<std::size_t>(i)] - r;
            if (diff % step != 0) continue;
            Int b = ap.part(i + 1) + n * diff / m;
            if (b < 0 || b > s.weight) continue;
            s.candidates[static_cast<std::size_t>(i)].emplace_back(r, std::move(b));
        }
    }
    s.order.resize(static_cast<std::size_t>(n_max));
    std::iota(s.order.begin(), s.order.end(), 0);
    std::sort(s.order.begin(), s.order.end(), [&](int x, int y) {
        return s.candidates[static_cast<std::size_t>(x)].size() <
               s.candidates[static_cast<std::size_t>(y)].size();
    });
    s.sigma.assign(static_cast<std::size_t>(n_max), 0);
    s.beta.assign(static_cast<std::size_t>(n_max), Int(0));
    s.used.assign(static_cast<std::size_t>(n_max) + 1, false);
    std::vector<std::vector<Int>> found;
    s.out = &found;
    s.run(0, Int(0));

    std::vector<Composition> result;
    for (auto& b : found) {
        Composition beta{std::move(b)};
        if (triangle_greater(ap, beta)) result.push_back(beta.trimmed());
    }
    std::sort(result.begin(), result.end(), canonical_less);
    return result;
}

void enumerate_compositions_rec(int slots, long long remaining, long long part_bound,
                                std::vector<Int>& cur,
                                const std::function<void(const std::vector<Int>&)>& sink) {
    if (slots == 0) {
        if (remaining == 0) sink(cur);
        return;
    }
    long long hi = std::min(remaining, part_bound);
    for (long long v = 0; v <= hi; ++v) {
        cur.push_back(Int(v));
        enumerate_compositions_rec(slots - 1, remaining - v, part_bound, cur, sink);
        cur.pop_back();
    }
}

std::vector<Composition> enumerate_naive(const Composition& alpha, const Int& m, const Int& n,
                                         int n_max, bool extended) {
    long long weight = checked_ll(alpha.weight(), "weight");
    Int max_part = 0;
    for (int i = 1; i <= alpha.ambient(); ++i) max_part = std::max(max_part, alpha.part(i));
    // |beta_i - alpha_i| <= n*n_max/m since rank differences are below n_max
    Int bound = m > 0 ? max_part + (n * n_max + m - 1) / m : Int(weight);
    if (bound > weight) bound = weight;

    std::vector<Composition> result;
    std::vector<Int> cur;
    Composition ap = alpha.padded(n_max);
    enumerate_compositions_rec(
        n_max, weight, checked_ll(bound, "part bound"), cur, [&](const std::vector<Int>& parts) {
            Composition beta{parts};
            if (is_critical_pair(ap, beta, m, n, extended)) result.push_back(beta.trimmed());
        });
    std::sort(result.begin(), result.end(), canonical_less);
    return result;
}

}  // namespace

std::vector<Composition> enumerate_partners(const Composition& alpha, const Int& m, const Int& n,
                                            SearchBounds bounds) {
    if (n <= 0) throw DomainError("enumerate_partners requires n >= 1");
    if (m < 0) throw DomainError("enumerate_partners requires m >= 0");
    if (m == 0 && !bounds.extended)
        throw DomainError("m = 0 requires extended bounds");
    int n_max = resolve_n_max(alpha, bounds);
    if (bounds.mode == SearchMode::RankPermutation) {
        if (m == 0)
            throw DomainError("rank-permutation mode requires m >= 1; use naive mode");
        return enumerate_rank_perm(alpha, m, n, n_max, bounds.factorial_cap);
    }
    return enumerate_naive(alpha, m, n, n_max, bounds.extended);
}

UniquenessReport uniqueness_scan(const std::vector<Composition>& corpus, int max_n,
                                 int factorial_cap) {
    UniquenessReport report;
    for (const Composition& alpha : corpus) {
        std::vector<HookFactor> hooks = hook_factors_all(alpha);
        std::vector<std::pair<Int, Int>> ratios;
        for (const HookFactor& f : hooks) ratios.push_back(f.reduced());
        std::sort(ratios.begin(), ratios.end());
        ratios.erase(std::unique(ratios.begin(), ratios.end()), ratios.end());
        for (const auto& [mr, nr] : ratios) {
            std::vector<HookFactor> occ;
            for (const HookFactor& f : hooks)
                if (f.reduced() == std::make_pair(mr, nr)) occ.push_back(f);
            if (occ.size() != 1) continue;
            UniquenessRecord rec;
            rec.alpha = alpha.trimmed();
            rec.node_m = mp::numerator(occ[0].slope);
            rec.node_n = mp::numerator(occ[0].intercept);
            rec.m = mr;
            rec.n = nr;
            rec.multiplicity = 1;
            rec.coprime = mp::gcd(rec.node_m, rec.node_n) == 1;
            int def = checked_int(Int(alpha.length()) + alpha.weight(), "ambient bound");
            int bound = def;
            if (max_n > 0) bound = std::min(bound, max_n);
            bound = std::min(bound, std::max(factorial_cap, alpha.length()));
            bound = std::max(bound, alpha.length());
            rec.n_max = bound;
            SearchBounds bounds;
            bounds.n_max = bound;
            bounds.factorial_cap = std::max(factorial_cap, bound);
            rec.partners = enumerate_partners(alpha, mr, nr, bounds);
            rec.flagged = rec.coprime && rec.partners.size() != 1;
            if (rec.flagged) ++report.flag_count;
            report.records.push_back(std::move(rec));
        }
    }
    return report;
}

NegativeExistenceReport negative_existence_scan(const std::vector<Composition>& corpus) {
    NegativeExistenceReport report;
    for (const Composition& alpha : corpus) {
        ++report.alphas;
        int n_max = checked_int(Int(alpha.length()) + alpha.weight(), "ambient bound");
        Composition ap = alpha.padded(n_max);
        std::vector<int> ra = rank_vector(ap);
        long long weight = checked_ll(alpha.weight(), "weight");
        std::vector<Int> cur;
        enumerate_compositions_rec(n_max, weight, weight, cur, [&](const std::vector<Int>& parts) {
            Composition beta{parts};
            if (!triangle_greater(ap, beta)) return;
            ++report.pairs_checked;
            std::vector<int> rb = rank_vector(beta);
            // direction (m, n) from the first index with a nonzero entry pair
            Int m = 0, n = 0;
            bool parallel = true;
            for (int i = 1; i <= n_max && parallel; ++i) {
                Int u = ap.part(i) - beta.part(i);  // q_i * n
                Int v = Int(rb[static_cast<std::size_t>(i - 1)] -
                            ra[static_cast<std::size_t>(i - 1)]);  // q_i * m
                if (n == 0 && m == 0) {
                    if (u == 0 && v == 0) continue;
                    Int g = mp::gcd(mp::abs(u), mp::abs(v));
                    n = u / g;
                    m = v / g;
                    if (n < 0 || (n == 0 && m < 0)) {
                        n = -n;
                        m = -m;
                    }
                } else if (u * m != v * n) {
                    parallel = false;
                }
            }
            if (!parallel) return;
            ++report.parallel_pairs;
            if (n <= 0 || m < 0)
                report.violations.push_back(
                    NegativeExistenceViolation{alpha.trimmed(), beta.trimmed(), m, n});
        });
    }
    return report;
}

namespace {
void partitions_rec(int remaining, int max_part, int max_len, std::vector<Int>& cur,
                    std::vector<Composition>& out) {
    out.emplace_back(cur);
    if (max_len == 0) return;
    for (int v = std::min(remaining, max_part); v >= 1; --v) {
        cur.push_back(Int(v));
        partitions_rec(remaining - v, v, max_len - 1, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Composition> all_compositions(int max_weight, int max_length) {
    // each trimmed composition of length <= max_length appears exactly once
    // among the padded vectors of one weight class
    std::vector<Composition> out;
    for (int w = 0; w <= max_weight; ++w) {
        std::vector<Int> cur;
        enumerate_compositions_rec(max_length, w, w, cur, [&](const std::vector<Int>& parts) {
            out.push_back(Composition{parts}.trimmed());
        });
    }
    return out;
}

std::vector<Composition> all_partitions(int max_weight, int max_length) {
    std::vector<Composition> out;
    std::vector<Int> cur;
    partitions_rec(max_weight, max_weight, max_length, cur, out);
    std::sort(out.begin(), out.end(), canonical_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace hookpairs
