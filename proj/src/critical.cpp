#include "hookpairs/critical.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace hookpairs {

namespace mp = boost::multiprecision;

CriticalCheck check_critical_pair(const Composition& alpha, const Composition& beta, const Int& m,
                                  const Int& n, bool extended) {
    if (n <= 0) throw DomainError("critical pair requires n >= 1");
    if (m < 0) throw DomainError("critical pair requires m >= 0");
    if (m == 0 && !extended)
        throw DomainError("m = 0 is only accepted with the extended flag");

    CriticalCheck out;
    int N = std::max(alpha.ambient(), beta.ambient());
    Composition a = alpha.padded(N), b = beta.padded(N);
    if (!triangle_greater(a, b)) {
        out.reason = "alpha does not precede beta in the triangular order";
        out.first_violation = 0;
        return out;
    }
    std::vector<int> ra = rank_vector(a), rb = rank_vector(b);
    std::vector<Rat> q(static_cast<std::size_t>(N));
    for (int i = 1; i <= N; ++i) {
        Int rank_diff = rb[static_cast<std::size_t>(i - 1)] - ra[static_cast<std::size_t>(i - 1)];
        Int part_diff = a.part(i) - b.part(i);
        // divisibility of rank_diff*kappa + part_diff by m*kappa + n
        if (rank_diff * n != m * part_diff) {
            out.reason = "m*kappa+n does not divide the difference at index " + std::to_string(i);
            out.first_violation = i;
            return out;
        }
        q[static_cast<std::size_t>(i - 1)] = Rat(part_diff, n);
    }
    out.certificate = CriticalPairCertificate{std::move(a), std::move(b), m, n, std::move(q)};
    return out;
}

std::optional<CriticalPairCertificate> is_critical_pair(const Composition& alpha,
                                                        const Composition& beta, const Int& m,
                                                        const Int& n, bool extended) {
    return check_critical_pair(alpha, beta, m, n, extended).certificate;
}

namespace {

struct Setup {
    Composition a;       // alpha padded to N
    SortInfo info;
    int N = 0;
    int shift_l = 0;
    int m = 0;
    Int n;
};

Setup prepare(const Composition& alpha, Node node, std::optional<int> ambient) {
    check_node(alpha, node);
    Setup s;
    s.n = alpha.part(node.row) + 1 - node.col;
    s.m = leg_length(alpha, node) + 1;
    Int default_n = Int(alpha.length()) + alpha.weight();
    int N = std::max(checked_int(default_n, "ambient length l(alpha)+|alpha|"), alpha.ambient());
    if (ambient) {
        if (*ambient < N)
            throw DomainError("requested ambient length is smaller than the default");
        N = *ambient;
    }
    s.N = N;
    s.a = alpha.padded(N);
    std::vector<int> r = rank_vector(s.a);
    s.shift_l = r[static_cast<std::size_t>(node.row - 1)] - 1;
    s.info = sort_info(s.a);
    return s;
}

// xi_{m*k+i} = alpha~_{w(shift_l+i)} - n*k, extended on demand.
class XiSequence {
public:
    XiSequence(const Setup& s) : s_(s) {
        for (int i = 1; i <= s.m; ++i)
            values_.push_back(deformed(s_.a, s_.info.w_at(s_.shift_l + i)));
    }

    // 1-based
    const DeformedValue& at(long long j) {
        while (static_cast<long long>(values_.size()) < j)
            values_.push_back(values_[values_.size() - static_cast<std::size_t>(s_.m)].minus(s_.n));
        return values_[static_cast<std::size_t>(j - 1)];
    }

    std::vector<DeformedValue> prefix(long long len) {
        at(len);
        return std::vector<DeformedValue>(values_.begin(), values_.begin() + len);
    }

private:
    const Setup& s_;
    std::vector<DeformedValue> values_;
};

long long find_T(const Setup& s, XiSequence& xi) {
    for (long long step = 1;; ++step) {
        if (s.shift_l + s.m + step > s.N)
            throw std::logic_error("scan exceeded the ambient length");
        DeformedValue av = deformed(s.a, s.info.w_at(checked_int(Int(s.shift_l + s.m + step), "index")));
        const DeformedValue& xv = xi.at(s.m + step + 1);
        assert(av != xv);  // impossible: distinct upsilon counts
        if (av > xv) return step;
    }
}

}  // namespace

ConstructResult construct_beta(const Composition& alpha, Node node, std::optional<int> ambient) {
    Setup s = prepare(alpha, node, ambient);
    XiSequence xi(s);
    long long T = find_T(s, xi);
    long long t = (T - 1) % s.m + 1;
    long long k = (T - t) / s.m;

    std::vector<Int> beta_parts = s.a.parts();
    auto set_at = [&](long long rank, const Int& v) {
        beta_parts[static_cast<std::size_t>(s.info.w_at(static_cast<int>(rank)) - 1)] = v;
    };
    auto alpha_at = [&](long long rank) -> const Int& {
        return s.a.part(s.info.w_at(static_cast<int>(rank)));
    };
    for (long long i = 1; i <= t; ++i) set_at(s.shift_l + i, alpha_at(s.shift_l + i) - (k + 1) * s.n);
    for (long long i = t + 1; i <= s.m; ++i) set_at(s.shift_l + i, alpha_at(s.shift_l + i) - k * s.n);
    for (long long i = s.m + 1; i <= s.m + T; ++i)
        set_at(s.shift_l + i, alpha_at(s.shift_l + i) + s.n);
    for (const Int& p : beta_parts)
        if (p < 0) throw std::logic_error("construction produced a negative part");

    long long T0 = 0;
    for (int i = 1; i <= s.m; ++i)
        T0 += checked_ll(alpha_at(s.shift_l + i) / s.n, "T0 summand");
    assert(T <= T0);

    AlgorithmTrace trace{s.shift_l, s.m, s.n,       s.N, s.info.w,
                         xi.prefix(s.m + T + 1),    T,   t,
                         k,        T0};
    return ConstructResult{Composition(std::move(beta_parts)), std::move(trace), node};
}

std::vector<Composition> chain(const Composition& alpha, Node node, std::optional<int> ambient) {
    ConstructResult res = construct_beta(alpha, node, ambient);
    const AlgorithmTrace& tr = res.trace;
    std::vector<Composition> out;
    std::vector<Int> cur = alpha.padded(tr.ambient).parts();
    out.emplace_back(cur);
    auto w = [&](long long rank) {
        return static_cast<std::size_t>(tr.w[static_cast<std::size_t>(rank - 1)] - 1);
    };
    for (long long i = 1; i <= tr.T; ++i) {
        cur[w(tr.shift_l + (i - 1) % tr.m + 1)] -= tr.n;
        cur[w(tr.shift_l + tr.m + i)] += tr.n;
        out.emplace_back(cur);
    }
    assert(out.back() == res.beta);
    return out;
}

std::vector<ClosureEntry> closure(const Composition& alpha, const Int& m, const Int& n,
                                  int max_depth) {
    if (m <= 0 || n <= 0) throw DomainError("closure requires m >= 1 and n >= 1");
    auto target = reduce_ratio(Rat(m), Rat(n));
    const Int& mr = target.first;
    const Int& nr = target.second;

    std::set<std::vector<Int>> seen;
    seen.insert(alpha.trimmed().parts());
    std::vector<Composition> frontier{alpha.trimmed()};
    std::vector<ClosureEntry> out;

    for (int depth = 1; depth <= max_depth && !frontier.empty(); ++depth) {
        std::vector<Composition> next;
        for (const Composition& gamma : frontier) {
            for (const HookFactor& f : matching_hooks(gamma, mr, nr)) {
                Composition beta = construct_beta(gamma, f.node).beta.trimmed();
                if (!seen.insert(beta.parts()).second) continue;
                if (!is_critical_pair(alpha, beta, mr, nr))
                    throw std::logic_error("closure produced a non-critical partner");
                // for t = kappa+1 the factor is integral: slope L+1, intercept alpha_i+1-j
                out.push_back(ClosureEntry{beta, gamma, f.node, mp::numerator(f.slope),
                                           mp::numerator(f.intercept), depth});
                next.push_back(beta);
            }
        }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const ClosureEntry& x, const ClosureEntry& y) {
        if (x.depth != y.depth) return x.depth < y.depth;
        return canonical_less(x.beta, y.beta);
    });
    return out;
}

std::vector<std::pair<Node, HookFactor>> detect_extra_hooks(const Composition& alpha, Node node) {
    Setup s = prepare(alpha, node, std::nullopt);
    XiSequence xi(s);
    long long T = find_T(s, xi);

    std::vector<std::pair<Node, HookFactor>> out;
    // value at position s: sign of alpha~_{w(l+m+s)} - xi_{m+s+1}; positive at
    // T by construction, looking for a later "+ then -" pattern.
    bool prev_positive = true;
    for (long long step = T + 1; s.shift_l + s.m + step <= s.N; ++step) {
        const DeformedValue& xv = xi.at(s.m + step + 1);
        DeformedValue av =
            deformed(s.a, s.info.w_at(checked_int(Int(s.shift_l + s.m + step), "index")));
        bool positive = av > xv;
        if (prev_positive && !positive) {
            // m+step = m*q + i with 1 <= i <= m  (pattern index is the negative one)
            long long pos = s.m + step;
            long long i = (pos - 1) % s.m + 1;
            long long q = (pos - i) / s.m;
            int row = s.info.w_at(static_cast<int>(s.shift_l + i));
            Int col = s.a.part(row) + 1 - s.n * q;
            Node pred{row, checked_int(col, "predicted column")};
            HookFactor predicted{Rat(q * s.m), Rat(q * s.n), pred};
            HookFactor actual = hook_factor(s.a, pred);
            if (actual.slope != predicted.slope || actual.intercept != predicted.intercept)
                throw std::logic_error("sign-change prediction disagrees with hook_factor");
            out.emplace_back(pred, actual);
        }
        prev_positive = positive;
        if (xv.base <= -1 && positive) break;  // xi < -1 from here on: no further sign changes
    }
    return out;
}

}  // namespace hookpairs
