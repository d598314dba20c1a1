#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hookpairs/composition.hpp"
#include "hookpairs/hooks.hpp"
#include "hookpairs/numeric.hpp"

namespace hookpairs {

// Full record of one run of the construction; the auditable certificate of
// how T, t, k and beta were obtained.
struct AlgorithmTrace {
    int shift_l = 0;     // rank of the node's row minus 1
    int m = 0;           // leg-length + 1
    Int n;               // alpha_i + 1 - j
    int ambient = 0;     // N, defaults to l(alpha) + |alpha|
    std::vector<int> w;  // sorting permutation, w[i-1] = w(i)
    // xi[j-1] = xi_j for j = 1..m+T+1: xi_{m*k+i} = alpha~_{w(shift_l+i)} - n*k
    std::vector<DeformedValue> xi;
    long long T = 0;
    long long t = 0;
    long long k = 0;
    long long T0 = 0;    // sum of floor(alpha_{w(shift_l+i)} / n), a bound with T <= T0
};

struct ConstructResult {
    Composition beta;
    AlgorithmTrace trace;
    Node node;
};

// Witness that (alpha,beta) is a (-n/m)-critical pair: per index,
// (r(beta,i)-r(alpha,i))*kappa + alpha_i-beta_i = q_i * (m*kappa+n).
struct CriticalPairCertificate {
    Composition alpha;
    Composition beta;  // both padded to a common ambient length
    Int m;
    Int n;
    std::vector<Rat> quotients;
};

// Detailed outcome for reporting: on refusal, the first violated index
// (1-based, 0 when the triangular-order precondition failed) and a reason.
struct CriticalCheck {
    std::optional<CriticalPairCertificate> certificate;
    int first_violation = 0;
    std::string reason;
};

// Definition-4 check.  n >= 1 always; m >= 1 unless `extended` is set, in
// which case m = 0 is accepted and the condition degenerates to equal rank
// vectors.  n = 0 is rejected outright.
CriticalCheck check_critical_pair(const Composition& alpha, const Composition& beta,
                                  const Int& m, const Int& n, bool extended = false);

std::optional<CriticalPairCertificate> is_critical_pair(const Composition& alpha,
                                                        const Composition& beta, const Int& m,
                                                        const Int& n, bool extended = false);

// The construction: given a node of alpha, build beta with
// m = L(alpha;i,j)+1 and n = alpha_i+1-j such that (alpha,beta) is a
// (-n/m)-critical pair.  `ambient`, when given, must be at least the default
// l(alpha)+|alpha|.
ConstructResult construct_beta(const Composition& alpha, Node node,
                               std::optional<int> ambient = std::nullopt);

// The stepwise chain beta^(0) = alpha, ..., beta^(T) = beta; consecutive
// entries are strictly decreasing in the triangular order.
std::vector<Composition> chain(const Composition& alpha, Node node,
                               std::optional<int> ambient = std::nullopt);

struct ClosureEntry {
    Composition beta;    // trimmed
    Composition parent;  // trimmed composition it was constructed from
    Node node;           // node of parent used
    Int step_m;          // actual hook factor at that node (may be a multiple)
    Int step_n;
    int depth = 0;
};

// BFS over construct_beta at every node whose hook factor is proportional to
// m*kappa+n, iterated on new results up to max_depth.  Results are
// deduplicated modulo trailing zeros and returned in canonical order; every
// entry is verified to be a critical partner of alpha for the reduced factor.
std::vector<ClosureEntry> closure(const Composition& alpha, const Int& m, const Int& n,
                                  int max_depth);

// Scans the sign pattern of alpha~_{w(l+m+s)} - xi_{m+s+1} beyond T; each
// down-crossing predicts a further hook divisible by m*kappa+n in the rows
// w(l+1..l+m), which is verified against hook_factor before being returned.
std::vector<std::pair<Node, HookFactor>> detect_extra_hooks(const Composition& alpha, Node node);

}  // namespace hookpairs
