#pragma once

#include <compare>
#include <vector>

#include "hookpairs/numeric.hpp"

namespace hookpairs {

// A composition: finite sequence of nonnegative integers with an explicit
// ambient length N.  Trailing zeros are significant for ranks beyond the
// length, so (3,0) and (3,0,0) are structurally different but equal modulo
// trailing zeros.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<Int> parts);

    static Composition zeros(int n);

    int ambient() const { return static_cast<int>(parts_.size()); }
    const std::vector<Int>& parts() const { return parts_; }

    // 1-based access, matching the index conventions used throughout.
    const Int& part(int i) const;

    Int weight() const;   // |alpha|
    int length() const;   // l(alpha): largest index with positive part, 0 if none

    Composition padded(int n) const;   // n >= ambient()
    Composition trimmed() const;       // drop trailing zeros

    bool operator==(const Composition&) const = default;

private:
    std::vector<Int> parts_;
};

bool equal_mod_zeros(const Composition& a, const Composition& b);

// Strict total order on trimmed part vectors; used to keep result sets in a
// canonical order independent of discovery order.
bool canonical_less(const Composition& a, const Composition& b);

// Diagram node (i,j) with 1 <= i <= l(alpha), 1 <= j <= alpha_i.
struct Node {
    int row = 0;
    int col = 0;
    bool operator==(const Node&) const = default;
};

void check_node(const Composition& alpha, Node node);

// Exact representation of a - b*upsilon where upsilon = 1/(N+1) is the
// infinitesimal tie-breaker: 0 < b*upsilon < 1 for every b in 1..N, so
// comparisons never need actual rationals.
struct DeformedValue {
    Int base;
    int upsilon_count = 0;

    DeformedValue minus(const Int& n) const { return {base - n, upsilon_count}; }

    bool operator==(const DeformedValue&) const = default;

    friend std::strong_ordering operator<=>(const DeformedValue& x, const DeformedValue& y) {
        if (x.base != y.base)
            return x.base < y.base ? std::strong_ordering::less : std::strong_ordering::greater;
        // larger upsilon multiplicity means a smaller value
        if (x.upsilon_count != y.upsilon_count)
            return x.upsilon_count > y.upsilon_count ? std::strong_ordering::less
                                                     : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
};

// Sorting permutation and the sorted partition: r(alpha, w(i)) = i and
// alpha_plus_i = alpha_{w(i)}.
struct SortInfo {
    std::vector<int> w;       // w[i-1] = w(i), 1-based values
    Composition alpha_plus;

    int w_at(int rank) const { return w[static_cast<std::size_t>(rank - 1)]; }
};

// result[i-1] = r(alpha, i) = #{j: a_j > a_i} + #{j <= i: a_j = a_i}.
std::vector<int> rank_vector(const Composition& alpha);

SortInfo sort_info(const Composition& alpha);

// Dominance order (strict): alpha != beta and all partial sums of alpha are >=
// those of beta.  Arguments are padded to a common ambient length first.
bool dominates(const Composition& alpha, const Composition& beta);

// The triangular order: |alpha| = |beta| and (alpha+ > beta+ under dominance,
// or alpha+ = beta+ and alpha > beta).  Trailing-zero insensitive.
bool triangle_greater(const Composition& alpha, const Composition& beta);

// alpha~_i = alpha_i - i*upsilon; 1 <= i <= ambient.
DeformedValue deformed(const Composition& alpha, int i);

// Leg-length L(alpha;i,j) by direct counting:
//   #{l > i: j <= a_l <= a_i} + #{l < i: j <= a_l + 1 <= a_i}.
int leg_length(const Composition& alpha, Node node);

// The same number computed as #{l: j - i*upsilon - 1 < alpha~_l < alpha~_i};
// kept as an independent route, the two must always agree.
int leg_length_interval(const Composition& alpha, Node node);

}  // namespace hookpairs
