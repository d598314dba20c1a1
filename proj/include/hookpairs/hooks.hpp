#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hookpairs/composition.hpp"
#include "hookpairs/numeric.hpp"

namespace hookpairs {

// An affine expression a*kappa + b.  The hook parameter t is almost always
// kappa+1, but t = 1 and t = kappa occur in other Jack-polynomial formulae,
// so general affine t is supported.
struct KappaAffine {
    Rat slope;      // coefficient of kappa
    Rat intercept;  // constant term

    Rat evaluate(const Rat& kappa) const { return slope * kappa + intercept; }
    bool operator==(const KappaAffine&) const = default;
};

inline KappaAffine standard_t() { return {Rat(1), Rat(1)}; }  // t = kappa + 1

// Normalize a ratio (slope : intercept) to a coprime integer pair with the
// first nonzero entry positive; proportional factors share the same zero of
// kappa and compare equal through this form.
std::pair<Int, Int> reduce_ratio(const Rat& slope, const Rat& intercept);

// One linear factor of a hook-length product, attached to the node it came
// from.  For t = kappa+1 the slope is L(alpha;i,j)+1 and the intercept is
// alpha_i + 1 - j, both positive integers.
struct HookFactor {
    Rat slope;
    Rat intercept;
    Node node;

    std::pair<Int, Int> reduced() const { return reduce_ratio(slope, intercept); }
    std::string str() const;  // e.g. "4k+3"
};

HookFactor hook_factor(const Composition& alpha, Node node, KappaAffine t = standard_t());

// All |alpha| factors of h(alpha,t), one per node (i,j) with j >= 1; rows
// with alpha_i = 0 contribute nothing.
std::vector<HookFactor> hook_factors_all(const Composition& alpha, KappaAffine t = standard_t());

// Number of hook factors of h(alpha,kappa+1) proportional to m*kappa+n
// (4k+6 counts toward 2k+3).  Requires m >= 1 and n >= 1.
long long factor_multiplicity(const Composition& alpha, const Int& m, const Int& n);

// Nodes of alpha whose hook factor is proportional to m*kappa+n.
std::vector<HookFactor> matching_hooks(const Composition& alpha, const Int& m, const Int& n);

}  // namespace hookpairs
