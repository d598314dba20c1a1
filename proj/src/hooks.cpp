#include "hookpairs/hooks.hpp"

#include <sstream>

namespace hookpairs {

namespace mp = boost::multiprecision;

std::pair<Int, Int> reduce_ratio(const Rat& slope, const Rat& intercept) {
    Int sn = mp::numerator(slope), sd = mp::denominator(slope);
    Int cn = mp::numerator(intercept), cd = mp::denominator(intercept);
    // clear denominators
    Int a = sn * cd;
    Int b = cn * sd;
    if (a == 0 && b == 0) return {0, 0};
    Int g = mp::gcd(mp::abs(a), mp::abs(b));
    a /= g;
    b /= g;
    if (a < 0 || (a == 0 && b < 0)) {
        a = -a;
        b = -b;
    }
    return {a, b};
}

std::string HookFactor::str() const {
    auto rat_str = [](const Rat& r) {
        std::ostringstream os;
        os << r;
        return os.str();
    };
    std::ostringstream os;
    if (slope != 0) {
        if (slope == -1) os << '-';
        else if (slope != 1) {
            bool paren = mp::denominator(slope) != 1;
            if (paren) os << '(' << rat_str(slope) << ')';
            else os << rat_str(slope);
        }
        os << 'k';
        if (intercept > 0) os << '+' << rat_str(intercept);
        else if (intercept < 0) os << rat_str(intercept);
    } else {
        os << rat_str(intercept);
    }
    return os.str();
}

HookFactor hook_factor(const Composition& alpha, Node node, KappaAffine t) {
    check_node(alpha, node);
    int L = leg_length(alpha, node);
    // h(alpha,t;i,j) = alpha_i - j + t + kappa*L
    return HookFactor{t.slope + L, Rat(alpha.part(node.row) - node.col) + t.intercept, node};
}

std::vector<HookFactor> hook_factors_all(const Composition& alpha, KappaAffine t) {
    std::vector<HookFactor> out;
    for (int i = 1; i <= alpha.length(); ++i) {
        long long ai = checked_ll(alpha.part(i), "part");
        for (long long j = 1; j <= ai; ++j)
            out.push_back(hook_factor(alpha, Node{i, static_cast<int>(j)}, t));
    }
    return out;
}

long long factor_multiplicity(const Composition& alpha, const Int& m, const Int& n) {
    if (m <= 0 || n <= 0) throw DomainError("factor_multiplicity requires m >= 1 and n >= 1");
    auto target = reduce_ratio(Rat(m), Rat(n));
    long long count = 0;
    for (const HookFactor& f : hook_factors_all(alpha))
        if (f.reduced() == target) ++count;
    return count;
}

std::vector<HookFactor> matching_hooks(const Composition& alpha, const Int& m, const Int& n) {
    if (m <= 0 || n <= 0) throw DomainError("matching_hooks requires m >= 1 and n >= 1");
    auto target = reduce_ratio(Rat(m), Rat(n));
    std::vector<HookFactor> out;
    for (const HookFactor& f : hook_factors_all(alpha))
        if (f.reduced() == target) out.push_back(f);
    return out;
}

}  // namespace hookpairs
