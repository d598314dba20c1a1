#include "hookpairs/composition.hpp"

#include <algorithm>

namespace hookpairs {

Composition::Composition(std::vector<Int> parts) : parts_(std::move(parts)) {
    for (const Int& p : parts_)
        if (p < 0) throw DomainError("composition parts must be nonnegative");
}

Composition Composition::zeros(int n) {
    if (n < 0) throw DomainError("ambient length must be nonnegative");
    return Composition(std::vector<Int>(static_cast<std::size_t>(n)));
}

const Int& Composition::part(int i) const {
    if (i < 1 || i > ambient()) throw DomainError("part index out of range");
    return parts_[static_cast<std::size_t>(i - 1)];
}

Int Composition::weight() const {
    Int s = 0;
    for (const Int& p : parts_) s += p;
    return s;
}

int Composition::length() const {
    for (int i = ambient(); i >= 1; --i)
        if (parts_[static_cast<std::size_t>(i - 1)] > 0) return i;
    return 0;
}

Composition Composition::padded(int n) const {
    if (n < ambient()) throw DomainError("cannot pad to a smaller ambient length");
    std::vector<Int> p = parts_;
    p.resize(static_cast<std::size_t>(n));
    return Composition(std::move(p));
}

Composition Composition::trimmed() const {
    std::vector<Int> p(parts_.begin(), parts_.begin() + length());
    return Composition(std::move(p));
}

bool equal_mod_zeros(const Composition& a, const Composition& b) {
    int n = std::max(a.ambient(), b.ambient());
    return a.padded(n) == b.padded(n);
}

bool canonical_less(const Composition& a, const Composition& b) {
    return a.trimmed().parts() < b.trimmed().parts();
}

void check_node(const Composition& alpha, Node node) {
    if (node.row < 1 || node.row > alpha.length())
        throw DomainError("invalid node: row out of range");
    if (node.col < 1 || Int(node.col) > alpha.part(node.row))
        throw DomainError("invalid node: column out of range");
}

std::vector<int> rank_vector(const Composition& alpha) {
    const int n = alpha.ambient();
    std::vector<int> r(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        int rank = 0;
        const Int& ai = alpha.part(i);
        for (int j = 1; j <= n; ++j) {
            if (alpha.part(j) > ai) ++rank;
            else if (j <= i && alpha.part(j) == ai) ++rank;
        }
        r[static_cast<std::size_t>(i - 1)] = rank;
    }
    return r;
}

SortInfo sort_info(const Composition& alpha) {
    const int n = alpha.ambient();
    std::vector<int> r = rank_vector(alpha);
    SortInfo info;
    info.w.assign(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) info.w[static_cast<std::size_t>(r[static_cast<std::size_t>(i - 1)] - 1)] = i;
    std::vector<Int> sorted(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) sorted[static_cast<std::size_t>(j - 1)] = alpha.part(info.w_at(j));
    info.alpha_plus = Composition(std::move(sorted));
    return info;
}

bool dominates(const Composition& alpha, const Composition& beta) {
    int n = std::max(alpha.ambient(), beta.ambient());
    Composition a = alpha.padded(n), b = beta.padded(n);
    if (a == b) return false;
    Int sa = 0, sb = 0;
    for (int j = 1; j <= n; ++j) {
        sa += a.part(j);
        sb += b.part(j);
        if (sa < sb) return false;
    }
    return true;
}

bool triangle_greater(const Composition& alpha, const Composition& beta) {
    if (alpha.weight() != beta.weight()) return false;
    int n = std::max(alpha.ambient(), beta.ambient());
    Composition a = alpha.padded(n), b = beta.padded(n);
    Composition ap = sort_info(a).alpha_plus;
    Composition bp = sort_info(b).alpha_plus;
    if (dominates(ap, bp)) return true;
    if (ap == bp && dominates(a, b)) return true;
    return false;
}

DeformedValue deformed(const Composition& alpha, int i) {
    if (i < 1 || i > alpha.ambient()) throw DomainError("deformed index out of range");
    return {alpha.part(i), i};
}

int leg_length(const Composition& alpha, Node node) {
    check_node(alpha, node);
    const Int ai = alpha.part(node.row);
    const Int j(node.col);
    int count = 0;
    for (int l = 1; l <= alpha.ambient(); ++l) {
        const Int& al = alpha.part(l);
        if (l > node.row) {
            if (j <= al && al <= ai) ++count;
        } else if (l < node.row) {
            if (j <= al + 1 && al + 1 <= ai) ++count;
        }
    }
    return count;
}

int leg_length_interval(const Composition& alpha, Node node) {
    check_node(alpha, node);
    const DeformedValue lower{Int(node.col) - 1, node.row};  // j - 1 - i*upsilon
    const DeformedValue upper = deformed(alpha, node.row);
    int count = 0;
    for (int l = 1; l <= alpha.ambient(); ++l) {
        DeformedValue v = deformed(alpha, l);
        if (lower < v && v < upper) ++count;
    }
    return count;
}

}  // namespace hookpairs
