#include "hookpairs/jack.hpp"

#include <algorithm>
#include <cstdlib>

#include "hookpairs/critical.hpp"

namespace hookpairs {

namespace mp = boost::multiprecision;

void MultiPoly::add_term(const Exponents& e, const KappaRational& c) {
    if (static_cast<int>(e.size()) != nvars_) throw DomainError("exponent dimension mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

KappaRational MultiPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? KappaRational() : it->second;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (o.nvars_ != nvars_) throw DomainError("variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly MultiPoly::operator*(const KappaRational& scalar) const {
    MultiPoly r(nvars_);
    if (scalar.is_zero()) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * scalar);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::monomial(const Exponents& e, const KappaRational& c) {
    MultiPoly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

namespace {

Composition exponents_as_composition(const Exponents& e) {
    std::vector<Int> parts(e.begin(), e.end());
    return Composition(std::move(parts));
}

const KappaRational& kappa_one() {
    static const KappaRational k(KappaPoly::linear(1, 0));
    return k;
}

}  // namespace

MultiPoly u_apply(int i, const MultiPoly& p) {
    const int n = p.nvars();
    if (i < 1 || i > n) throw DomainError("operator index out of range");
    MultiPoly out(n);
    const std::size_t ii = static_cast<std::size_t>(i - 1);
    for (const auto& [gamma, coeff] : p.terms()) {
        Composition gc = exponents_as_composition(gamma);
        // diagonal: xi_i(gamma) x^gamma
        KappaAffine xi = xi_eigenvalue(gc, i, n);
        out.add_term(gamma, coeff * KappaRational(KappaPoly::from_affine(xi)));
        const int u = gamma[ii];
        for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            const std::size_t jj = static_cast<std::size_t>(j - 1);
            const int v = gamma[jj];
            if (u > v) {
                // +kappa x_i^{u-d} x_j^{v+d}, 1 <= d <= u-v (d = u-v is the swap)
                Exponents e = gamma;
                for (int d = 1; d <= u - v; ++d) {
                    e[ii] = u - d;
                    e[jj] = v + d;
                    out.add_term(e, coeff * kappa_one());
                }
            } else if (u < v) {
                // -kappa x_i^{v-1-d} x_j^{u+1+d}, 0 <= d <= v-u-2
                Exponents e = gamma;
                for (int d = 0; d <= v - u - 2; ++d) {
                    e[ii] = v - 1 - d;
                    e[jj] = u + 1 + d;
                    out.add_term(e, -(coeff * kappa_one()));
                }
            }
            if (j < i && u != v) {
                // transposition sum: -kappa x^{(i,j)gamma}
                Exponents e = gamma;
                std::swap(e[ii], e[jj]);
                out.add_term(e, -(coeff * kappa_one()));
            }
        }
    }
    return out;
}

KappaAffine xi_eigenvalue(const Composition& alpha, int i, int nvars) {
    if (nvars < alpha.length()) throw DomainError("nvars smaller than l(alpha)");
    Composition a = alpha.trimmed().padded(nvars);
    if (i < 1 || i > nvars) throw DomainError("index out of range");
    std::vector<int> r = rank_vector(a);
    return KappaAffine{Rat(nvars - r[static_cast<std::size_t>(i - 1)]), Rat(a.part(i) + 1)};
}

long long default_monomial_cap() {
    if (const char* env = std::getenv("HOOKPAIRS_FEASIBILITY_CAP")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw DomainError("HOOKPAIRS_FEASIBILITY_CAP must be a positive integer");
    }
    return 20000;
}

namespace {

long long monomial_count(long long degree, int nvars) {
    // C(degree + nvars - 1, nvars - 1), saturating
    Int c = 1;
    for (int i = 1; i <= nvars - 1; ++i) {
        c *= degree + i;
        c /= i;
    }
    return c > LLONG_MAX / 2 ? LLONG_MAX / 2 : static_cast<long long>(c);
}

void enumerate_exponents(int slots, int remaining, Exponents& cur, std::vector<Exponents>& out) {
    if (slots == 1) {
        cur.push_back(remaining);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int v = 0; v <= remaining; ++v) {
        cur.push_back(v);
        enumerate_exponents(slots - 1, remaining - v, cur, out);
        cur.pop_back();
    }
}

std::vector<int> sorted_desc(const Exponents& e) {
    std::vector<int> s = e;
    std::sort(s.begin(), s.end(), std::greater<int>());
    return s;
}

// Total order refining the triangular order: compare sorted parts
// lexicographically (lex refines dominance on partitions of equal weight),
// then the compositions themselves.
bool processing_before(const Exponents& a, const Exponents& b) {
    std::vector<int> ap = sorted_desc(a), bp = sorted_desc(b);
    if (ap != bp) return ap > bp;
    return a > b;
}

// Coefficient of x^beta in U_i x^gamma for beta != gamma: nonzero only when
// they differ in exactly positions {i, j}; the value is 0 or +-kappa.
int coupling(const Exponents& gamma, const Exponents& beta, int i) {
    const int n = static_cast<int>(gamma.size());
    const std::size_t ii = static_cast<std::size_t>(i - 1);
    if (beta[ii] == gamma[ii]) return 0;
    int j = 0;
    for (int l = 1; l <= n; ++l) {
        if (l == i) continue;
        if (beta[static_cast<std::size_t>(l - 1)] != gamma[static_cast<std::size_t>(l - 1)]) {
            if (j != 0) return 0;  // more than two positions differ
            j = l;
        }
    }
    if (j == 0) return 0;
    const std::size_t jj = static_cast<std::size_t>(j - 1);
    const int u = gamma[ii], v = gamma[jj];
    const int bi = beta[ii];
    if (beta[jj] != u + v - bi) return 0;
    int c = 0;
    if (u > v && v <= bi && bi <= u - 1) c += 1;
    if (u < v && u + 1 <= bi && bi <= v - 1) c -= 1;
    if (j < i && u != v && bi == v) c -= 1;  // transposition term hits the swap
    return c;
}

}  // namespace

MultiPoly zeta(const Composition& alpha, int nvars, long long monomial_cap) {
    if (nvars < alpha.length()) throw DomainError("zeta requires nvars >= l(alpha)");
    if (nvars == 0) return MultiPoly::monomial(Exponents{});
    Composition a = alpha.trimmed().padded(nvars);
    long long degree = checked_ll(a.weight(), "degree");
    if (degree > INT_MAX / 2) throw DomainError("degree too large");
    if (monomial_count(degree, nvars) > monomial_cap)
        throw DomainError("zeta infeasible: monomial count exceeds the cap");

    Exponents alpha_e(static_cast<std::size_t>(nvars));
    for (int i = 1; i <= nvars; ++i)
        alpha_e[static_cast<std::size_t>(i - 1)] = checked_int(a.part(i), "part");

    std::vector<Exponents> basis;
    {
        Exponents cur;
        std::vector<Exponents> all;
        enumerate_exponents(nvars, static_cast<int>(degree), cur, all);
        for (Exponents& e : all) {
            if (e == alpha_e || triangle_greater(a, exponents_as_composition(e)))
                basis.push_back(std::move(e));
        }
        std::sort(basis.begin(), basis.end(), processing_before);
    }
    if (basis.empty() || basis.front() != alpha_e)
        throw std::logic_error("alpha is not first in its processing order");

    std::vector<std::pair<Exponents, KappaRational>> known;
    known.emplace_back(alpha_e, KappaRational(1));
    for (std::size_t b = 1; b < basis.size(); ++b) {
        const Exponents& beta = basis[b];
        int i = 0;
        for (int l = 1; l <= nvars; ++l) {
            if (beta[static_cast<std::size_t>(l - 1)] != alpha_e[static_cast<std::size_t>(l - 1)]) {
                i = l;
                break;
            }
        }
        if (i == 0) throw std::logic_error("no separating index for a distinct composition");
        Composition bc = exponents_as_composition(beta);
        KappaPoly denom = KappaPoly::from_affine(xi_eigenvalue(a, i, nvars)) -
                          KappaPoly::from_affine(xi_eigenvalue(bc, i, nvars));
        KappaRational numer;
        for (const auto& [gamma, ag] : known) {
            int c = coupling(gamma, beta, i);
            if (c == 0) continue;
            KappaRational term = ag * kappa_one();
            numer += c > 0 ? term : -term;
        }
        KappaRational a_beta = numer / KappaRational(denom);
        if (!a_beta.is_zero()) known.emplace_back(beta, std::move(a_beta));
    }

    MultiPoly result(nvars);
    for (auto& [e, c] : known) result.add_term(e, c);
    return result;
}

JackReport knop_sahi_report(const Composition& alpha, int nvars, long long monomial_cap) {
    JackReport rep;
    rep.alpha = alpha.trimmed();
    rep.nvars = nvars;
    rep.zeta = zeta(alpha, nvars, monomial_cap);

    KappaPoly h(Rat(1));
    for (const HookFactor& f : hook_factors_all(alpha))
        h *= KappaPoly::linear(f.slope, f.intercept);

    rep.knop_sahi_ok = true;
    rep.denominator_lcm = KappaPoly(Rat(1));
    for (const auto& [e, c] : rep.zeta.terms()) {
        KappaRational scaled = c * KappaRational(h);
        if (!(scaled.is_polynomial() && scaled.as_polynomial().has_nonneg_integer_coeffs()))
            rep.knop_sahi_ok = false;
        rep.denominator_lcm = lcm(rep.denominator_lcm, c.den());
    }

    // complete pole factorization through rational roots
    RationalRootFactorization f = rational_roots(rep.denominator_lcm);
    if (f.residue.degree() > 0)
        throw DomainError("denominator has a factor without rational roots");
    for (const auto& [root, mult] : f.roots) {
        if (root >= 0) throw DomainError("denominator root is not a negative rational");
        Rat neg = -root;  // n/m
        rep.pole_factors.push_back(PoleFactor{mp::denominator(neg), mp::numerator(neg), mult});
    }
    std::sort(rep.pole_factors.begin(), rep.pole_factors.end(),
              [](const PoleFactor& x, const PoleFactor& y) {
                  return std::tie(x.m, x.n) < std::tie(y.m, y.n);
              });

    rep.poles_within_hooks = true;
    {
        std::vector<std::pair<Int, Int>> hook_ratios;
        for (const HookFactor& hf : hook_factors_all(alpha)) hook_ratios.push_back(hf.reduced());
        for (const PoleFactor& pf : rep.pole_factors) {
            if (std::find(hook_ratios.begin(), hook_ratios.end(), std::make_pair(pf.m, pf.n)) ==
                hook_ratios.end())
                rep.poles_within_hooks = false;
        }
    }

    // trailing coefficient l! kappa^l / h at x_{k+1}..x_{k+l}
    int k = alpha.length();
    long long l = checked_ll(alpha.weight(), "weight");
    rep.trailing_applicable = k + l <= nvars;
    if (rep.trailing_applicable) {
        Exponents e(static_cast<std::size_t>(nvars), 0);
        for (long long i = 0; i < l; ++i) e[static_cast<std::size_t>(k + i)] = 1;
        Rat fact = 1;
        for (long long i = 2; i <= l; ++i) fact *= i;
        KappaRational expected(KappaPoly::kappa_power(static_cast<int>(l), fact), h);
        rep.trailing_coeff_ok = rep.zeta.coefficient(e) == expected;
    } else {
        rep.trailing_coeff_ok = true;
    }
    return rep;
}

bool xi_specialization_match(const Composition& alpha, const Composition& beta, const Int& m,
                             const Int& n) {
    if (m <= 0 || n <= 0) throw DomainError("specialization requires m >= 1 and n >= 1");
    if (!is_critical_pair(alpha, beta, m, n))
        throw DomainError("not a certified critical pair");
    int nvars = std::max(alpha.ambient(), beta.ambient());
    Composition a = alpha.padded(nvars), b = beta.padded(nvars);
    Rat kappa0(-n, m);
    for (int i = 1; i <= nvars; ++i) {
        KappaAffine xa = xi_eigenvalue(a, i, nvars);
        KappaAffine xb = xi_eigenvalue(b, i, nvars);
        if (xa.evaluate(kappa0) != xb.evaluate(kappa0)) return false;
    }
    return true;
}

}  // namespace hookpairs
