#pragma once

#include <map>
#include <vector>

#include "hookpairs/composition.hpp"
#include "hookpairs/kappa.hpp"
#include "hookpairs/numeric.hpp"

namespace hookpairs {

using Exponents = std::vector<int>;

// Sparse multivariate polynomial in x_1..x_N with coefficients in Q(kappa).
class MultiPoly {
public:
    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    const std::map<Exponents, KappaRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& e, const KappaRational& c);
    KappaRational coefficient(const Exponents& e) const;

    MultiPoly& operator+=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    MultiPoly operator*(const KappaRational& scalar) const;
    MultiPoly operator-(const MultiPoly& o) const;

    bool operator==(const MultiPoly&) const = default;

    static MultiPoly monomial(const Exponents& e, const KappaRational& c = KappaRational(1));

private:
    int nvars_;
    std::map<Exponents, KappaRational> terms_;
};

// The Cherednik-type operator U_i applied exactly:
//   U_i p = d/dx_i (x_i p) + kappa * sum_{j != i} (x_i p - x_j p(x(i,j)))/(x_i - x_j)
//           - kappa * sum_{j < i} p(x(i,j)),
// expanded per monomial through the closed divided-difference forms.
MultiPoly u_apply(int i, const MultiPoly& p);

// xi_i(alpha) = (N - r(alpha,i)) * kappa + alpha_i + 1, with alpha padded to N.
KappaAffine xi_eigenvalue(const Composition& alpha, int i, int nvars);

// Number of monomials of the given degree in nvars variables must stay below
// this cap for zeta to run; HOOKPAIRS_FEASIBILITY_CAP overrides the default.
long long default_monomial_cap();

// The nonsymmetric Jack polynomial zeta_alpha = x^alpha + sum A_beta x^beta
// over beta triangularly below alpha, determined by back-substitution from
// the eigen-equations U_i zeta = xi_i(alpha) zeta.
MultiPoly zeta(const Composition& alpha, int nvars, long long monomial_cap = default_monomial_cap());

struct PoleFactor {
    Int m;
    Int n;
    int multiplicity = 0;
    bool operator==(const PoleFactor&) const = default;
};

struct JackReport {
    Composition alpha;
    int nvars = 0;
    MultiPoly zeta{0};
    KappaPoly denominator_lcm;
    std::vector<PoleFactor> pole_factors;  // reduced (m,n), sorted
    bool knop_sahi_ok = false;
    bool trailing_coeff_ok = false;
    bool trailing_applicable = false;  // needs l(alpha)+|alpha| <= N
    bool poles_within_hooks = false;
};

JackReport knop_sahi_report(const Composition& alpha, int nvars,
                            long long monomial_cap = default_monomial_cap());

// After certifying (alpha,beta,m,n), checks that substituting
// kappa = -n/m makes xi_i(alpha) = xi_i(beta) for every i;
// a theorem-level identity, so false indicates a bug.
bool xi_specialization_match(const Composition& alpha, const Composition& beta, const Int& m,
                             const Int& n);

}  // namespace hookpairs
