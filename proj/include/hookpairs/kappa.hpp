#pragma once

#include <map>
#include <string>
#include <vector>

#include "hookpairs/hooks.hpp"
#include "hookpairs/numeric.hpp"

namespace hookpairs {

// Univariate polynomial in kappa over Q, dense, lowest degree first, no
// trailing zero coefficients.
class KappaPoly {
public:
    KappaPoly() = default;
    KappaPoly(const Rat& constant);
    KappaPoly(const Int& constant) : KappaPoly(Rat(constant)) {}
    KappaPoly(int constant) : KappaPoly(Rat(constant)) {}
    explicit KappaPoly(std::vector<Rat> coeffs);

    static KappaPoly linear(const Rat& slope, const Rat& intercept);  // slope*kappa + intercept
    static KappaPoly from_affine(const KappaAffine& a) { return linear(a.slope, a.intercept); }
    static KappaPoly kappa_power(int e, const Rat& coeff = Rat(1));

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Rat coeff(int i) const;
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat leading() const;

    KappaPoly operator-() const;
    KappaPoly& operator+=(const KappaPoly& o);
    KappaPoly& operator-=(const KappaPoly& o);
    friend KappaPoly operator+(KappaPoly a, const KappaPoly& b) { return a += b; }
    friend KappaPoly operator-(KappaPoly a, const KappaPoly& b) { return a -= b; }
    friend KappaPoly operator*(const KappaPoly& a, const KappaPoly& b);
    KappaPoly& operator*=(const KappaPoly& o) { return *this = *this * o; }

    // exact division in Q[kappa]: {quotient, remainder}
    std::pair<KappaPoly, KappaPoly> divmod(const KappaPoly& divisor) const;
    bool divides_exactly(const KappaPoly& divisor, KappaPoly* quotient = nullptr) const;

    Rat evaluate(const Rat& kappa) const;

    // rational content c and primitive part p with *this = c * p, where p has
    // coprime integer coefficients and positive leading coefficient
    Rat content() const;
    KappaPoly primitive() const;

    bool has_nonneg_integer_coeffs() const;  // member of N0[kappa]

    bool operator==(const KappaPoly&) const = default;

    std::string str() const;  // "4k^2+3k+1"

private:
    void trim();
    std::vector<Rat> c_;
};

KappaPoly gcd(const KappaPoly& a, const KappaPoly& b);  // primitive, positive leading
KappaPoly lcm(const KappaPoly& a, const KappaPoly& b);

// Complete factorization over the rational roots: linear factors plus a
// residue with no rational root.  root_multiplicity maps each root to its
// multiplicity; constant holds the overall rational scale.
struct RationalRootFactorization {
    std::map<Rat, int> roots;
    KappaPoly residue;  // primitive, positive leading, no rational roots
    Rat constant;
};
RationalRootFactorization rational_roots(const KappaPoly& p);

// Reduced fraction of polynomials: denominator primitive with positive
// leading coefficient, gcd(numerator, denominator) = 1.  Exact arithmetic.
class KappaRational {
public:
    KappaRational() : num_(), den_(Rat(1)) {}
    KappaRational(KappaPoly num) : num_(std::move(num)), den_(Rat(1)) {}
    KappaRational(KappaPoly num, KappaPoly den);
    KappaRational(const Rat& r) : num_(r), den_(Rat(1)) {}
    KappaRational(int v) : num_(Rat(v)), den_(Rat(1)) {}

    const KappaPoly& num() const { return num_; }
    const KappaPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    // the fraction written over a denominator of 1; throws if not polynomial
    KappaPoly as_polynomial() const;

    KappaRational operator-() const;
    friend KappaRational operator+(const KappaRational& a, const KappaRational& b);
    friend KappaRational operator-(const KappaRational& a, const KappaRational& b);
    friend KappaRational operator*(const KappaRational& a, const KappaRational& b);
    friend KappaRational operator/(const KappaRational& a, const KappaRational& b);
    KappaRational& operator+=(const KappaRational& o) { return *this = *this + o; }
    KappaRational& operator-=(const KappaRational& o) { return *this = *this - o; }
    KappaRational& operator*=(const KappaRational& o) { return *this = *this * o; }
    KappaRational& operator/=(const KappaRational& o) { return *this = *this / o; }

    bool operator==(const KappaRational&) const = default;

    std::string str() const;  // "k/(k+1)"

private:
    void reduce();
    KappaPoly num_;
    KappaPoly den_;
};

}  // namespace hookpairs
