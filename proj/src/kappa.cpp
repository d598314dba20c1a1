#include "hookpairs/kappa.hpp"

#include <algorithm>
#include <sstream>

namespace hookpairs {

namespace mp = boost::multiprecision;

KappaPoly::KappaPoly(const Rat& constant) {
    if (constant != 0) c_.push_back(constant);
}

KappaPoly::KappaPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

KappaPoly KappaPoly::linear(const Rat& slope, const Rat& intercept) {
    return KappaPoly(std::vector<Rat>{intercept, slope});
}

KappaPoly KappaPoly::kappa_power(int e, const Rat& coeff) {
    std::vector<Rat> c(static_cast<std::size_t>(e) + 1);
    c.back() = coeff;
    return KappaPoly(std::move(c));
}

void KappaPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat KappaPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
    return c_[static_cast<std::size_t>(i)];
}

Rat KappaPoly::leading() const { return c_.empty() ? Rat(0) : c_.back(); }

KappaPoly KappaPoly::operator-() const {
    KappaPoly r = *this;
    for (Rat& x : r.c_) x = -x;
    return r;
}

KappaPoly& KappaPoly::operator+=(const KappaPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

KappaPoly& KappaPoly::operator-=(const KappaPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

KappaPoly operator*(const KappaPoly& a, const KappaPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return KappaPoly(std::move(c));
}

std::pair<KappaPoly, KappaPoly> KappaPoly::divmod(const KappaPoly& divisor) const {
    if (divisor.is_zero()) throw DomainError("polynomial division by zero");
    KappaPoly rem = *this;
    if (rem.degree() < divisor.degree()) return {KappaPoly(), rem};
    std::vector<Rat> q(static_cast<std::size_t>(rem.degree() - divisor.degree()) + 1);
    const Rat lead = divisor.leading();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        int shift = rem.degree() - divisor.degree();
        Rat factor = rem.leading() / lead;
        q[static_cast<std::size_t>(shift)] = factor;
        for (std::size_t i = 0; i < divisor.c_.size(); ++i)
            rem.c_[i + static_cast<std::size_t>(shift)] -= factor * divisor.c_[i];
        rem.trim();
    }
    return {KappaPoly(std::move(q)), rem};
}

bool KappaPoly::divides_exactly(const KappaPoly& divisor, KappaPoly* quotient) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) return false;
    if (quotient) *quotient = std::move(q);
    return true;
}

Rat KappaPoly::evaluate(const Rat& kappa) const {
    Rat v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * kappa + *it;
    return v;
}

Rat KappaPoly::content() const {
    if (is_zero()) return Rat(0);
    Int num_gcd = 0, den_lcm = 1;
    for (const Rat& x : c_) {
        num_gcd = mp::gcd(num_gcd, mp::abs(mp::numerator(x)));
        den_lcm = mp::lcm(den_lcm, mp::denominator(x));
    }
    Rat c(num_gcd, den_lcm);
    if (leading() < 0) c = -c;
    return c;
}

KappaPoly KappaPoly::primitive() const {
    if (is_zero()) return {};
    Rat c = content();
    KappaPoly p = *this;
    for (Rat& x : p.c_) x /= c;
    return p;
}

bool KappaPoly::has_nonneg_integer_coeffs() const {
    for (const Rat& x : c_)
        if (x < 0 || mp::denominator(x) != 1) return false;
    return true;
}

std::string KappaPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        Rat x = coeff(d);
        if (x == 0) continue;
        if (!first && x > 0) os << '+';
        if (x == -1 && d > 0) os << '-';
        else if (x != 1 || d == 0) os << x;
        if (d >= 1) {
            os << 'k';
            if (d > 1) os << '^' << d;
        }
        first = false;
    }
    return os.str();
}

KappaPoly gcd(const KappaPoly& a, const KappaPoly& b) {
    KappaPoly x = a.primitive(), y = b.primitive();
    while (!y.is_zero()) {
        KappaPoly r = x.divmod(y).second.primitive();
        x = std::move(y);
        y = std::move(r);
    }
    return x.is_zero() ? KappaPoly(Rat(1)) : x;
}

KappaPoly lcm(const KappaPoly& a, const KappaPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    KappaPoly g = gcd(a, b);
    return (a * b).divmod(g).first.primitive();
}

namespace {
std::vector<Int> divisors(Int v) {
    v = mp::abs(v);
    std::vector<Int> out;
    for (Int d = 1; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            if (d * d != v) out.push_back(v / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}
}  // namespace

RationalRootFactorization rational_roots(const KappaPoly& p) {
    RationalRootFactorization f;
    if (p.is_zero()) throw DomainError("cannot factor the zero polynomial");
    f.constant = p.content();
    KappaPoly cur = p.primitive();
    // roots at kappa = 0
    while (cur.degree() >= 1 && cur.coeff(0) == 0) {
        ++f.roots[Rat(0)];
        cur = cur.divmod(KappaPoly::linear(1, 0)).first;
    }
    if (cur.degree() >= 1) {
        Int constant = mp::numerator(cur.coeff(0));
        Int lead = mp::numerator(cur.leading());
        for (const Int& q : divisors(lead)) {
            for (const Int& pnum : divisors(constant)) {
                if (mp::gcd(pnum, q) != 1) continue;
                for (int sign = 0; sign < 2; ++sign) {
                    Rat root = sign ? Rat(-pnum, q) : Rat(pnum, q);
                    while (cur.degree() >= 1 && cur.evaluate(root) == 0) {
                        ++f.roots[root];
                        cur = cur.divmod(KappaPoly::linear(1, -root)).first;
                    }
                }
                if (cur.degree() < 1) break;
            }
            if (cur.degree() < 1) break;
        }
    }
    f.constant *= cur.content();
    f.residue = cur.primitive();
    if (f.residue.is_zero()) f.residue = KappaPoly(Rat(1));
    return f;
}

KappaRational::KappaRational(KappaPoly num, KappaPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("zero denominator");
    reduce();
}

void KappaRational::reduce() {
    if (num_.is_zero()) {
        den_ = KappaPoly(Rat(1));
        return;
    }
    KappaPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    // denominator primitive with positive leading coefficient; the rational
    // scale moves into the numerator
    Rat c = den_.content();
    den_ = den_.primitive();
    KappaPoly scaled;
    {
        std::vector<Rat> coeffs = num_.coeffs();
        for (Rat& x : coeffs) x /= c;
        scaled = KappaPoly(std::move(coeffs));
    }
    num_ = std::move(scaled);
}

KappaPoly KappaRational::as_polynomial() const {
    if (!is_polynomial()) throw DomainError("not a polynomial: " + str());
    Rat d = den_.coeff(0);
    std::vector<Rat> coeffs = num_.coeffs();
    for (Rat& x : coeffs) x /= d;
    return KappaPoly(std::move(coeffs));
}

KappaRational KappaRational::operator-() const {
    KappaRational r = *this;
    r.num_ = -r.num_;
    return r;
}

KappaRational operator+(const KappaRational& a, const KappaRational& b) {
    return KappaRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

KappaRational operator-(const KappaRational& a, const KappaRational& b) {
    return KappaRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

KappaRational operator*(const KappaRational& a, const KappaRational& b) {
    return KappaRational(a.num_ * b.num_, a.den_ * b.den_);
}

KappaRational operator/(const KappaRational& a, const KappaRational& b) {
    if (b.is_zero()) throw DomainError("division by zero rational function");
    return KappaRational(a.num_ * b.den_, a.den_ * b.num_);
}

std::string KappaRational::str() const {
    if (is_polynomial()) return as_polynomial().str();
    auto nonzero_terms = [](const KappaPoly& p) {
        int c = 0;
        for (const Rat& x : p.coeffs())
            if (x != 0) ++c;
        return c;
    };
    std::string n = num_.str(), d = den_.str();
    std::string ns = nonzero_terms(num_) > 1 ? "(" + n + ")" : n;
    std::string ds = den_.degree() > 0 ? "(" + d + ")" : d;
    return ns + "/" + ds;
}

}  // namespace hookpairs
