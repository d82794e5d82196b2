#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cyclotomic.hpp"

namespace rouquier {

// Laurent polynomial in y with cyclotomic coefficients, where y^mu = x.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    LaurentPoly(long c) : LaurentPoly(Cyclotomic(c)) {}
    LaurentPoly(int c) : LaurentPoly(Cyclotomic(c)) {}
    LaurentPoly(const Cyclotomic& c, int mu = 1) : mu_(check_mu(mu)) {
        if (!c.is_zero()) c_[0] = c;
    }

    static LaurentPoly zero(int mu) { return LaurentPoly(Cyclotomic(), mu); }
    static LaurentPoly monomial(const Cyclotomic& c, long y_exp, int mu = 1) {
        LaurentPoly p = zero(mu);
        if (!c.is_zero()) p.c_[y_exp] = c;
        return p;
    }
    // x-exponent keyed coefficients
    static LaurentPoly from_x(const std::map<long, Cyclotomic>& xs, int mu = 1) {
        LaurentPoly p = zero(mu);
        for (auto& [e, c] : xs) p.add_term(e * mu, c);
        return p;
    }
    static LaurentPoly x(int mu = 1) { return monomial(1, mu, mu); }

    int mu() const { return mu_; }
    const std::map<long, Cyclotomic>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long lowest() const { return require_nonzero().c_.begin()->first; }
    long highest() const { return require_nonzero().c_.rbegin()->first; }
    const Cyclotomic& lowest_coeff() const { return require_nonzero().c_.begin()->second; }
    const Cyclotomic& leading_coeff() const { return require_nonzero().c_.rbegin()->second; }
    Cyclotomic coeff(long e) const {
        auto it = c_.find(e);
        return it == c_.end() ? Cyclotomic() : it->second;
    }
    bool is_monomial() const { return c_.size() == 1; }
    bool is_x_polynomial() const {
        for (auto& [e, c] : c_)
            if (e % mu_) return false;
        return true;
    }

    void add_term(long e, const Cyclotomic& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = c_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    // Same function, written with y' where y'^(mu*k) = x.
    LaurentPoly with_mu(int mu) const {
        if (mu % mu_) throw DomainError("with_mu: target must be a multiple");
        if (mu == mu_) return *this;
        long k = mu / mu_;
        LaurentPoly r = zero(mu);
        for (auto& [e, c] : c_) r.c_[e * k] = c;
        return r;
    }
    // Smallest mu' dividing mu that still represents this polynomial.
    LaurentPoly compacted() const {
        long g = mu_;
        for (auto& [e, c] : c_) g = std::gcd(g, e);
        if (g <= 1) return *this;
        LaurentPoly r = zero(static_cast<int>(mu_ / g));
        for (auto& [e, c] : c_) r.c_[e / g] = c;
        return r;
    }

    LaurentPoly shifted(long k) const {
        LaurentPoly r = zero(mu_);
        for (auto& [e, c] : c_) r.c_[e + k] = c;
        return r;
    }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& [e, c] : r.c_) c = -c;
        return r;
    }
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        int m = std::lcm(a.mu_, b.mu_);
        LaurentPoly r = a.with_mu(m);
        for (auto& [e, c] : b.with_mu(m).c_) r.add_term(e, c);
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        int m = std::lcm(a.mu_, b.mu_);
        LaurentPoly A = a.with_mu(m), B = b.with_mu(m), r = zero(m);
        for (auto& [e, c] : A.c_)
            for (auto& [f, d] : B.c_) r.add_term(e + f, c * d);
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(const Cyclotomic& s) const {
        LaurentPoly r = zero(mu_);
        if (s.is_zero()) return r;
        for (auto& [e, c] : c_) r.c_[e] = c * s;
        return r;
    }

    LaurentPoly galois(long j) const {
        LaurentPoly r = zero(mu_);
        for (auto& [e, c] : c_) r.c_[e] = c.galois(j);
        return r;
    }

    // Value at x = 1 (y = 1).
    Cyclotomic at_one() const {
        Cyclotomic s;
        for (auto& [e, c] : c_) s += c;
        return s;
    }
    // d/dx at x = 1
    Cyclotomic x_derivative_at_one() const {
        Cyclotomic s;
        for (auto& [e, c] : c_) s += c.scaled(ratio(e, mu_));
        return s;
    }
    Cyclotomic evaluate_y(const Cyclotomic& y) const {
        Cyclotomic s;
        for (auto& [e, c] : c_) s += c * y.pow(e);
        return s;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.mu_ == b.mu_) return a.c_ == b.c_;
        int m = std::lcm(a.mu_, b.mu_);
        return a.with_mu(m).c_ == b.with_mu(m).c_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [e, c] : c_) {
            if (!first) os << " + ";
            first = false;
            bool unit = c == Cyclotomic(1);
            if (!unit || e == 0) os << (c.is_rational() || c.terms().size() == 1 ? c.to_string() : "(" + c.to_string() + ")");
            if (e == 0) continue;
            if (!unit) os << "*";
            if (e % mu_ == 0) os << "x";
            else os << "y";
            long k = e % mu_ == 0 ? e / mu_ : e;
            if (k != 1) os << "^" << k;
        }
        if (mu_ > 1 && !is_x_polynomial()) os << "  [y^" << mu_ << "=x]";
        return os.str();
    }

  private:
    int mu_ = 1;
    std::map<long, Cyclotomic> c_;

    static int check_mu(int mu) {
        if (mu < 1) throw DomainError("mu must be positive");
        return mu;
    }
    const LaurentPoly& require_nonzero() const {
        if (c_.empty()) throw DomainError("zero polynomial has no extreme terms");
        return *this;
    }
};

namespace poly {

// Dense polynomials over cyclotomics, index = degree.
using Dense = std::vector<Cyclotomic>;

inline void trim(Dense& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

inline Dense from_laurent(const LaurentPoly& p, long shift = 0) {
    Dense d;
    for (auto& [e, c] : p.terms()) {
        long k = e - shift;
        if (k < 0) throw DomainError("from_laurent: negative exponent");
        if (static_cast<long>(d.size()) <= k) d.resize(k + 1);
        d[k] = c;
    }
    return d;
}

inline LaurentPoly to_laurent(const Dense& d, int mu, long shift = 0) {
    LaurentPoly p = LaurentPoly::zero(mu);
    for (std::size_t k = 0; k < d.size(); ++k) p.add_term(static_cast<long>(k) + shift, d[k]);
    return p;
}

inline Dense mul(const Dense& a, const Dense& b) {
    if (a.empty() || b.empty()) return {};
    Dense r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// a = q*b + r
inline std::pair<Dense, Dense> divmod(Dense a, const Dense& b) {
    Dense bb = b;
    trim(bb), trim(a);
    if (bb.empty()) throw DivisionByZero();
    if (a.size() < bb.size()) return {{}, a};
    Cyclotomic lead_inv = bb.back().inverse();
    Dense q(a.size() - bb.size() + 1);
    for (long i = static_cast<long>(a.size()) - 1; i >= static_cast<long>(bb.size()) - 1; --i) {
        if (a[i].is_zero()) continue;
        Cyclotomic t = a[i] * lead_inv;
        long s = i - static_cast<long>(bb.size()) + 1;
        q[s] = t;
        for (std::size_t j = 0; j < bb.size(); ++j)
            if (!bb[j].is_zero()) a[s + j] -= t * bb[j];
    }
    trim(a), trim(q);
    return {q, a};
}

inline Dense monic(Dense a) {
    trim(a);
    if (a.empty()) return a;
    Cyclotomic inv = a.back().inverse();
    for (auto& c : a) c *= inv;
    return a;
}

inline Dense gcd(Dense a, Dense b) {
    trim(a), trim(b);
    while (!b.empty()) {
        Dense r = divmod(a, b).second;
        a = std::move(b);
        b = monic(std::move(r));
    }
    return monic(a);
}

inline Cyclotomic eval(const Dense& a, const Cyclotomic& z) {
    Cyclotomic s;
    for (long i = static_cast<long>(a.size()) - 1; i >= 0; --i) s = s * z + a[i];
    return s;
}

inline long degree(const Dense& a) { return static_cast<long>(a.size()) - 1; }

}  // namespace poly

// num/den with den a polynomial in y whose constant term is 1.
class RationalFunction {
  public:
    RationalFunction() : num_(LaurentPoly::zero(1)), den_(Cyclotomic(1), 1) {}
    RationalFunction(const LaurentPoly& p) : num_(p), den_(Cyclotomic(1), p.mu()) {}
    RationalFunction(const Cyclotomic& c) : RationalFunction(LaurentPoly(c)) {}

    static RationalFunction make(LaurentPoly num, LaurentPoly den) {
        if (den.is_zero()) throw DivisionByZero();
        int m = std::lcm(num.mu(), den.mu());
        num = num.with_mu(m), den = den.with_mu(m);
        RationalFunction r;
        if (num.is_zero()) {
            r.num_ = LaurentPoly::zero(m);
            r.den_ = LaurentPoly(Cyclotomic(1), m);
            return r;
        }
        long kd = den.lowest(), kn = num.lowest();
        poly::Dense N = poly::from_laurent(num, kn), D = poly::from_laurent(den, kd);
        if (D.size() > 1 && N.size() > 1) {
            poly::Dense g = poly::gcd(N, D);
            if (g.size() > 1) {
                N = poly::divmod(N, g).first;
                D = poly::divmod(D, g).first;
            }
        }
        Cyclotomic c0inv = D[0].inverse();
        for (auto& c : N) c *= c0inv;
        for (auto& c : D) c *= c0inv;
        r.num_ = poly::to_laurent(N, m, kn - kd);
        r.den_ = poly::to_laurent(D, m, 0);
        return r;
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    int mu() const { return num_.mu(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_.is_monomial(); }
    LaurentPoly as_laurent() const {
        if (!is_laurent()) throw DomainError("not a Laurent polynomial");
        return num_;
    }

    RationalFunction inverse() const { return make(den_, num_); }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return make(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return make(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return make(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        return make(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    Cyclotomic at_one() const {
        Cyclotomic d = den_.at_one();
        if (d.is_zero()) throw DivisionByZero();
        return num_.at_one() / d;
    }

    // y-adic order and degree at infinity, in y units
    long y_valuation() const { return num_.lowest() - den_.lowest(); }
    long y_degree() const { return num_.highest() - den_.highest(); }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    std::string to_string() const {
        if (den_.is_monomial()) return num_.to_string();
        return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
    }

  private:
    LaurentPoly num_, den_;
};

// f = scalar * y^y_power * prod (y^step - root)^mult * non_unit_part,
// where non_unit_part has constant term 1 and no root-of-unity roots.
struct UnitFactorization {
    Cyclotomic scalar;
    long y_power = 0;
    int step = 1;
    std::vector<std::pair<Cyclotomic, int>> factors;
    LaurentPoly non_unit_part;

    bool non_unit_trivial() const { return non_unit_part == LaurentPoly(Cyclotomic(1), non_unit_part.mu()); }

    LaurentPoly reassemble() const {
        int mu = non_unit_part.mu();
        LaurentPoly r = non_unit_part.scaled(scalar).shifted(y_power);
        for (auto& [w, m] : factors) {
            LaurentPoly lin = LaurentPoly::monomial(1, step, mu) - LaurentPoly(w, mu);
            for (int k = 0; k < m; ++k) r *= lin;
        }
        return r;
    }
};

namespace detail {

inline std::vector<Rational> rat_poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

inline int moebius(long n) {
    int r = 1;
    for (auto [p, e] : nt::factorize(n)) {
        if (e > 1) return 0;
        r = -r;
    }
    return r;
}

// Phi_m over Z, low degree first: prod_{d|m} (x^d - 1)^moebius(m/d)
inline std::vector<Rational> cyclotomic_poly(long m) {
    std::vector<Rational> num{Rational(1)};
    std::vector<long> divs;
    for (long d = 1; d <= m; ++d)
        if (m % d == 0) {
            int mo = moebius(m / d);
            if (mo == 1) {
                std::vector<Rational> f(d + 1);
                f[0] = -1, f[d] = 1;
                num = rat_poly_mul(num, f);
            } else if (mo == -1) {
                divs.push_back(d);
            }
        }
    for (long d : divs) {
        // divide by x^d - 1
        std::vector<Rational> q(num.size() - d);
        for (long i = static_cast<long>(num.size()) - 1; i >= d; --i) {
            q[i - d] = num[i];
            num[i - d] += num[i];
            num[i] = 0;
        }
        num = q;
    }
    if (num.back() < 0)
        for (auto& c : num) c = -c;
    return num;
}

inline bool rat_divides(const std::vector<Rational>& b, std::vector<Rational> a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    for (long i = static_cast<long>(a.size()) - 1; i >= static_cast<long>(b.size()) - 1; --i) {
        if (a[i] == 0) continue;
        Rational t = a[i] / b.back();
        long s = i - static_cast<long>(b.size()) + 1;
        for (std::size_t j = 0; j < b.size(); ++j) a[s + j] -= t * b[j];
    }
    for (auto& c : a)
        if (c != 0) return false;
    return true;
}

}  // namespace detail

// Splits off every cyclotomic-root linear factor. The search over orders m is
// complete unless `bound` > 0 caps it.
inline UnitFactorization factor_unit_part(const LaurentPoly& f, long bound = 0) {
    if (f.is_zero()) throw DomainError("factor_unit_part: zero");
    int mu = f.mu();
    UnitFactorization u;
    u.y_power = f.lowest();
    LaurentPoly g = f.shifted(-u.y_power);
    u.step = g.is_x_polynomial() ? mu : 1;
    // h(z) with z = y^step
    poly::Dense h;
    for (auto& [e, c] : g.terms()) {
        long k = e / u.step;
        if (static_cast<long>(h.size()) <= k) h.resize(k + 1);
        h[k] = c;
    }
    if (h.size() > 1) {
        long cond = 1;
        for (auto& c : h) cond = std::lcm(cond, c.conductor());
        // norm polynomial in Q[z]
        poly::Dense acc{Cyclotomic(1)};
        for (long j = 1; j <= cond; ++j) {
            if (std::gcd(j, cond) != 1) continue;
            poly::Dense hj;
            for (auto& c : h) hj.push_back(c.galois(j));
            acc = poly::mul(acc, hj);
        }
        std::vector<Rational> N;
        for (auto& c : acc) N.push_back(c.to_rational());
        long D = static_cast<long>(N.size()) - 1;
        long mmax = 2 * D * D + 2;
        if (bound > 0) mmax = std::min(mmax, bound);
        for (long m = 1; m <= mmax && h.size() > 1; ++m) {
            if (nt::euler_phi(m) > D) continue;
            if (!detail::rat_divides(detail::cyclotomic_poly(m), N)) continue;
            for (long j = 0; j < m && h.size() > 1; ++j) {
                if (std::gcd(j, m) != 1) continue;
                Cyclotomic w = Cyclotomic::zeta(m, j);
                int mult = 0;
                while (h.size() > 1 && poly::eval(h, w).is_zero()) {
                    h = poly::divmod(h, poly::Dense{-w, Cyclotomic(1)}).first;
                    ++mult;
                }
                if (mult) u.factors.emplace_back(w, mult);
            }
        }
    }
    u.scalar = h[0];
    Cyclotomic inv = h[0].inverse();
    LaurentPoly rest = LaurentPoly::zero(mu);
    for (std::size_t k = 0; k < h.size(); ++k) rest.add_term(static_cast<long>(k) * u.step, h[k] * inv);
    u.non_unit_part = rest;
    return u;
}

}  // namespace rouquier
