#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "numtheory.hpp"

namespace rouquier {

using Integer = mpz_class;
using Rational = mpq_class;

// canonical a/b
inline Rational ratio(long a, long b) {
    if (b == 0) throw DivisionByZero();
    Rational r(a, b);
    r.canonicalize();
    return r;
}

inline Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw DomainError("bad rational literal '" + s + "'");
    if (r.get_den() == 0) throw DivisionByZero();
    r.canonicalize();
    return r;
}

// Element of Q(zeta_n), stored at its minimal conductor in a fixed basis of
// exponents: i is a basis exponent iff for every p^e || n the base-p digit of
// i at position e-1 is nonzero (p odd) or zero (p = 2).
class Cyclotomic {
  public:
    using Term = std::pair<long, Rational>;

    Cyclotomic() = default;
    Cyclotomic(long v) : Cyclotomic(Rational(v)) {}
    Cyclotomic(int v) : Cyclotomic(Rational(v)) {}
    Cyclotomic(const Rational& r) {
        if (r != 0) terms_.emplace_back(0, r);
    }

    // Any (n, exponent -> coefficient) pairs; exponents are taken mod n.
    static Cyclotomic make(long n, const std::map<long, Rational>& raw) {
        if (n < 1) throw DomainError("conductor must be positive");
        std::vector<Rational> dense(n);
        for (auto& [k, c] : raw) dense[nt::mod(k, n)] += c;
        return from_dense(n, std::move(dense));
    }

    static Cyclotomic zeta(long n, long k = 1) {
        return make(n, {{k, Rational(1)}});
    }

    long conductor() const { return n_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const { return n_ == 1; }
    Rational to_rational() const {
        if (!is_rational()) throw DomainError("not rational: " + to_string());
        return terms_.empty() ? Rational(0) : terms_[0].second;
    }
    // The basis is an integral basis, so integrality is coefficientwise.
    bool is_integral() const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [](const Term& t) { return t.second.get_den() == 1; });
    }

    Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }
    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        long L = std::lcm(a.n_, b.n_);
        std::vector<Rational> dense(L);
        a.scatter(dense, L, 1);
        b.scatter(dense, L, 1);
        return from_dense(L, std::move(dense));
    }
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.is_rational()) return b.scaled(a.terms_[0].second);
        if (b.is_rational()) return a.scaled(b.terms_[0].second);
        long L = std::lcm(a.n_, b.n_);
        long sa = L / a.n_, sb = L / b.n_;
        std::vector<Rational> dense(L);
        for (auto& [i, c] : a.terms_)
            for (auto& [j, d] : b.terms_) dense[(i * sa + j * sb) % L] += c * d;
        return from_dense(L, std::move(dense));
    }
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this / o; }

    Cyclotomic scaled(const Rational& r) const {
        if (r == 0) return {};
        Cyclotomic out = *this;
        for (auto& t : out.terms_) t.second *= r;
        return out;
    }

    Cyclotomic pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Cyclotomic r(1), b = *this;
        while (e) {
            if (e & 1) r *= b;
            e >>= 1;
            if (e) b *= b;
        }
        return r;
    }

    // zeta_n -> zeta_n^j, for j prime to the conductor
    Cyclotomic galois(long j) const {
        if (is_rational()) return *this;
        long jj = nt::mod(j, n_);
        if (std::gcd(jj, n_) != 1) throw DomainError("galois: exponent not prime to conductor");
        std::vector<Rational> dense(n_);
        for (auto& [i, c] : terms_) dense[i * jj % n_] += c;
        return from_dense(n_, std::move(dense));
    }
    Cyclotomic conj() const { return galois(-1); }

    std::vector<Cyclotomic> galois_conjugates() const {
        std::vector<Cyclotomic> out;
        for (long j = 1; j <= n_; ++j)
            if (std::gcd(j, n_) == 1) out.push_back(galois(j));
        return out;
    }

    // Norm down to Q from Q(zeta_m); m = 0 means the element's own field.
    Rational norm(long m = 0) const {
        if (m == 0) m = n_;
        if (m % n_) throw DomainError("norm: field does not contain element");
        Cyclotomic prod(1);
        for (long j = 2; j <= n_; ++j)
            if (std::gcd(j, n_) == 1) prod *= galois(j);
        Rational N = (prod * *this).to_rational();
        Rational r(1);
        for (long k = nt::euler_phi(m) / nt::euler_phi(n_); k > 0; --k) r *= N;
        return r;
    }

    Cyclotomic inverse() const {
        if (is_zero()) throw DivisionByZero();
        if (is_rational()) return Cyclotomic(Rational(1) / terms_[0].second);
        Cyclotomic prod(1);
        for (long j = 2; j <= n_; ++j)
            if (std::gcd(j, n_) == 1) prod *= galois(j);
        Rational N = (prod * *this).to_rational();
        return prod.scaled(Rational(1) / N);
    }

    bool is_root_of_unity() const {
        long m = n_ % 2 ? 2 * n_ : n_;
        return pow(m) == Cyclotomic(1);
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }
    // Arbitrary total order, used for containers.
    friend bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.terms_ < b.terms_;
    }

    std::size_t hash() const {
        std::size_t h = std::hash<long>{}(n_);
        for (auto& [i, c] : terms_) {
            h = h * 1000003u ^ std::hash<long>{}(i);
            h = h * 1000003u ^ std::hash<std::string>{}(c.get_str());
        }
        return h;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [i, c] : terms_) {
            Rational a = c;
            if (!first) os << (a < 0 ? " - " : " + ");
            else if (a < 0) os << "-";
            if (a < 0) a = -a;
            if (i == 0) os << a.get_str();
            else {
                if (a != 1) os << a.get_str() << "*";
                os << "E(" << n_ << ")";
                if (i != 1) os << "^" << i;
            }
            first = false;
        }
        return os.str();
    }

    // Coefficients of this element written over Q(zeta_L), L a multiple of the
    // conductor, as a dense exponent vector (not reduced).
    void scatter(std::vector<Rational>& dense, long L, const Rational& scale) const {
        long s = L / n_;
        for (auto& [i, c] : terms_) dense[i * s % L] += c * scale;
    }

    static Cyclotomic from_dense(long n, std::vector<Rational> dense) {
        if (n % 4 == 2) {
            long m = n / 2, half = (m + 1) / 2;
            std::vector<Rational> d2(m);
            for (long i = 0; i < n; ++i) {
                if (dense[i] == 0) continue;
                long j = m == 1 ? 0 : (i * half) % m;
                if (i % 2) d2[j] -= dense[i];
                else d2[j] += dense[i];
            }
            n = m;
            dense = std::move(d2);
        }
        reduce(n, dense);
        return minimize(n, std::move(dense));
    }

  private:
    long n_ = 1;
    std::vector<Term> terms_;  // sorted by exponent, nonzero coefficients

    static void reduce(long n, std::vector<Rational>& dense) {
        for (auto [p, e] : nt::factorize(n)) {
            long pe = nt::ipow(p, e), pe1 = pe / p, q = n / p;
            for (long i = 0; i < n; ++i) {
                if (dense[i] == 0) continue;
                long digit = (i % pe) / pe1;
                bool bad = p == 2 ? digit == 1 : digit == 0;
                if (!bad) continue;
                Rational c = dense[i];
                dense[i] = 0;
                for (long k = 1; k < p; ++k) dense[(i + k * q) % n] -= c;
            }
        }
    }

    // Input is reduced at n (n not 2 mod 4).
    static Cyclotomic minimize(long n, std::vector<Rational> dense) {
        for (;;) {
            bool shrunk = false;
            for (auto [p, e] : nt::factorize(n)) {
                if (e >= 2) {
                    bool all = true;
                    for (long i = 0; i < n && all; ++i)
                        if (dense[i] != 0 && i % p) all = false;
                    if (!all) continue;
                    std::vector<Rational> d2(n / p);
                    for (long i = 0; i < n; i += p) d2[i / p] = dense[i];
                    n /= p;
                    dense = std::move(d2);
                    if (n % 4 == 2) return from_dense(n, std::move(dense));
                    reduce(n, dense);
                    shrunk = true;
                    break;
                }
                if (p == 2) continue;
                // Q(zeta_n) = Q(zeta_m)(zeta_p) with basis zeta_p^1..zeta_p^(p-1)
                long m = n / p;
                long alpha = nt::inv_mod(m % p, p);
                long beta = m == 1 ? 0 : nt::inv_mod(p % m, m);
                std::vector<std::vector<Rational>> parts(p, std::vector<Rational>(m));
                for (long i = 0; i < n; ++i) {
                    if (dense[i] == 0) continue;
                    parts[alpha * i % p][m == 1 ? 0 : beta * i % m] += dense[i];
                }
                Cyclotomic first = from_dense(m, parts[1]);
                bool same = true;
                for (long k = 2; k < p && same; ++k) same = from_dense(m, parts[k]) == first;
                if (same) return -first;
            }
            if (!shrunk) break;
        }
        Cyclotomic out;
        for (long i = 0; i < n; ++i)
            if (dense[i] != 0) out.terms_.emplace_back(i, dense[i]);
        out.n_ = out.terms_.empty() ? 1 : n;
        return out;
    }
};

struct CyclotomicHash {
    std::size_t operator()(const Cyclotomic& c) const { return c.hash(); }
};

// sqrt(-3) and friends show up in tests and tables
inline Cyclotomic sqrt_minus(long p) {
    // Gauss sum for an odd prime p: sum of Legendre(k/p) zeta_p^k
    if (!nt::is_prime(p) || p == 2) throw DomainError("sqrt_minus: odd prime expected");
    std::map<long, Rational> raw;
    for (long k = 1; k < p; ++k) {
        long s = 1;
        for (long j = 0; j < (p - 1) / 2; ++j) s = s * k % p;
        raw[k] = s == 1 ? 1 : -1;
    }
    Cyclotomic g = Cyclotomic::make(p, raw);
    // g^2 = (-1)^((p-1)/2) p
    if (p % 4 == 3) return g;
    return g * Cyclotomic::zeta(4);
}

}  // namespace rouquier
