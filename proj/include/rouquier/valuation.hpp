#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "laurent.hpp"

namespace rouquier {

namespace fp {

// Polynomials over F_p, low degree first, trimmed.
using Poly = std::vector<long>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly sub(Poly a, const Poly& b, long p) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = nt::mod(a[i] - b[i], p);
    trim(a);
    return a;
}

inline Poly mul(const Poly& a, const Poly& b, long p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
}

inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b, long p) {
    trim(a);
    if (b.empty()) throw DivisionByZero();
    if (a.size() < b.size()) return {{}, a};
    long inv = nt::inv_mod(b.back(), p);
    Poly q(a.size() - b.size() + 1);
    for (long i = static_cast<long>(a.size()) - 1; i >= static_cast<long>(b.size()) - 1; --i) {
        long t = a[i] * inv % p;
        if (!t) continue;
        long s = i - static_cast<long>(b.size()) + 1;
        q[s] = t;
        for (std::size_t j = 0; j < b.size(); ++j) a[s + j] = nt::mod(a[s + j] - t * b[j], p);
    }
    trim(a), trim(q);
    return {q, a};
}

inline Poly monic(Poly a, long p) {
    trim(a);
    if (a.empty()) return a;
    long inv = nt::inv_mod(a.back(), p);
    for (auto& c : a) c = c * inv % p;
    return a;
}

inline Poly gcd(Poly a, Poly b, long p) {
    trim(a), trim(b);
    while (!b.empty()) {
        Poly r = divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}

inline Poly powmod(Poly base, const Integer& e, const Poly& m, long p) {
    Poly r{1};
    base = divmod(base, m, p).second;
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (long i = static_cast<long>(bits) - 1; i >= 0; --i) {
        r = divmod(mul(r, r, p), m, p).second;
        if (mpz_tstbit(e.get_mpz_t(), i)) r = divmod(mul(r, base, p), m, p).second;
    }
    return r;
}

inline std::string to_string(const Poly& a) {
    std::ostringstream os;
    bool first = true;
    for (long i = static_cast<long>(a.size()) - 1; i >= 0; --i) {
        if (!a[i]) continue;
        if (!first) os << " + ";
        first = false;
        if (a[i] != 1 || i == 0) os << a[i];
        if (i > 0) os << (a[i] != 1 ? "*t" : "t");
        if (i > 1) os << "^" << i;
    }
    return first ? "0" : os.str();
}

// Equal-degree factorization of a squarefree product of degree-d irreducibles.
inline void split_equal_degree(const Poly& F, long d, long p, std::mt19937_64& rng, std::vector<Poly>& out) {
    long n = static_cast<long>(F.size()) - 1;
    if (n == d) {
        out.push_back(F);
        return;
    }
    Integer q;
    mpz_ui_pow_ui(q.get_mpz_t(), p, d);
    std::uniform_int_distribution<long> dist(0, p - 1);
    for (;;) {
        Poly a(n);
        for (auto& c : a) c = dist(rng);
        trim(a);
        if (a.size() < 2) continue;
        Poly b;
        if (p == 2) {
            // absolute trace to F_2 of a in F[t]/(F), summed over the d-level
            Poly term = divmod(a, F, p).second, acc = term;
            for (long i = 1; i < d; ++i) {
                term = divmod(mul(term, term, p), F, p).second;
                if (acc.size() < term.size()) acc.resize(term.size());
                for (std::size_t j = 0; j < term.size(); ++j) acc[j] ^= term[j];
                trim(acc);
            }
            b = acc;
        } else {
            b = sub(powmod(a, (q - 1) / 2, F, p), Poly{1}, p);
        }
        Poly g = gcd(F, b, p);
        long dg = static_cast<long>(g.size()) - 1;
        if (dg <= 0 || dg >= n) continue;
        split_equal_degree(g, d, p, rng, out);
        split_equal_degree(monic(divmod(F, g, p).first, p), d, p, rng, out);
        return;
    }
}

}  // namespace fp

// A prime of Q(zeta_conductor) above p, given by an irreducible factor of the
// prime-to-p cyclotomic polynomial mod p.
struct PrimeIdealSpec {
    long p = 0;
    long conductor = 1;
    fp::Poly factor;  // monic, low degree first
    int e = 1;
    int f = 1;

    friend bool operator==(const PrimeIdealSpec&, const PrimeIdealSpec&) = default;
    friend bool operator<(const PrimeIdealSpec& a, const PrimeIdealSpec& b) {
        return std::tie(a.p, a.conductor, a.factor) < std::tie(b.p, b.conductor, b.factor);
    }
    std::string to_string() const {
        std::ostringstream os;
        os << "(" << p << ", " << fp::to_string(factor) << ") in Q(zeta_" << conductor << ") e=" << e << " f=" << f;
        return os.str();
    }
};

inline std::vector<PrimeIdealSpec> primes_above(long p, long n) {
    if (!nt::is_prime(p)) throw DomainError("primes_above: " + std::to_string(p) + " is not prime");
    if (n < 1) throw DomainError("primes_above: bad conductor");
    long pa = 1, np = n;
    while (np % p == 0) np /= p, pa *= p;
    int f = static_cast<int>(nt::order_mod(p, np));
    int e = static_cast<int>(nt::euler_phi(pa));
    fp::Poly phi;
    for (auto& c : detail::cyclotomic_poly(np)) phi.push_back(nt::mod(c.get_num().get_si(), p));
    fp::trim(phi);
    std::mt19937_64 rng(0x5eed + p * 1009 + np);
    std::vector<fp::Poly> factors;
    fp::split_equal_degree(phi, f, p, rng, factors);
    // lexicographic on coefficients from the leading term down
    std::sort(factors.begin(), factors.end(), [](const fp::Poly& a, const fp::Poly& b) {
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    std::vector<PrimeIdealSpec> out;
    for (auto& h : factors) out.push_back({p, n, h, e, f});
    return out;
}

// v = +infinity for zero
struct Valuation {
    long value = 0;
    bool infinite = false;
    static Valuation inf() { return {0, true}; }
    friend bool operator==(const Valuation&, const Valuation&) = default;
    bool at_least(long k) const { return infinite || value >= k; }
    std::string to_string() const { return infinite ? "inf" : std::to_string(value); }
};

// The completion of Z[zeta_N] at a prime, modelled as W[pi]/(E(pi)) where W
// is the unramified ring (Z/p^k)[t]/(h) and zeta_{N'} -> Teichmueller(t).
class Completion {
  public:
    explicit Completion(PrimeIdealSpec spec) : spec_(std::move(spec)) {
        long n = spec_.conductor;
        pa_ = 1, np_ = n;
        while (np_ % spec_.p == 0) np_ /= spec_.p, pa_ *= spec_.p;
        alpha_ = np_ == 1 ? 0 : nt::inv_mod(pa_ % np_, np_);
        beta_ = pa_ == 1 ? 0 : nt::inv_mod(np_ % pa_, pa_);
        // E(pi) = Phi_{p^a}(1 + pi)
        std::vector<Rational> phi = detail::cyclotomic_poly(pa_);
        std::vector<Rational> E{0};
        std::vector<Rational> onep{1, 1}, power{1};
        for (std::size_t i = 0; i < phi.size(); ++i) {
            if (E.size() < power.size()) E.resize(power.size());
            for (std::size_t j = 0; j < power.size(); ++j) E[j] += phi[i] * power[j];
            power = detail::rat_poly_mul(power, onep);
        }
        for (auto& c : E) eis_.push_back(c.get_num());
    }

    static std::shared_ptr<const Completion> get(const PrimeIdealSpec& s) {
        static std::mutex mu;
        static std::map<PrimeIdealSpec, std::shared_ptr<const Completion>> cache;
        std::lock_guard lock(mu);
        auto& slot = cache[s];
        if (!slot) slot = std::make_shared<const Completion>(s);
        return slot;
    }

    const PrimeIdealSpec& spec() const { return spec_; }

    // Image mod p^k of a * p^shift; entries indexed [pi-degree * f + t-degree].
    struct Image {
        long shift = 0;
        std::vector<Integer> data;
    };

    void check_field(const Cyclotomic& a) const {
        if (spec_.conductor % a.conductor())
            throw DomainError("valuation: element of Q(zeta_" + std::to_string(a.conductor()) +
                              ") not in Q(zeta_" + std::to_string(spec_.conductor) + ")");
    }

    Image image(const Cyclotomic& a, int k) const {
        check_field(a);
        const Tables& T = tables(k);
        long p = spec_.p, ef = static_cast<long>(spec_.e) * spec_.f;
        Image img;
        img.data.assign(ef, 0);
        Integer D = 1;
        for (auto& [i, c] : a.terms()) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), c.get_den().get_mpz_t());
        long r = 0;
        Integer Dp = D;
        while (mpz_divisible_ui_p(Dp.get_mpz_t(), p)) Dp /= p, ++r;
        img.shift = r;
        Integer inv;
        mpz_invert(inv.get_mpz_t(), Dp.get_mpz_t(), T.M.get_mpz_t());
        long s = spec_.conductor / a.conductor();
        long N = spec_.conductor;
        for (auto& [i, c] : a.terms()) {
            long ii = i * s % N;
            long u = np_ == 1 ? 0 : alpha_ * ii % np_;
            long w = pa_ == 1 ? 0 : beta_ * ii % pa_;
            Integer b = c.get_num() * (D / c.get_den());
            b = b * inv % T.M;
            const auto& om = T.omega[u];
            const auto& pw = T.onepi[w];
            for (int l = 0; l < spec_.e; ++l) {
                if (pw[l] == 0) continue;
                Integer bl = b * pw[l] % T.M;
                for (int j = 0; j < spec_.f; ++j) {
                    Integer& slot = img.data[l * spec_.f + j];
                    slot = (slot + bl * om[j]) % T.M;
                }
            }
        }
        for (auto& x : img.data)
            if (x < 0) x += T.M;
        return img;
    }

    // Lower bound certified only when result < e*k.
    long image_valuation(const std::vector<Integer>& data, int k) const {
        long best = static_cast<long>(spec_.e) * k;
        for (int l = 0; l < spec_.e; ++l)
            for (int j = 0; j < spec_.f; ++j) {
                const Integer& x = data[l * spec_.f + j];
                if (x == 0) continue;
                long v = static_cast<long>(mpz_scan1(x.get_mpz_t(), 0));
                if (spec_.p != 2) {
                    Integer y = x;
                    v = 0;
                    while (mpz_divisible_ui_p(y.get_mpz_t(), spec_.p)) y /= spec_.p, ++v;
                }
                best = std::min(best, v * spec_.e + l);
            }
        return best;
    }

    Valuation val(const Cyclotomic& a) const {
        if (a.is_zero()) return Valuation::inf();
        for (int k = 32;; k *= 2) {
            Image img = image(a, k);
            long v = image_valuation(img.data, k);
            if (v < static_cast<long>(spec_.e) * k) return {v - static_cast<long>(spec_.e) * img.shift, false};
        }
    }

    // true iff val(a) >= bound, decided without chasing exact valuations
    bool val_at_least(const Cyclotomic& a, long bound) const {
        if (a.is_zero()) return true;
        return val(a).at_least(bound);
    }

    const Integer& modulus(int k) const { return tables(k).M; }

  private:
    struct Tables {
        Integer M;
        std::vector<std::vector<Integer>> omega;  // omega^u, u < N'
        std::vector<std::vector<Integer>> onepi;  // (1+pi)^w mod E, w < p^a
    };

    PrimeIdealSpec spec_;
    long pa_ = 1, np_ = 1, alpha_ = 0, beta_ = 0;
    std::vector<Integer> eis_;
    mutable std::mutex mu_;
    mutable std::map<int, std::unique_ptr<Tables>> tables_;

    std::vector<Integer> mul_w(const std::vector<Integer>& a, const std::vector<Integer>& b, const Integer& M) const {
        int f = spec_.f;
        std::vector<Integer> r(2 * f - 1, 0);
        for (int i = 0; i < f; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < f; ++j) r[i + j] += a[i] * b[j];
        }
        reduce_w(r, M);
        return r;
    }
    void reduce_w(std::vector<Integer>& r, const Integer& M) const {
        int f = spec_.f;
        for (long i = static_cast<long>(r.size()) - 1; i >= f; --i) {
            if (r[i] == 0) continue;
            Integer c = r[i];
            r[i] = 0;
            for (int j = 0; j < f; ++j) r[i - f + j] -= c * spec_.factor[j];
        }
        r.resize(f);
        for (auto& x : r) {
            x %= M;
            if (x < 0) x += M;
        }
    }

    const Tables& tables(int k) const {
        std::lock_guard lock(mu_);
        auto& slot = tables_[k];
        if (slot) return *slot;
        auto T = std::make_unique<Tables>();
        long p = spec_.p;
        mpz_ui_pow_ui(T->M.get_mpz_t(), p, k);
        const Integer& M = T->M;
        int f = spec_.f;
        // Teichmueller lift of t: t^(q^(k-1)), q = p^f
        std::vector<Integer> t{0, 1};
        reduce_w(t, M);
        Integer q;
        mpz_ui_pow_ui(q.get_mpz_t(), p, f);
        std::vector<Integer> w = t;
        for (int it = 0; it + 1 < k; ++it) {
            std::vector<Integer> r(f, 0);
            r[0] = 1;
            std::vector<Integer> b = w;
            std::size_t bits = mpz_sizeinbase(q.get_mpz_t(), 2);
            for (long bi = static_cast<long>(bits) - 1; bi >= 0; --bi) {
                r = mul_w(r, r, M);
                if (mpz_tstbit(q.get_mpz_t(), bi)) r = mul_w(r, b, M);
            }
            w = r;
        }
        std::vector<Integer> one(f, 0);
        one[0] = 1;
        T->omega.push_back(one);
        for (long u = 1; u < np_; ++u) T->omega.push_back(mul_w(T->omega.back(), w, M));
        // powers of 1 + pi modulo E
        int e = spec_.e;
        std::vector<Integer> cur(e, 0);
        cur[0] = 1;
        T->onepi.push_back(cur);
        for (long u = 1; u < pa_; ++u) {
            std::vector<Integer> nx(e + 1, 0);
            for (int l = 0; l < e; ++l) nx[l] += cur[l], nx[l + 1] += cur[l];
            // reduce pi^e using monic E
            Integer c = nx[e];
            for (int l = 0; l < e; ++l) nx[l] -= c * eis_[l];
            nx.resize(e);
            for (auto& x : nx) {
                x %= M;
                if (x < 0) x += M;
            }
            cur = nx;
            T->onepi.push_back(cur);
        }
        slot = std::move(T);
        return *slot;
    }
};

inline Valuation val(const PrimeIdealSpec& spec, const Cyclotomic& a) { return Completion::get(spec)->val(a); }

enum class Membership { yes, no, unsupported };

inline const char* to_string(Membership m) {
    switch (m) {
        case Membership::yes: return "yes";
        case Membership::no: return "no";
        default: return "unsupported";
    }
}

// Non-unit part of the form 1 + x*Z[x]
inline bool is_integer_one_plus_x(const LaurentPoly& g) {
    if (!g.is_x_polynomial()) return false;
    if (g.coeff(0) != Cyclotomic(1)) return false;
    for (auto& [e, c] : g.terms()) {
        if (e < 0) return false;
        if (!c.is_rational() || c.to_rational().get_den() != 1) return false;
    }
    return true;
}

// Smallest valuation of the coefficients of S's numerator once S's denominator
// is divided by its scalar; nullopt when the denominator is not a unit of O.
inline std::optional<Valuation> content_valuation(const RationalFunction& S, const PrimeIdealSpec& spec) {
    if (S.is_zero()) return Valuation::inf();
    UnitFactorization u = factor_unit_part(S.den());
    if (!u.non_unit_trivial() && !is_integer_one_plus_x(u.non_unit_part)) return std::nullopt;
    auto C = Completion::get(spec);
    Cyclotomic inv = u.scalar.inverse();
    Valuation best = Valuation::inf();
    for (auto& [e, c] : S.num().terms()) {
        Valuation v = C->val(c * inv);
        if (!v.infinite && (best.infinite || v.value < best.value)) best = v;
    }
    return best;
}

inline Membership op_member(const RationalFunction& S, const PrimeIdealSpec& spec) {
    auto v = content_valuation(S, spec);
    if (!v) return Membership::unsupported;
    return v->at_least(0) ? Membership::yes : Membership::no;
}

}  // namespace rouquier
