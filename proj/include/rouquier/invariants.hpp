#pragma once

#include <set>
#include <vector>

#include "catalog.hpp"

namespace rouquier {

struct InvariantRecord {
    std::string name;
    Cyclotomic f;        // lowest-degree coefficient of the Schur element
    Rational a, A;       // generic degree valuation and degree, in powers of x
    long b = 0;          // valuation of the fake degree
    Rational N;          // R'(1)
    bool special = false;
};

// Lowest-degree coefficient of c_chi (defined up to a root of unity).
inline Cyclotomic f_of(const GroupDatum& W, int chi) { return W.schur.at(chi).lowest_coeff(); }

// Generic degree P(W) / c_chi
inline RationalFunction generic_degree(const GroupDatum& W, int chi) {
    return RationalFunction::make(poincare(W.degrees, W.mu), W.schur.at(chi));
}

inline std::vector<InvariantRecord> compute_invariants(const GroupDatum& W) {
    std::vector<InvariantRecord> out;
    for (int i = 0; i < W.num_irr(); ++i) {
        InvariantRecord r;
        r.name = W.characters[i].name;
        r.f = f_of(W, i);
        RationalFunction D = generic_degree(W, i);
        r.a = ratio(D.y_valuation(), D.mu());
        r.A = ratio(D.y_degree(), D.mu());
        const LaurentPoly& R = W.fake_degrees.at(i);
        r.b = R.lowest() / R.mu();
        r.N = R.x_derivative_at_one().to_rational();
        r.special = r.a == r.b;
        out.push_back(r);
    }
    return out;
}

// N + N* - (N(chi) + N(chi*)) / chi(1)
inline Rational omega_pi_exponent(const GroupDatum& W, int chi) {
    const auto& R = W.fake_degrees;
    Rational n = R[chi].x_derivative_at_one().to_rational() + R[W.conj_perm[chi]].x_derivative_at_one().to_rational();
    return Rational(W.n_hyperplanes + W.n_reflections) - n / W.dim(chi).to_rational();
}

// Primes dividing the norm of some f_chi.
inline std::vector<long> bad_primes(const GroupDatum& W) {
    std::set<long> ps;
    long cond = W.field_conductor();
    for (int i = 0; i < W.num_irr(); ++i) {
        Rational N = f_of(W, i).norm(std::lcm(cond, f_of(W, i).conductor()));
        for (const Integer* z : {&N.get_num(), &N.get_den()}) {
            Integer v = abs(*z);
            for (long p = 2; v > 1; ++p) {
                if (!mpz_divisible_ui_p(v.get_mpz_t(), p)) continue;
                ps.insert(p);
                while (mpz_divisible_ui_p(v.get_mpz_t(), p)) v /= p;
            }
        }
    }
    return {ps.begin(), ps.end()};
}

// c_chi * sum_psi <Res chi, psi> / c_psi over Irr(W')
inline RationalFunction relative_trace_scalar(const GroupDatum& W, const GroupDatum& sub,
                                              const ParabolicEmbedding& emb, int chi) {
    RationalFunction s;
    for (int psi = 0; psi < sub.num_irr(); ++psi) {
        long m = emb.induction.at(psi).at(chi);
        if (m == 0) continue;
        s += RationalFunction::make(LaurentPoly(Cyclotomic(m), sub.mu), sub.schur[psi]);
    }
    return s * RationalFunction(W.schur[chi]);
}

// Galois group of the character field acting on Irr(W), as index permutations.
inline std::vector<std::vector<int>> galois_orbits_action(const GroupDatum& W) {
    long n = 1;
    for (auto& ch : W.characters)
        for (auto& v : ch.values) n = std::lcm(n, v.conductor());
    std::vector<std::vector<int>> perms;
    for (long j = 1; j <= n; ++j) {
        if (std::gcd(j, n) != 1) continue;
        std::vector<int> perm(W.num_irr(), -1);
        for (int a = 0; a < W.num_irr(); ++a)
            for (int b = 0; b < W.num_irr() && perm[a] < 0; ++b) {
                bool same = true;
                for (std::size_t c = 0; c < W.classes.size() && same; ++c)
                    same = W.characters[b].values[c] == W.characters[a].values[c].galois(j);
                if (same) perm[a] = b;
            }
        perms.push_back(perm);
    }
    return perms;
}

}  // namespace rouquier
