#pragma once

#include <complex>
#include <random>

#include <rouquier/rouquier.hpp>

namespace testing_support {

using cplx = std::complex<double>;
using namespace rouquier;

// Floating-point oracle; only used to cross-check exact results.
inline cplx numeric(const Cyclotomic& c) {
    cplx s = 0;
    for (auto& [i, a] : c.terms()) s += a.get_d() * std::polar(1.0, 2 * M_PI * static_cast<double>(i) / c.conductor());
    return s;
}

inline cplx numeric(const LaurentPoly& p, cplx y) {
    cplx s = 0;
    for (auto& [e, c] : p.terms()) s += numeric(c) * std::pow(y, static_cast<double>(e));
    return s;
}

inline cplx numeric(const RationalFunction& r, cplx y) { return numeric(r.num(), y) / numeric(r.den(), y); }

inline Cyclotomic random_cyclotomic(std::mt19937& rng, long n, int terms = 4) {
    std::uniform_int_distribution<long> e(0, n - 1), c(-9, 9), d(1, 4);
    std::map<long, Rational> raw;
    for (int k = 0; k < terms; ++k) raw[e(rng)] += ratio(c(rng), d(rng));
    return Cyclotomic::make(n, raw);
}

inline LaurentPoly random_laurent(std::mt19937& rng, int mu, long n) {
    std::uniform_int_distribution<long> e(-3, 4);
    LaurentPoly p = LaurentPoly::zero(mu);
    for (int k = 0; k < 3; ++k) p.add_term(e(rng), random_cyclotomic(rng, n, 2));
    return p;
}

inline bool close(cplx a, cplx b, double tol = 1e-9) { return std::abs(a - b) <= tol * (1 + std::abs(a)); }

}  // namespace testing_support
