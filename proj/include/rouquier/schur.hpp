#pragma once

#include <vector>

#include "laurent.hpp"

namespace rouquier {

// Schur elements of the cyclic Hecke algebra with parameters
// (x, zeta_d, ..., zeta_d^(d-1)); entry i belongs to the eigenvalue of index i.
inline std::vector<LaurentPoly> cyclic_schur(int d, int mu) {
    LaurentPoly x = LaurentPoly::x(mu);
    auto lambda = [&](int j) { return j == 0 ? x : LaurentPoly(Cyclotomic::zeta(d, j), mu); };
    std::vector<LaurentPoly> out;
    for (int i = 0; i < d; ++i) {
        RationalFunction c(LaurentPoly(Cyclotomic(1), mu));
        for (int j = 0; j < d; ++j) {
            if (j == i) continue;
            c *= RationalFunction::make(lambda(j) - lambda(i), lambda(j));
        }
        out.push_back(c.as_laurent());
    }
    return out;
}

// Equal-parameter dihedral Schur elements, in the order
// trivial, sign, the 2-dimensional rho_1..rho_m, then (n even) the two other
// linear characters.
inline std::vector<LaurentPoly> dihedral_schur(int n, int mu = 2) {
    LaurentPoly x = LaurentPoly::x(mu), one(Cyclotomic(1), mu);
    LaurentPoly geo = LaurentPoly::zero(mu);
    for (int i = 0; i < n; ++i) geo += LaurentPoly::monomial(1, static_cast<long>(i) * mu, mu);
    LaurentPoly P = (one + x) * geo;
    std::vector<LaurentPoly> out{P, P.shifted(-static_cast<long>(n) * mu)};
    for (int j = 1; j <= (n - 1) / 2; ++j) {
        Cyclotomic z = Cyclotomic::zeta(n, j), zi = Cyclotomic::zeta(n, -j);
        Cyclotomic scale = Cyclotomic(n) / ((1 - z) * (1 - zi));
        // n/((1-z)(1-z^-1)) * x^-1 (x - z)(x - z^-1)
        LaurentPoly c = ((x - LaurentPoly(z, mu)) * (x - LaurentPoly(zi, mu))).shifted(-mu).scaled(scale);
        out.push_back(c);
    }
    if (n % 2 == 0) {
        // n (1 + x)^2 / (2x)
        LaurentPoly c = ((one + x) * (one + x)).shifted(-mu).scaled(Cyclotomic(ratio(n, 2)));
        out.push_back(c);
        out.push_back(c);
    }
    return out;
}

}  // namespace rouquier
