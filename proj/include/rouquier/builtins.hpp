#pragma once

#include <string>
#include <vector>

#include "group.hpp"
#include "schur.hpp"

namespace rouquier::builtin {

inline GroupDatum trivial_group() {
    GroupDatum W;
    W.name = "1";
    W.classes = {{{}, 1}};
    W.characters = {{"1", {Cyclotomic(1)}}};
    W.fake_degrees = {LaurentPoly(Cyclotomic(1))};
    W.schur = {LaurentPoly(Cyclotomic(1))};
    return W;
}

inline GroupDatum cyclic_group(int d) {
    if (d < 2) throw DomainError("cyclic group needs d >= 2");
    GroupDatum W;
    W.name = "Z" + std::to_string(d);
    W.order = d;
    W.rank = 1;
    W.mu = d % 2 ? 2 * d : d;
    W.generators = {{{Cyclotomic::zeta(d)}}};
    W.degrees = {d};
    for (int k = 0; k < d; ++k) W.classes.push_back({std::vector<int>(k, 0), 1});
    for (int j = 0; j < d; ++j) {
        Character ch{"chi" + std::to_string(j), {}};
        for (int k = 0; k < d; ++k) ch.values.push_back(Cyclotomic::zeta(d, j * k));
        W.characters.push_back(ch);
    }
    W.schur = cyclic_schur(d, W.mu);
    W.parabolics = {{"1", {}, {}}};
    return W;
}

inline GroupDatum dihedral_group(int n) {
    if (n < 3) throw DomainError("dihedral group needs n >= 3");
    GroupDatum W;
    W.name = "I2(" + std::to_string(n) + ")";
    W.order = 2L * n;
    W.rank = 2;
    W.mu = 2;
    Cyclotomic z = Cyclotomic::zeta(n), zi = Cyclotomic::zeta(n, -1);
    W.generators = {{{0, 1}, {1, 0}}, {{0, zi}, {z, 0}}};
    W.degrees = {2, n};
    // classes: 1, rotations (st)^k for 1 <= k <= n/2, then reflections
    std::vector<int> rot_k;
    W.classes.push_back({{}, 1});
    rot_k.push_back(0);
    for (int k = 1; 2 * k <= n; ++k) {
        std::vector<int> w;
        for (int i = 0; i < k; ++i) w.push_back(0), w.push_back(1);
        W.classes.push_back({w, 2 * k == n ? 1 : 2});
        rot_k.push_back(k);
    }
    std::size_t nrot = W.classes.size();
    if (n % 2) W.classes.push_back({{0}, n});
    else {
        W.classes.push_back({{0}, n / 2});
        W.classes.push_back({{1}, n / 2});
    }
    auto linear = [&](const std::string& name, int rot_sign, int s_val, int t_val) {
        Character ch{name, {}};
        for (std::size_t c = 0; c < nrot; ++c) ch.values.push_back(rot_k[c] % 2 && rot_sign < 0 ? -1 : 1);
        ch.values.push_back(s_val);
        if (n % 2 == 0) ch.values.push_back(t_val);
        return ch;
    };
    W.characters.push_back(linear("1", 1, 1, 1));
    W.characters.push_back(linear("sgn", 1, -1, -1));
    for (int j = 1; j <= (n - 1) / 2; ++j) {
        Character ch{"rho" + std::to_string(j), {}};
        for (std::size_t c = 0; c < nrot; ++c)
            ch.values.push_back(Cyclotomic::zeta(n, j * rot_k[c]) + Cyclotomic::zeta(n, -j * rot_k[c]));
        ch.values.push_back(0);
        if (n % 2 == 0) ch.values.push_back(0);
        W.characters.push_back(ch);
    }
    if (n % 2 == 0) {
        W.characters.push_back(linear("eps1", -1, 1, -1));
        W.characters.push_back(linear("eps2", -1, -1, 1));
    }
    W.schur = dihedral_schur(n, W.mu);
    W.parabolics.push_back({"Z2", {{0}}, {}});
    if (n % 2 == 0) W.parabolics.push_back({"Z2", {{1}}, {}});
    W.parabolics.push_back({"1", {}, {}});
    return W;
}

// The smallest non-real spetsial exceptional group, Shephard-Todd number 4.
inline GroupDatum g4_group() {
    GroupDatum W;
    W.name = "G4";
    W.order = 24;
    W.rank = 2;
    W.mu = 6;
    Cyclotomic z = Cyclotomic::zeta(3), z2 = Cyclotomic::zeta(3, 2);
    W.generators = {{{z, -1}, {0, 1}}, {{1, 0}, {z, z}}};
    W.degrees = {4, 6};
    W.classes = {{{}, 1}, {{0}, 4}, {{0, 0}, 4}, {{0, 1}, 4}, {{0, 0, 1}, 6}, {{0, 0, 1, 1}, 4}, {{0, 0, 1, 0, 0, 1}, 1}};
    std::vector<Cyclotomic> tr, tr2;
    std::vector<long> len;
    for (auto& c : W.classes) {
        Matrix m = word_matrix(W.generators, c.word, 2);
        tr.push_back(mat::trace(m));
        tr2.push_back(mat::trace(mat::mul(m, m)));
        len.push_back(static_cast<long>(c.word.size()));
    }
    auto lin = [&](int k, std::size_t c) { return Cyclotomic::zeta(3, k * len[c]); };
    auto make = [&](const std::string& name, auto value) {
        Character ch{name, {}};
        for (std::size_t c = 0; c < W.classes.size(); ++c) ch.values.push_back(value(c));
        W.characters.push_back(ch);
    };
    make("phi1,0", [&](std::size_t c) { return lin(0, c); });
    make("phi1,4", [&](std::size_t c) { return lin(1, c); });
    make("phi1,8", [&](std::size_t c) { return lin(2, c); });
    make("phi2,1", [&](std::size_t c) { return tr[c]; });
    make("phi2,3", [&](std::size_t c) { return tr[c] * lin(2, c); });
    make("phi2,5", [&](std::size_t c) { return tr[c] * lin(1, c); });
    make("phi3,2", [&](std::size_t c) { return (tr[c] * tr[c] + tr2[c]).scaled(ratio(1, 2)); });

    // Schur elements as P(W) / generic degree
    const int mu = W.mu;
    LaurentPoly x = LaurentPoly::x(mu), one(Cyclotomic(1), mu);
    auto lin_f = [&](const Cyclotomic& a) { return x - LaurentPoly(a, mu); };
    LaurentPoly x2p1 = x * x + one;
    Cyclotomic s3 = z - z2;  // sqrt(-3)
    LaurentPoly P = poincare(W.degrees, mu);
    std::vector<LaurentPoly> deg = {
        one,
        (lin_f(z2) * x2p1 * lin_f(-z)).shifted(4 * mu).scaled(-s3.scaled(ratio(1, 6))),
        (lin_f(z) * x2p1 * lin_f(-z2)).shifted(4 * mu).scaled(s3.scaled(ratio(1, 6))),
        (lin_f(z) * x2p1 * lin_f(-z)).shifted(mu).scaled((Cyclotomic(3) - s3).scaled(ratio(1, 6))),
        (lin_f(z2) * x2p1 * lin_f(-z2)).shifted(mu).scaled((Cyclotomic(3) + s3).scaled(ratio(1, 6))),
        ((one + x) * (one + x) * (x * x - x + one)).shifted(4 * mu).scaled(ratio(1, 2)),
        ((x * x + x + one) * (x * x - x + one)).shifted(2 * mu),
    };
    for (auto& D : deg) W.schur.push_back(RationalFunction::make(P, D).as_laurent());
    W.parabolics = {{"Z3", {{0}}, {}}, {"1", {}, {}}};
    return W;
}

}  // namespace rouquier::builtin
