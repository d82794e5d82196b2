#pragma once

#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "laurent.hpp"

namespace rouquier {

using Matrix = std::vector<std::vector<Cyclotomic>>;

namespace mat {

inline Matrix identity(std::size_t n) {
    Matrix m(n, std::vector<Cyclotomic>(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline Matrix mul(const Matrix& a, const Matrix& b) {
    std::size_t n = a.size();
    Matrix r(n, std::vector<Cyclotomic>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

inline Cyclotomic trace(const Matrix& a) {
    Cyclotomic t;
    for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
    return t;
}

// Row echelon form in place; returns rank and accumulates the determinant.
inline std::size_t eliminate(Matrix& a, Cyclotomic* det = nullptr, Matrix* aug = nullptr) {
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0, r = 0;
    Cyclotomic d(1);
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c].is_zero()) ++piv;
        if (piv == rows) {
            d = 0;
            continue;
        }
        if (piv != r) {
            std::swap(a[piv], a[r]);
            if (aug) std::swap((*aug)[piv], (*aug)[r]);
            d = -d;
        }
        Cyclotomic inv = a[r][c].inverse();
        d *= a[r][c];
        for (auto& x : a[r]) x *= inv;
        if (aug)
            for (auto& x : (*aug)[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Cyclotomic m = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] -= m * a[r][j];
            if (aug)
                for (std::size_t j = 0; j < (*aug)[i].size(); ++j) (*aug)[i][j] -= m * (*aug)[r][j];
        }
        ++r;
    }
    if (r < rows) d = 0;
    if (det) *det = d;
    return r;
}

inline std::size_t rank(Matrix a) { return eliminate(a); }

inline Cyclotomic det(Matrix a) {
    if (a.empty()) return 1;
    Cyclotomic d;
    eliminate(a, &d);
    return d;
}

inline Matrix inverse(Matrix a) {
    Matrix inv = identity(a.size());
    if (eliminate(a, nullptr, &inv) < a.size()) throw DivisionByZero();
    return inv;
}

inline Matrix sub_identity(Matrix a) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i][i] -= 1;
    return a;
}

// det(1 - x g), low degree first (Faddeev-LeVerrier).
inline poly::Dense one_minus_x_det(const Matrix& g) {
    std::size_t n = g.size();
    // char poly coefficients c_k of t^n + c_1 t^(n-1) + ... + c_n
    std::vector<Cyclotomic> c(n + 1);
    c[0] = 1;
    Matrix M = identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        Matrix AM = mul(g, M);
        c[k] = mat::trace(AM).scaled(Rational(-1, static_cast<long>(k)));
        M = AM;
        for (std::size_t i = 0; i < n; ++i) M[i][i] += c[k];
    }
    // det(1 - x g) = sum c_k x^k
    return poly::Dense(c.begin(), c.end());
}

}  // namespace mat

struct ClassInfo {
    std::vector<int> word;
    long size = 1;
};

struct Character {
    std::string name;
    std::vector<Cyclotomic> values;  // per class
};

struct ParabolicEmbedding {
    std::string subgroup;
    std::vector<std::vector<int>> words;            // images of the subgroup's generators
    std::vector<std::vector<long>> induction;       // Irr(W') x Irr(W); empty until resolved
};

struct GroupDatum {
    std::string name;
    long order = 1;
    int rank = 0;
    int mu = 1;
    bool spetsial = true;
    std::vector<Matrix> generators;
    std::vector<int> degrees;
    std::vector<ClassInfo> classes;
    std::vector<Character> characters;
    std::vector<LaurentPoly> fake_degrees;
    std::vector<LaurentPoly> schur;
    std::vector<ParabolicEmbedding> parabolics;
    std::vector<int> conj_perm;
    int det_index = -1;
    long n_reflections = 0;
    long n_hyperplanes = 0;

    int num_irr() const { return static_cast<int>(characters.size()); }
    Cyclotomic dim(int i) const { return characters[i].values[0]; }
    long dim_int(int i) const { return dim(i).to_rational().get_num().get_si(); }

    int index_of(const std::string& n) const {
        for (int i = 0; i < num_irr(); ++i)
            if (characters[i].name == n) return i;
        throw DomainError("no character '" + n + "' in " + name);
    }

    // A conductor containing every number in the datum.
    long field_conductor() const {
        long n = 1;
        auto fold = [&](const Cyclotomic& c) { n = std::lcm(n, c.conductor()); };
        for (auto& g : generators)
            for (auto& row : g)
                for (auto& c : row) fold(c);
        for (auto& ch : characters)
            for (auto& c : ch.values) fold(c);
        for (auto& s : schur)
            for (auto& [e, c] : s.terms()) fold(c);
        return n;
    }

    std::string character_names(const std::vector<int>& idx) const {
        std::string s = "{";
        for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? ", " : "") + characters[idx[i]].name;
        return s + "}";
    }
};

// Full element list with shortest words and the conjugacy class of each element.
struct Enumeration {
    std::vector<Matrix> elements;
    std::vector<std::vector<int>> words;
    std::map<Matrix, int> index;
    std::vector<int> class_of;  // arbitrary class numbering
    int num_classes = 0;

    int find(const Matrix& m) const {
        auto it = index.find(m);
        if (it == index.end()) throw DomainError("element not in group");
        return it->second;
    }
};

inline Matrix word_matrix(const std::vector<Matrix>& gens, const std::vector<int>& word, std::size_t dim) {
    Matrix m = mat::identity(dim);
    for (int g : word) {
        if (g < 0 || g >= static_cast<int>(gens.size())) throw DomainError("word uses unknown generator " + std::to_string(g));
        m = mat::mul(m, gens[g]);
    }
    return m;
}

inline Enumeration enumerate_group(const std::vector<Matrix>& gens, std::size_t dim, long bound = 50000) {
    Enumeration E;
    Matrix id = mat::identity(dim);
    E.elements.push_back(id);
    E.words.push_back({});
    E.index[id] = 0;
    for (std::size_t head = 0; head < E.elements.size(); ++head) {
        for (std::size_t g = 0; g < gens.size(); ++g) {
            Matrix m = mat::mul(E.elements[head], gens[g]);
            if (E.index.count(m)) continue;
            if (static_cast<long>(E.elements.size()) >= bound)
                throw DomainError("enumeration bound " + std::to_string(bound) + " exceeded");
            E.index[m] = static_cast<int>(E.elements.size());
            auto w = E.words[head];
            w.push_back(static_cast<int>(g));
            E.words.push_back(std::move(w));
            E.elements.push_back(std::move(m));
        }
    }
    std::vector<Matrix> inv;
    for (auto& g : gens) inv.push_back(mat::inverse(g));
    E.class_of.assign(E.elements.size(), -1);
    for (std::size_t i = 0; i < E.elements.size(); ++i) {
        if (E.class_of[i] >= 0) continue;
        int c = E.num_classes++;
        std::deque<int> todo{static_cast<int>(i)};
        E.class_of[i] = c;
        while (!todo.empty()) {
            int x = todo.front();
            todo.pop_front();
            for (std::size_t g = 0; g < gens.size(); ++g) {
                int y = E.find(mat::mul(mat::mul(inv[g], E.elements[x]), gens[g]));
                if (E.class_of[y] < 0) E.class_of[y] = c, todo.push_back(y);
            }
        }
    }
    return E;
}

// Reflections (rank(g - 1) = 1) and their distinct hyperplanes.
inline std::pair<long, long> count_reflections(const Enumeration& E) {
    long refl = 0;
    std::vector<std::vector<Cyclotomic>> planes;
    for (auto& g : E.elements) {
        Matrix d = mat::sub_identity(g);
        Matrix ech = d;
        if (mat::eliminate(ech) != 1) continue;
        ++refl;
        // the hyperplane is the kernel, determined by the normalized nonzero row
        std::vector<Cyclotomic> row = ech[0];
        bool seen = false;
        for (auto& p : planes) seen = seen || p == row;
        if (!seen) planes.push_back(row);
    }
    return {refl, static_cast<long>(planes.size())};
}

inline LaurentPoly poincare(const std::vector<int>& degrees, int mu) {
    LaurentPoly P(Cyclotomic(1), mu);
    for (int d : degrees) {
        std::map<long, Cyclotomic> xs;
        for (int i = 0; i < d; ++i) xs[i] = 1;
        P *= LaurentPoly::from_x(xs, mu);
    }
    return P;
}

// Molien series sum over classes of weight(chi(g)) / det(1 - x g), times
// prod (1 - x^d_i), truncated above the reflection count. `conjugate` picks
// which of chi or its complex conjugate weighs the sum.
inline std::vector<LaurentPoly> molien_fake_degrees(const GroupDatum& W, const std::vector<Matrix>& class_reps,
                                                    bool conjugate) {
    long top = 0;
    for (int d : W.degrees) top += d;
    std::vector<std::vector<Cyclotomic>> series;
    for (auto& g : class_reps) {
        poly::Dense D = mat::one_minus_x_det(g);
        std::vector<Cyclotomic> s(top + 1);
        s[0] = 1;
        for (long k = 1; k <= top; ++k) {
            Cyclotomic acc;
            for (long i = 1; i < static_cast<long>(D.size()) && i <= k; ++i) acc -= D[i] * s[k - i];
            s[k] = acc;
        }
        series.push_back(std::move(s));
    }
    poly::Dense prod{Cyclotomic(1)};
    for (int d : W.degrees) {
        poly::Dense f(d + 1);
        f[0] = 1, f[d] = -1;
        prod = poly::mul(prod, f);
    }
    std::vector<LaurentPoly> out;
    for (auto& ch : W.characters) {
        std::vector<Cyclotomic> tot(top + 1);
        for (std::size_t c = 0; c < class_reps.size(); ++c) {
            Cyclotomic w = conjugate ? ch.values[c].conj() : ch.values[c];
            w = w.scaled(ratio(W.classes[c].size, W.order));
            if (w.is_zero()) continue;
            for (long k = 0; k <= top; ++k)
                if (!series[c][k].is_zero()) tot[k] += w * series[c][k];
        }
        std::map<long, Cyclotomic> xs;
        for (long k = 0; k <= top; ++k) {
            Cyclotomic v;
            for (long i = 0; i <= k && i < static_cast<long>(prod.size()); ++i)
                if (!prod[i].is_zero()) v += prod[i] * tot[k - i];
            if (!v.is_zero()) xs[k] = v;
        }
        out.push_back(LaurentPoly::from_x(xs, W.mu));
    }
    return out;
}

}  // namespace rouquier
