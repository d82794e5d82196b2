#pragma once

#include <functional>
#include <memory>
#include <string>

#include "group.hpp"
#include "valuation.hpp"

namespace rouquier {

// Looks up an already validated datum by name (used for parabolic subgroups).
using Resolver = std::function<std::shared_ptr<const GroupDatum>(const std::string&)>;

struct ValidatedGroup {
    std::shared_ptr<const GroupDatum> datum;
    std::shared_ptr<const Enumeration> elements;  // class_of holds datum class indices
};

namespace detail {

inline void require(bool ok, const std::string& inv, const std::string& what) {
    if (!ok) throw DataError(inv, what);
}

inline long as_long(const Cyclotomic& c, const std::string& inv, const std::string& what) {
    require(c.is_rational() && c.to_rational().get_den() == 1, inv, what + " is not an integer: " + c.to_string());
    return c.to_rational().get_num().get_si();
}

}  // namespace detail

inline std::vector<std::vector<long>> induction_by_fusion(const GroupDatum& W, const Enumeration& E,
                                                          const GroupDatum& sub, const ParabolicEmbedding& emb) {
    using detail::require;
    require(emb.words.size() == sub.generators.size(), "parabolic-words",
            sub.name + " has " + std::to_string(sub.generators.size()) + " generators but " +
                std::to_string(emb.words.size()) + " images were given");
    std::vector<Matrix> images;
    for (auto& w : emb.words) images.push_back(word_matrix(W.generators, w, W.rank));
    std::vector<int> fuse;
    for (auto& cl : sub.classes) {
        Matrix m = mat::identity(W.rank);
        for (int g : cl.word) m = mat::mul(m, images.at(g));
        auto it = E.index.find(m);
        require(it != E.index.end(), "parabolic-words", "subgroup class does not land in " + W.name);
        fuse.push_back(E.class_of[it->second]);
    }
    std::vector<std::vector<long>> ind(sub.num_irr(), std::vector<long>(W.num_irr()));
    for (int a = 0; a < sub.num_irr(); ++a)
        for (int b = 0; b < W.num_irr(); ++b) {
            Cyclotomic s;
            for (std::size_t c = 0; c < sub.classes.size(); ++c)
                s += (W.characters[b].values[fuse[c]] * sub.characters[a].values[c].conj())
                         .scaled(ratio(sub.classes[c].size, sub.order));
            ind[a][b] = detail::as_long(s, "induction-matrix", "<Res " + W.characters[b].name + ", " +
                                                                    sub.characters[a].name + ">");
            require(ind[a][b] >= 0, "induction-matrix", "negative multiplicity");
        }
    return ind;
}

// Checks every stated invariant, filling derived fields. Throws DataError
// naming the first invariant that fails.
inline ValidatedGroup validate(GroupDatum W, const Resolver& resolve, long bound = 50000) {
    using detail::require;
    int r = W.num_irr();
    std::size_t k = W.classes.size();
    require(W.order >= 1, "order", "order must be positive");
    require(W.mu >= 1, "mu", "mu must be positive");
    require(static_cast<std::size_t>(r) == k, "class-count",
            std::to_string(r) + " characters but " + std::to_string(k) + " classes");
    for (auto& g : W.generators) {
        require(g.size() == static_cast<std::size_t>(W.rank), "generators", "generator has wrong size");
        for (auto& row : g) require(row.size() == static_cast<std::size_t>(W.rank), "generators", "generator not square");
    }
    long tot = 0;
    for (auto& c : W.classes) tot += c.size;
    require(tot == W.order, "class-sizes", "class sizes sum to " + std::to_string(tot) + ", not |W| = " + std::to_string(W.order));
    require(!W.classes.empty() && W.classes[0].word.empty(), "identity-class", "first class must be the identity");
    for (auto& ch : W.characters)
        require(ch.values.size() == k, "character-table", ch.name + " has the wrong number of values");

    // orthogonality
    for (int a = 0; a < r; ++a)
        for (int b = a; b < r; ++b) {
            Cyclotomic s;
            for (std::size_t c = 0; c < k; ++c)
                s += (W.characters[a].values[c] * W.characters[b].values[c].conj()).scaled(Rational(W.classes[c].size));
            require(s == Cyclotomic(a == b ? W.order : 0), "row-orthogonality",
                    "<" + W.characters[a].name + ", " + W.characters[b].name + "> = " + s.to_string());
        }
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t d = c; d < k; ++d) {
            Cyclotomic s;
            for (int a = 0; a < r; ++a) s += W.characters[a].values[c] * W.characters[a].values[d].conj();
            Rational want = c == d ? ratio(W.order, W.classes[c].size) : Rational(0);
            require(s == Cyclotomic(want), "column-orthogonality",
                    "classes " + std::to_string(c) + " and " + std::to_string(d) + " give " + s.to_string());
        }

    // the group itself
    auto E = std::make_shared<Enumeration>();
    std::vector<Matrix> reps;
    if (W.order <= bound) {
        *E = enumerate_group(W.generators, W.rank, bound);
        require(static_cast<long>(E->elements.size()) == W.order, "order",
                "generators produce " + std::to_string(E->elements.size()) + " elements, not " + std::to_string(W.order));
        require(E->num_classes == static_cast<int>(k), "class-count",
                "generators give " + std::to_string(E->num_classes) + " conjugacy classes");
        std::vector<int> remap(E->num_classes, -1);
        for (std::size_t c = 0; c < k; ++c) {
            Matrix m = word_matrix(W.generators, W.classes[c].word, W.rank);
            int cl = E->class_of[E->find(m)];
            require(remap[cl] < 0, "class-words", "two class words name the same class");
            remap[cl] = static_cast<int>(c);
            long size = std::count(E->class_of.begin(), E->class_of.end(), cl);
            require(size == W.classes[c].size, "class-sizes",
                    "class " + std::to_string(c) + " has " + std::to_string(size) + " elements");
            reps.push_back(m);
        }
        for (auto& c : E->class_of) c = remap[c];
        auto [refl, hyp] = count_reflections(*E);
        W.n_reflections = refl, W.n_hyperplanes = hyp;
    } else {
        for (auto& cl : W.classes) reps.push_back(word_matrix(W.generators, cl.word, W.rank));
        long refl = 0;
        for (std::size_t c = 0; c < k; ++c)
            if (mat::rank(mat::sub_identity(reps[c])) == 1) refl += W.classes[c].size;
        W.n_reflections = refl;
        W.n_hyperplanes = -1;
    }

    // degrees
    long prod = 1, sum = 0;
    for (int d : W.degrees) prod *= d, sum += d - 1;
    require(static_cast<int>(W.degrees.size()) == W.rank, "degrees", "need one degree per rank");
    require(prod == W.order, "degrees-product", "product of degrees " + std::to_string(prod) + " != |W|");
    require(sum == W.n_reflections, "reflection-count",
            "sum(d_i - 1) = " + std::to_string(sum) + " but there are " + std::to_string(W.n_reflections) + " reflections");

    // conjugate characters, det
    const std::vector<int> conj_given = W.conj_perm;
    const int det_given = W.det_index;
    W.conj_perm.assign(r, -1);
    for (int a = 0; a < r; ++a) {
        for (int b = 0; b < r; ++b) {
            bool same = true;
            for (std::size_t c = 0; c < k && same; ++c) same = W.characters[b].values[c] == W.characters[a].values[c].conj();
            if (same) W.conj_perm[a] = b;
        }
        require(W.conj_perm[a] >= 0, "conj-perm", "complex conjugate of " + W.characters[a].name + " is missing");
    }
    W.det_index = -1;
    for (int a = 0; a < r; ++a) {
        bool same = true;
        for (std::size_t c = 0; c < k && same; ++c) same = W.characters[a].values[c] == mat::det(reps[c]);
        if (same) W.det_index = a;
    }
    require(W.det_index >= 0, "det-index", "determinant of the reflection representation is not in the table");
    require(conj_given.empty() || conj_given == W.conj_perm, "conj-perm", "supplied permutation is not complex conjugation");
    require(det_given < 0 || det_given == W.det_index, "det-index",
            "supplied index " + std::to_string(det_given) + " but det is " + W.characters[W.det_index].name);

    // fake degrees
    {
        auto A = molien_fake_degrees(W, reps, true), B = molien_fake_degrees(W, reps, false);
        auto plausible = [&](const std::vector<LaurentPoly>& R) {
            for (int a = 0; a < r; ++a) {
                if (R[a].is_zero() || R[a].at_one() != W.dim(a)) return false;
                if (R[a].highest() > W.n_reflections * W.mu) return false;
                for (auto& [e, c] : R[a].terms())
                    if (e % W.mu || !c.is_rational() || c.to_rational() < 0 || c.to_rational().get_den() != 1) return false;
            }
            std::vector<Cyclotomic> trace_vals;
            for (auto& m : reps) trace_vals.push_back(mat::trace(m));
            for (int a = 0; a < r; ++a) {
                bool is_refl = true;
                for (std::size_t c = 0; c < k && is_refl; ++c) is_refl = W.characters[a].values[c] == trace_vals[c];
                if (is_refl && W.rank > 0 && R[a].lowest() != W.mu) return false;
                bool triv = true;
                for (std::size_t c = 0; c < k && triv; ++c) triv = W.characters[a].values[c] == Cyclotomic(1);
                if (triv && R[a] != LaurentPoly(Cyclotomic(1), W.mu)) return false;
            }
            return true;
        };
        std::vector<LaurentPoly> R;
        if (A == B) R = A;
        else {
            bool pa = plausible(A), pb = plausible(B);
            require(pa != pb, "fake-degree-molien", "cannot fix the orientation of the Molien series");
            R = pa ? A : B;
        }
        if (W.fake_degrees.empty()) W.fake_degrees = R;
        require(W.fake_degrees.size() == static_cast<std::size_t>(r), "fake-degree-count", "one fake degree per character");
        for (int a = 0; a < r; ++a)
            require(W.fake_degrees[a].with_mu(W.mu) == R[a], "fake-degree-molien",
                    W.characters[a].name + ": supplied " + W.fake_degrees[a].to_string() + ", Molien gives " + R[a].to_string());
        for (auto& f : W.fake_degrees) f = f.with_mu(W.mu);
    }
    LaurentPoly P = poincare(W.degrees, W.mu);
    {
        LaurentPoly s = LaurentPoly::zero(W.mu);
        for (int a = 0; a < r; ++a) s += W.fake_degrees[a].scaled(W.dim(a));
        require(s == P, "fake-degree-sum", "sum chi(1) R_chi = " + s.to_string() + " != P(W) = " + P.to_string());
    }

    // Schur elements
    require(W.schur.size() == static_cast<std::size_t>(r), "schur-count", "one Schur element per character");
    {
        RationalFunction s;
        for (int a = 0; a < r; ++a) {
            LaurentPoly c = W.schur[a].with_mu(W.mu);
            require(!c.is_zero(), "schur-nonzero", W.characters[a].name);
            W.schur[a] = c;
            s += RationalFunction::make(LaurentPoly(W.dim(a), W.mu), c);
            require(c.at_one() == Cyclotomic(Rational(W.order)) / W.dim(a), "schur-at-one",
                    W.characters[a].name + ": c(1) = " + c.at_one().to_string());
            for (auto& [e, co] : c.terms())
                require(co.is_integral(), "schur-integrality", W.characters[a].name + " has coefficient " + co.to_string());
            if (W.spetsial) {
                require(c.is_x_polynomial(), "spetsial-exponents", W.characters[a].name + " has a fractional power of x");
                require(factor_unit_part(c).non_unit_trivial(), "spetsial-unit-part",
                        W.characters[a].name + " has a factor that is not cyclotomic");
            }
        }
        require(s == RationalFunction(LaurentPoly(Cyclotomic(1), W.mu)), "schur-sum",
                "sum chi(1)/c_chi = " + s.to_string());
    }

    // parabolics
    for (auto& emb : W.parabolics) {
        std::shared_ptr<const GroupDatum> sub = resolve ? resolve(emb.subgroup) : nullptr;
        if (sub && !E->elements.empty()) {
            auto ind = induction_by_fusion(W, *E, *sub, emb);
            if (!emb.induction.empty())
                require(emb.induction == ind, "induction-matrix", "supplied induction from " + sub->name + " disagrees with class fusion");
            emb.induction = ind;
        }
        require(!emb.induction.empty(), "induction-matrix", "no way to induce from " + emb.subgroup);
        if (sub) {
            for (int a = 0; a < sub->num_irr(); ++a) {
                Cyclotomic deg;
                for (int b = 0; b < r; ++b) deg += W.dim(b).scaled(Rational(emb.induction[a][b]));
                require(deg == sub->dim(a).scaled(ratio(W.order, sub->order)), "induction-degree",
                        "Ind " + sub->characters[a].name + " has the wrong degree");
            }
        }
    }

    ValidatedGroup out;
    out.datum = std::make_shared<const GroupDatum>(std::move(W));
    out.elements = E;
    return out;
}

}  // namespace rouquier
