#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "invariants.hpp"

namespace rouquier {

using VirtualCharacter = std::vector<long>;

struct BlockPartition {
    std::vector<std::vector<int>> parts;  // each sorted, parts ordered by first element
    std::vector<bool> exact;

    static BlockPartition from_labels(const std::vector<int>& label) {
        std::map<int, std::vector<int>> by;
        for (int i = 0; i < static_cast<int>(label.size()); ++i) by[label[i]].push_back(i);
        BlockPartition b;
        for (auto& [l, v] : by) b.parts.push_back(v);
        std::sort(b.parts.begin(), b.parts.end());
        b.exact.assign(b.parts.size(), false);
        return b;
    }

    std::vector<int> labels() const {
        int n = 0;
        for (auto& p : parts) n += static_cast<int>(p.size());
        std::vector<int> l(n, -1);
        for (int i = 0; i < static_cast<int>(parts.size()); ++i)
            for (int c : parts[i]) l[c] = i;
        return l;
    }
    int part_of(int chi) const {
        for (int i = 0; i < static_cast<int>(parts.size()); ++i)
            if (std::find(parts[i].begin(), parts[i].end(), chi) != parts[i].end()) return i;
        throw DomainError("character not in partition");
    }
    bool refines(const BlockPartition& coarser) const {
        auto l = coarser.labels();
        for (auto& p : parts)
            for (int c : p)
                if (l[c] != l[p[0]]) return false;
        return true;
    }
    bool all_exact() const { return std::all_of(exact.begin(), exact.end(), [](bool b) { return b; }); }
    friend bool operator==(const BlockPartition& a, const BlockPartition& b) { return a.parts == b.parts; }
};

namespace detail {

struct UnionFind {
    std::vector<int> up;
    explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
    int find(int x) { return up[x] == x ? x : up[x] = find(up[x]); }
    void join(int a, int b) { up[find(a)] = find(b); }
    std::vector<int> labels() {
        std::vector<int> l(up.size());
        for (int i = 0; i < static_cast<int>(up.size()); ++i) l[i] = find(i);
        return l;
    }
};

inline std::vector<int> support(const VirtualCharacter& v) {
    std::vector<int> s;
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (v[i]) s.push_back(i);
    return s;
}

}  // namespace detail

// Join (finest common coarsening) of partitions of the same set.
inline BlockPartition join_partitions(const std::vector<BlockPartition>& ps, int n) {
    detail::UnionFind uf(n);
    for (auto& p : ps)
        for (auto& part : p.parts)
            for (int c : part) uf.join(c, part[0]);
    return BlockPartition::from_labels(uf.labels());
}

// Brauer p-blocks through congruence of central characters modulo the prime.
inline BlockPartition group_p_blocks(const GroupDatum& W, const PrimeIdealSpec& spec) {
    int r = W.num_irr();
    detail::UnionFind uf(r);
    if (W.order % spec.p != 0) {
        auto b = BlockPartition::from_labels(uf.labels());
        b.exact.assign(b.parts.size(), true);
        return b;
    }
    auto C = Completion::get(spec);
    std::vector<std::vector<Cyclotomic>> omega(r);
    for (int a = 0; a < r; ++a)
        for (std::size_t c = 0; c < W.classes.size(); ++c)
            omega[a].push_back(W.characters[a].values[c].scaled(Rational(W.classes[c].size)) / W.dim(a));
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b) {
            if (uf.find(a) == uf.find(b)) continue;
            bool linked = true;
            for (std::size_t c = 0; c < W.classes.size() && linked; ++c)
                linked = C->val_at_least(omega[a][c] - omega[b][c], 1);
            if (linked) uf.join(a, b);
        }
    auto b = BlockPartition::from_labels(uf.labels());
    b.exact.assign(b.parts.size(), true);
    return b;
}

// True iff c_chi lies in the prime (its scalar part has positive valuation).
inline bool schur_in_prime(const GroupDatum& W, int chi, const PrimeIdealSpec& spec) {
    UnitFactorization u = factor_unit_part(W.schur[chi]);
    return val(spec, u.scalar).at_least(1);
}

inline BlockPartition coarse_partition(const GroupDatum& W, const PrimeIdealSpec& spec) {
    int r = W.num_irr();
    auto gb = group_p_blocks(W, spec).labels();
    std::vector<Rational> level(r);
    for (int a = 0; a < r; ++a) {
        Rational n = W.fake_degrees[a].x_derivative_at_one().to_rational() +
                     W.fake_degrees[W.conj_perm[a]].x_derivative_at_one().to_rational();
        level[a] = n / W.dim(a).to_rational();
    }
    std::vector<bool> defect0(r);
    for (int a = 0; a < r; ++a) defect0[a] = !schur_in_prime(W, a, spec);
    detail::UnionFind uf(r);
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b)
            if (!defect0[a] && !defect0[b] && gb[a] == gb[b] && level[a] == level[b]) uf.join(a, b);
    auto out = BlockPartition::from_labels(uf.labels());
    for (std::size_t i = 0; i < out.parts.size(); ++i) out.exact[i] = out.parts[i].size() == 1 && defect0[out.parts[i][0]];
    return out;
}

// Minimal generating set of the monoid generated by nonnegative vectors.
inline std::vector<VirtualCharacter> monoid_minimal_generators(std::vector<VirtualCharacter> P) {
    P.erase(std::remove_if(P.begin(), P.end(),
                           [](const VirtualCharacter& v) { return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; }); }),
            P.end());
    for (auto& v : P)
        for (long x : v)
            if (x < 0) throw DomainError("monoid generators must be nonnegative");
    std::sort(P.begin(), P.end());
    P.erase(std::unique(P.begin(), P.end()), P.end());
    auto leq = [](const VirtualCharacter& a, const VirtualCharacter& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] > b[i]) return false;
        return true;
    };
    std::vector<VirtualCharacter> out;
    for (std::size_t u = 0; u < P.size(); ++u) {
        std::vector<const VirtualCharacter*> pool;
        for (std::size_t v = 0; v < P.size(); ++v)
            if (v != u && leq(P[v], P[u])) pool.push_back(&P[v]);
        std::set<VirtualCharacter> dead;
        std::function<bool(const VirtualCharacter&, std::size_t)> reach = [&](const VirtualCharacter& t, std::size_t from) {
            if (std::all_of(t.begin(), t.end(), [](long x) { return x == 0; })) return true;
            if (dead.count(t)) return false;
            for (std::size_t i = from; i < pool.size(); ++i) {
                if (!leq(*pool[i], t)) continue;
                VirtualCharacter rest = t;
                for (std::size_t k = 0; k < t.size(); ++k) rest[k] -= (*pool[i])[k];
                if (reach(rest, i)) return true;
            }
            dead.insert(t);
            return false;
        };
        // `from` ordering makes this a multiset search; the memo ignores it, so
        // restart with from = 0 to keep the memo sound.
        std::function<bool(const VirtualCharacter&)> expressible = [&](const VirtualCharacter& t) {
            return reach(t, 0);
        };
        if (!expressible(P[u])) out.push_back(P[u]);
    }
    return out;
}

inline BlockPartition linking_closure(const BlockPartition& parts, const std::vector<VirtualCharacter>& U) {
    int n = static_cast<int>(parts.labels().size());
    auto lab = parts.labels();
    detail::UnionFind uf(n);
    for (auto& u : U) {
        auto s = detail::support(u);
        for (int c : s) {
            if (lab[c] != lab[s[0]]) throw DomainError("column crosses parts");
            uf.join(c, s[0]);
        }
    }
    auto out = BlockPartition::from_labels(uf.labels());
    for (std::size_t i = 0; i < out.parts.size(); ++i) {
        int pi = parts.part_of(out.parts[i][0]);
        out.exact[i] = parts.exact[pi] && parts.parts[pi] == out.parts[i];
    }
    return out;
}

// Decides integrality of sum phi1(chi)/c_chi for all subvectors phi1 of a
// column, by working in Z[zeta]/p^k images of numerators over a common
// denominator.
class SubsumTester {
  public:
    SubsumTester(const GroupDatum& W, const VirtualCharacter& phi, std::vector<PrimeIdealSpec> specs)
        : supp_(detail::support(phi)), specs_(std::move(specs)) {
        int mu = W.mu;
        std::vector<RationalFunction> inv;
        poly::Dense L{Cyclotomic(1)};
        for (int c : supp_) {
            inv.push_back(RationalFunction::make(LaurentPoly(Cyclotomic(1), mu), W.schur[c]));
            poly::Dense d = poly::from_laurent(inv.back().den());
            poly::Dense g = poly::gcd(L, d);
            L = poly::mul(L, poly::divmod(d, g).first);
        }
        LaurentPoly Lp = poly::to_laurent(L, mu);
        UnitFactorization u = factor_unit_part(Lp);
        if (!u.non_unit_trivial() && !is_integer_one_plus_x(u.non_unit_part)) {
            supported_ = false;
            return;
        }
        Cyclotomic sinv = u.scalar.inverse();
        std::map<long, int> slot;
        std::vector<LaurentPoly> nums;
        for (std::size_t i = 0; i < supp_.size(); ++i) {
            poly::Dense d = poly::from_laurent(inv[i].den());
            LaurentPoly q = poly::to_laurent(poly::divmod(L, d).first, inv[i].mu());
            nums.push_back((inv[i].num() * q).scaled(sinv));
            for (auto& [e, c] : nums.back().terms()) slot.emplace(e, 0);
        }
        int j = 0;
        for (auto& [e, s] : slot) s = j++;
        for (auto& spec : specs_) {
            auto C = Completion::get(spec);
            long rmax = 0;
            std::vector<std::vector<std::pair<int, Completion::Image>>> imgs(supp_.size());
            int k = 1;
            // first pass for shifts
            for (std::size_t i = 0; i < supp_.size(); ++i)
                for (auto& [e, c] : nums[i].terms()) {
                    Integer D = 1;
                    for (auto& [x, a] : c.terms()) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), a.get_den().get_mpz_t());
                    long r = 0;
                    while (mpz_divisible_ui_p(D.get_mpz_t(), spec.p)) D /= spec.p, ++r;
                    rmax = std::max(rmax, r);
                }
            k = static_cast<int>(std::max<long>(rmax, 1));
            Integer Mk;
            mpz_ui_pow_ui(Mk.get_mpz_t(), spec.p, rmax);
            if (rmax > 0 && Mk > Integer(1L << 40)) {
                supported_ = false;
                return;
            }
            Local loc;
            loc.modulus = rmax == 0 ? 1 : Mk.get_si();
            loc.width = static_cast<int>(slot.size()) * spec.e * spec.f;
            for (std::size_t i = 0; i < supp_.size(); ++i) {
                std::vector<long> row(loc.width, 0);
                for (auto& [e, c] : nums[i].terms()) {
                    if (rmax == 0) break;
                    Completion::Image img = C->image(c, k);
                    Integer scale;
                    mpz_ui_pow_ui(scale.get_mpz_t(), spec.p, rmax - img.shift);
                    int base = slot[e] * spec.e * spec.f;
                    for (int t = 0; t < spec.e * spec.f; ++t) {
                        Integer v = img.data[t] * scale % Mk;
                        row[base + t] = v.get_si();
                    }
                }
                loc.rows.push_back(row);
            }
            locals_.push_back(std::move(loc));
        }
    }

    bool supported() const { return supported_; }
    const std::vector<int>& support() const { return supp_; }

    // multiplicities indexed like support()
    bool integral(const std::vector<long>& m) const {
        for (auto& loc : locals_) {
            if (loc.modulus == 1) continue;
            for (int t = 0; t < loc.width; ++t) {
                long s = 0;
                for (std::size_t i = 0; i < m.size(); ++i)
                    if (m[i]) s = (s + m[i] * loc.rows[i][t]) % loc.modulus;
                if (s) return false;
            }
        }
        return true;
    }

  private:
    struct Local {
        long modulus = 1;
        int width = 0;
        std::vector<std::vector<long>> rows;
    };
    std::vector<int> supp_;
    std::vector<PrimeIdealSpec> specs_;
    std::vector<Local> locals_;
    bool supported_ = true;
};

enum class Verdict { indecomposable, splittable, unknown };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::indecomposable: return "indecomposable";
        case Verdict::splittable: return "splittable";
        default: return "unknown";
    }
}

struct IndecomposabilityResult {
    Verdict verdict = Verdict::unknown;
    VirtualCharacter part1, part2;  // split candidate when one passed the test
    std::string note;
};

// Step (4) over the given primes (one prime: local test; all primes above the
// bad primes: the global test). A passing proper subcharacter is only a
// candidate; with strict = true it is reported as unknown.
inline IndecomposabilityResult indecomposability_check(const GroupDatum& W, const VirtualCharacter& phi,
                                                       const std::vector<PrimeIdealSpec>& specs, bool strict = true,
                                                       long weight_cap = 20) {
    IndecomposabilityResult res;
    long weight = 0;
    for (long x : phi) {
        if (x < 0) throw DomainError("indecomposability_check: negative multiplicity");
        weight += x;
    }
    if (weight == 0) throw DomainError("indecomposability_check: zero character");
    if (weight == 1) {
        res.verdict = Verdict::indecomposable;
        return res;
    }
    if (weight > weight_cap) {
        res.note = "support weight " + std::to_string(weight) + " exceeds the cap " + std::to_string(weight_cap);
        return res;
    }
    SubsumTester T(W, phi, specs);
    if (!T.supported()) {
        res.note = "denominator is not a unit of the local ring";
        return res;
    }
    const auto& s = T.support();
    std::vector<long> full;
    for (int c : s) full.push_back(phi[c]);
    if (!T.integral(full)) {
        res.note = "the column itself fails the integrality test";
        return res;
    }
    std::vector<long> cur(s.size(), 0);
    bool found = false;
    std::function<void(std::size_t)> walk = [&](std::size_t i) {
        if (found) return;
        if (i == s.size()) {
            if (cur == full || std::all_of(cur.begin(), cur.end(), [](long x) { return x == 0; })) return;
            if (T.integral(cur)) found = true;
            return;
        }
        for (long m = 0; m <= full[i] && !found; ++m) {
            cur[i] = m;
            walk(i + 1);
        }
        if (!found) cur[i] = 0;
    };
    walk(0);
    if (!found) {
        res.verdict = Verdict::indecomposable;
        return res;
    }
    res.part1.assign(phi.size(), 0);
    res.part2 = phi;
    for (std::size_t i = 0; i < s.size(); ++i) res.part1[s[i]] = cur[i], res.part2[s[i]] -= cur[i];
    res.verdict = strict ? Verdict::unknown : Verdict::splittable;
    res.note = "a proper subcharacter passes the integrality test";
    return res;
}

inline IndecomposabilityResult indecomposability_check(const GroupDatum& W, const VirtualCharacter& phi,
                                                       const PrimeIdealSpec& spec, bool strict = true,
                                                       long weight_cap = 20) {
    return indecomposability_check(W, phi, std::vector<PrimeIdealSpec>{spec}, strict, weight_cap);
}

struct Column {
    VirtualCharacter chars;
    bool resolved = false;
    std::string note;
};

struct DecompApprox {
    std::vector<Column> columns;
    std::vector<std::string> notes;
};

struct PrimeBlocks {
    PrimeIdealSpec spec;
    BlockPartition coarse;  // step (1)
    BlockPartition blocks;  // step (3): upper bound, exact where proven
    BlockPartition lower;   // connectivity through proven-indecomposable columns
    DecompApprox decomp;
};

// Steps (3) and (4) for a given coarse partition and candidate columns.
inline PrimeBlocks resolve_blocks(const GroupDatum& W, const PrimeIdealSpec& spec, const BlockPartition& coarse,
                                  const std::vector<VirtualCharacter>& U, long weight_cap = 20) {
    PrimeBlocks out;
    out.spec = spec;
    out.coarse = coarse;
    out.blocks = linking_closure(coarse, U);
    int r = W.num_irr();
    detail::UnionFind low(r);
    for (auto& u : U) {
        Column col{u, false, ""};
        auto res = indecomposability_check(W, u, spec, true, weight_cap);
        col.resolved = res.verdict == Verdict::indecomposable;
        col.note = res.note;
        if (col.resolved) {
            auto s = detail::support(u);
            for (int c : s) low.join(c, s[0]);
        }
        out.decomp.columns.push_back(col);
    }
    out.lower = BlockPartition::from_labels(low.labels());
    out.lower.exact.assign(out.lower.parts.size(), true);
    auto ll = out.lower.labels();
    for (std::size_t i = 0; i < out.blocks.parts.size(); ++i) {
        const auto& part = out.blocks.parts[i];
        bool connected = std::all_of(part.begin(), part.end(), [&](int c) { return ll[c] == ll[part[0]]; });
        out.blocks.exact[i] = out.blocks.exact[i] || connected;
        if (!out.blocks.exact[i])
            out.decomp.notes.push_back("part " + W.character_names(part) + " is only an upper bound");
    }
    return out;
}

struct FamilyResult {
    BlockPartition families;
    std::vector<long> bad_primes;
    std::vector<PrimeBlocks> per_prime;
};

// Hecke-algebra blocks through the inductive algorithm, memoized per group and prime.
class BlockEngine {
  public:
    explicit BlockEngine(const Catalog& cat, long weight_cap = 20) : cat_(cat), cap_(weight_cap) {}

    // Conductor of W together with all its parabolics, recursively.
    long closure_conductor(const GroupDatum& W) const {
        long n = W.field_conductor();
        for (auto& emb : W.parabolics) n = std::lcm(n, closure_conductor(*cat_.get(emb.subgroup)));
        return n;
    }

    std::vector<VirtualCharacter> candidate_projectives(const GroupDatum& W, const PrimeIdealSpec& spec,
                                                        const BlockPartition& coarse) {
        std::vector<VirtualCharacter> P;
        int r = W.num_irr();
        for (std::size_t i = 0; i < coarse.parts.size(); ++i)
            if (coarse.exact[i] && coarse.parts[i].size() == 1) {
                VirtualCharacter e(r, 0);
                e[coarse.parts[i][0]] = 1;
                P.push_back(e);
            }
        for (auto& emb : W.parabolics) {
            auto sub = cat_.get(emb.subgroup);
            const PrimeBlocks& sb = hecke_blocks_at(*sub, spec);
            for (auto& col : sb.decomp.columns) {
                VirtualCharacter ind(r, 0);
                for (int a = 0; a < sub->num_irr(); ++a)
                    if (col.chars[a])
                        for (int b = 0; b < r; ++b) ind[b] += col.chars[a] * emb.induction[a][b];
                for (auto& part : coarse.parts) {
                    VirtualCharacter cut(r, 0);
                    bool any = false;
                    for (int c : part) cut[c] = ind[c], any = any || ind[c];
                    if (any) P.push_back(cut);
                }
            }
        }
        return monoid_minimal_generators(P);
    }

    const PrimeBlocks& hecke_blocks_at(const GroupDatum& W, const PrimeIdealSpec& spec) {
        auto key = std::make_pair(W.name, spec);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        if (spec.conductor % W.field_conductor())
            throw DomainError("prime ideal lives in too small a field for " + W.name);
        BlockPartition coarse = coarse_partition(W, spec);
        auto U = candidate_projectives(W, spec, coarse);
        PrimeBlocks pb = resolve_blocks(W, spec, coarse, U, cap_);
        return memo_.emplace(key, std::move(pb)).first->second;
    }

    std::vector<PrimeIdealSpec> primes_for(const GroupDatum& W, long p) const {
        return primes_above(p, closure_conductor(W));
    }

    // Blocks at the first prime above p.
    const PrimeBlocks& hecke_blocks(const GroupDatum& W, long p) { return hecke_blocks_at(W, primes_for(W, p).front()); }

    FamilyResult families(const GroupDatum& W) {
        FamilyResult fr;
        fr.bad_primes = bad_primes(W);
        int r = W.num_irr();
        std::vector<BlockPartition> up, low;
        for (long p : fr.bad_primes)
            for (auto& spec : primes_for(W, p)) {
                const PrimeBlocks& pb = hecke_blocks_at(W, spec);
                fr.per_prime.push_back(pb);
                up.push_back(pb.blocks);
                BlockPartition l = pb.lower;
                low.push_back(l);
            }
        fr.families = join_partitions(up, r);
        BlockPartition lj = join_partitions(low, r);
        auto ll = lj.labels();
        for (std::size_t i = 0; i < fr.families.parts.size(); ++i) {
            const auto& part = fr.families.parts[i];
            fr.families.exact[i] = std::all_of(part.begin(), part.end(), [&](int c) { return ll[c] == ll[part[0]]; });
        }
        return fr;
    }

    // Step (4) against every prime above every bad prime at once, i.e.
    // integrality in the global ring.
    IndecomposabilityResult global_check(const GroupDatum& W, const VirtualCharacter& phi, bool strict = true) const {
        std::vector<PrimeIdealSpec> specs;
        for (long p : bad_primes(W))
            for (auto& s : primes_above(p, W.field_conductor())) specs.push_back(s);
        return indecomposability_check(W, phi, specs, strict, cap_);
    }

    const Catalog& catalog() const { return cat_; }

  private:
    const Catalog& cat_;
    long cap_;
    std::map<std::pair<std::string, PrimeIdealSpec>, PrimeBlocks> memo_;
};

}  // namespace rouquier
