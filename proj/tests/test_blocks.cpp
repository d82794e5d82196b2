#include <gtest/gtest.h>

#include "support.hpp"

using namespace rouquier;
using namespace testing_support;

namespace {

const Catalog& catalog() {
    static Catalog cat(ROUQUIER_DATA_DIR);
    return cat;
}

BlockEngine& engine() {
    static BlockEngine be(catalog());
    return be;
}

std::shared_ptr<const GroupDatum> group(const std::string& n) { return catalog().get(n); }

// Partition as a set of sets of character names, for order-free comparison.
std::set<std::set<std::string>> named(const GroupDatum& W, const BlockPartition& b) {
    std::set<std::set<std::string>> out;
    for (auto& part : b.parts) {
        std::set<std::string> s;
        for (int c : part) s.insert(W.characters[c].name);
        out.insert(s);
    }
    return out;
}

VirtualCharacter vc(const GroupDatum& W, std::map<std::string, long> m) {
    VirtualCharacter v(W.num_irr(), 0);
    for (auto& [n, k] : m) v[W.index_of(n)] = k;
    return v;
}

PrimeIdealSpec first_prime(const GroupDatum& W, long p) { return engine().primes_for(W, p).front(); }

using Names = std::set<std::set<std::string>>;

std::vector<std::string> small_groups() {
    std::vector<std::string> names{"G4"};
    for (int d = 2; d <= 12; ++d) names.push_back("Z" + std::to_string(d));
    for (int n = 3; n <= 16; ++n) names.push_back("I2(" + std::to_string(n) + ")");
    return names;
}

}  // namespace

TEST(GroupBlocks, SymmetricGroupOnThreeLetters) {
    auto W = group("I2(3)");
    EXPECT_EQ(named(*W, group_p_blocks(*W, first_prime(*W, 3))), (Names{{"1", "sgn", "rho1"}}));
    EXPECT_EQ(named(*W, group_p_blocks(*W, first_prime(*W, 2))), (Names{{"1", "sgn"}, {"rho1"}}));
}

TEST(GroupBlocks, CoprimeOrderGivesSingletons) {
    auto W = group("G4");
    auto b = group_p_blocks(*W, primes_above(5, W->field_conductor()).front());
    EXPECT_EQ(b.parts.size(), 7u);
}

TEST(Coarse, G4AtTwo) {
    auto W = group("G4");
    auto c = coarse_partition(*W, first_prime(*W, 2));
    for (auto n : {"phi2,1", "phi2,3", "phi3,2"}) {
        int i = c.part_of(W->index_of(n));
        EXPECT_EQ(c.parts[i].size(), 1u) << n;
        EXPECT_TRUE(c.exact[i]) << n;
    }
    int big = c.part_of(W->index_of("phi1,4"));
    EXPECT_EQ(c.part_of(W->index_of("phi1,8")), big);
    EXPECT_EQ(c.part_of(W->index_of("phi2,5")), big);
}

TEST(Coarse, G4AtThree) {
    auto W = group("G4");
    auto c = coarse_partition(*W, first_prime(*W, 3));
    // f(phi2,5) = 2 is prime to 3, so it drops out of its a + A level
    EXPECT_EQ(named(*W, c), (Names{{"phi1,0"}, {"phi3,2"}, {"phi2,1", "phi2,3"}, {"phi1,4", "phi1,8"}, {"phi2,5"}}));
}

TEST(Coarse, DihedralFiveAtFive) {
    auto W = group("I2(5)");
    auto c = coarse_partition(*W, first_prime(*W, 5));
    EXPECT_EQ(named(*W, c), (Names{{"1"}, {"sgn"}, {"rho1", "rho2"}}));
    EXPECT_TRUE(c.exact[c.part_of(0)]);
    EXPECT_TRUE(c.exact[c.part_of(1)]);
}

TEST(Coarse, RefinesGroupBlocks) {
    for (auto& n : small_groups()) {
        auto W = group(n);
        for (long p : bad_primes(*W))
            for (auto& s : engine().primes_for(*W, p))
                EXPECT_TRUE(coarse_partition(*W, s).refines(group_p_blocks(*W, s))) << n << " " << p;
    }
}

TEST(MinimalGenerators, Examples) {
    using V = std::vector<VirtualCharacter>;
    auto sorted = [](V v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    EXPECT_EQ(sorted(monoid_minimal_generators({{1, 0}, {0, 1}, {1, 1}})), sorted({{1, 0}, {0, 1}}));
    EXPECT_EQ(sorted(monoid_minimal_generators({{2}, {3}})), sorted({{2}, {3}}));
    EXPECT_EQ(sorted(monoid_minimal_generators({{1, 1, 0}, {0, 1, 1}, {1, 2, 1}})), sorted({{1, 1, 0}, {0, 1, 1}}));
    EXPECT_EQ(sorted(monoid_minimal_generators({{2}, {4}, {6}, {2}})), sorted({{2}}));
}

TEST(MinimalGenerators, RandomAgainstBruteForce) {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(0, 2);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<VirtualCharacter> P;
        for (int k = 0; k < 5; ++k) {
            VirtualCharacter v{d(rng), d(rng), d(rng)};
            if (std::any_of(v.begin(), v.end(), [](long x) { return x; })) P.push_back(v);
        }
        auto G = monoid_minimal_generators(P);
        // every input is a sum of generators: check by dynamic programming over the box
        for (auto& u : P) {
            std::set<VirtualCharacter> reach{{0, 0, 0}}, frontier{{0, 0, 0}};
            while (!frontier.empty()) {
                std::set<VirtualCharacter> next;
                for (auto& r : frontier)
                    for (auto& g : G) {
                        VirtualCharacter s{r[0] + g[0], r[1] + g[1], r[2] + g[2]};
                        if (s[0] <= u[0] && s[1] <= u[1] && s[2] <= u[2] && reach.insert(s).second) next.insert(s);
                    }
                frontier = std::move(next);
            }
            EXPECT_TRUE(reach.count(u));
        }
        // and no generator is a sum of the others
        for (std::size_t i = 0; i < G.size(); ++i) {
            std::vector<VirtualCharacter> rest;
            for (std::size_t j = 0; j < G.size(); ++j)
                if (j != i) rest.push_back(G[j]);
            rest.push_back(G[i]);
            auto again = monoid_minimal_generators(rest);
            EXPECT_EQ(again.size(), G.size());
        }
    }
}

TEST(Linking, Examples) {
    BlockPartition one = BlockPartition::from_labels({0, 0, 0});
    one.exact = {false};
    auto joined = linking_closure(one, {{1, 1, 0}, {0, 1, 1}});
    EXPECT_EQ(joined.parts.size(), 1u);
    auto split = linking_closure(one, {{1, 0, 0}, {0, 1, 1}});
    EXPECT_EQ(split.parts.size(), 2u);
    EXPECT_TRUE(split.refines(one));
    BlockPartition two = BlockPartition::from_labels({0, 1, 1});
    two.exact = {false, false};
    EXPECT_THROW(linking_closure(two, {{1, 1, 0}}), DomainError);
}

TEST(Candidates, DihedralFiveAtFive) {
    auto W = group("I2(5)");
    auto spec = first_prime(*W, 5);
    auto U = engine().candidate_projectives(*W, spec, coarse_partition(*W, spec));
    std::set<VirtualCharacter> got(U.begin(), U.end());
    EXPECT_TRUE(got.count(vc(*W, {{"1", 1}})));
    EXPECT_TRUE(got.count(vc(*W, {{"sgn", 1}})));
    EXPECT_TRUE(got.count(vc(*W, {{"rho1", 1}, {"rho2", 1}})));
}

TEST(Candidates, G4AtThreeStayInsideParts) {
    auto W = group("G4");
    auto spec = first_prime(*W, 3);
    auto coarse = coarse_partition(*W, spec);
    auto U = engine().candidate_projectives(*W, spec, coarse);
    bool on21 = false, on14 = false;
    for (auto& u : U) {
        auto s = detail::support(u);
        int part = coarse.part_of(s[0]);
        for (int c : s) EXPECT_EQ(coarse.part_of(c), part);
        on21 = on21 || (s.size() > 1 && W->characters[s[0]].name.rfind("phi2,", 0) == 0);
        on14 = on14 || (s.size() > 1 && W->characters[s[0]].name == "phi1,4");
    }
    EXPECT_TRUE(on21);
    EXPECT_TRUE(on14);
}

TEST(Indecomposability, DihedralSumOfRhos) {
    auto W = group("I2(5)");
    auto r = indecomposability_check(*W, vc(*W, {{"rho1", 1}, {"rho2", 1}}), first_prime(*W, 5));
    EXPECT_EQ(r.verdict, Verdict::indecomposable) << r.note;
}

TEST(Indecomposability, DefectZero) {
    auto W = group("G4");
    auto spec = first_prime(*W, 2);
    auto phi = vc(*W, {{"phi2,1", 1}});
    EXPECT_EQ(indecomposability_check(*W, phi, spec).verdict, Verdict::indecomposable);
    auto twice = vc(*W, {{"phi2,1", 2}});
    auto strict = indecomposability_check(*W, twice, spec, true);
    EXPECT_EQ(strict.verdict, Verdict::unknown);
    auto loose = indecomposability_check(*W, twice, spec, false);
    EXPECT_EQ(loose.verdict, Verdict::splittable);
    EXPECT_EQ(loose.part1, phi);
    EXPECT_EQ(loose.part2, phi);
}

TEST(Indecomposability, WeightCap) {
    auto W = group("I2(5)");
    auto r = indecomposability_check(*W, vc(*W, {{"rho1", 11}, {"rho2", 11}}), first_prime(*W, 5), true, 20);
    EXPECT_EQ(r.verdict, Verdict::unknown);
    EXPECT_NE(r.note.find("cap"), std::string::npos);
    EXPECT_THROW(indecomposability_check(*W, vc(*W, {{"rho1", -1}}), first_prime(*W, 5)), DomainError);
}

TEST(Indecomposability, NonProjectiveFailsTest) {
    auto W = group("I2(5)");
    auto r = indecomposability_check(*W, vc(*W, {{"rho1", 1}, {"1", 1}}), first_prime(*W, 5));
    EXPECT_EQ(r.verdict, Verdict::unknown);
}

TEST(HeckeBlocks, G4AtThree) {
    auto W = group("G4");
    const auto& pb = engine().hecke_blocks(*W, 3);
    EXPECT_EQ(named(*W, pb.blocks),
              (Names{{"phi1,0"}, {"phi3,2"}, {"phi2,1", "phi2,3"}, {"phi1,4", "phi1,8"}, {"phi2,5"}}));
    EXPECT_TRUE(pb.blocks.all_exact());
}

TEST(HeckeBlocks, G4AtTwoColumns) {
    auto W = group("G4");
    const auto& pb = engine().hecke_blocks(*W, 2);
    int big = pb.blocks.part_of(W->index_of("phi1,4"));
    EXPECT_EQ(pb.blocks.parts[big].size(), 3u);
    EXPECT_TRUE(pb.blocks.exact[big]);
    std::set<VirtualCharacter> cols;
    for (auto& c : pb.decomp.columns) {
        auto s = detail::support(c.chars);
        if (pb.blocks.part_of(s[0]) == big) {
            EXPECT_TRUE(c.resolved);
            cols.insert(c.chars);
        }
    }
    EXPECT_EQ(cols, (std::set<VirtualCharacter>{vc(*W, {{"phi1,4", 1}, {"phi2,5", 1}}),
                                                vc(*W, {{"phi1,8", 1}, {"phi2,5", 1}})}));
}

TEST(HeckeBlocks, GoodPrimeIsIdentity) {
    auto W = group("G4");
    const auto& pb = engine().hecke_blocks(*W, 5);
    EXPECT_EQ(pb.blocks.parts.size(), 7u);
    ASSERT_EQ(pb.decomp.columns.size(), 7u);
    for (auto& c : pb.decomp.columns) {
        EXPECT_EQ(detail::support(c.chars).size(), 1u);
        EXPECT_TRUE(c.resolved);
    }
}

TEST(HeckeBlocks, BoundsAreNested) {
    for (auto& n : small_groups()) {
        auto W = group(n);
        for (long p : bad_primes(*W))
            for (auto& s : engine().primes_for(*W, p)) {
                const auto& pb = engine().hecke_blocks_at(*W, s);
                EXPECT_TRUE(pb.blocks.refines(pb.coarse)) << n;
                EXPECT_TRUE(pb.lower.refines(pb.blocks)) << n;
            }
    }
}

TEST(HeckeBlocks, ColumnsAreProjective) {
    for (auto& n : small_groups()) {
        auto W = group(n);
        for (long p : bad_primes(*W))
            for (auto& s : engine().primes_for(*W, p)) {
                const auto& pb = engine().hecke_blocks_at(*W, s);
                for (auto& c : pb.decomp.columns) {
                    for (long x : c.chars) EXPECT_GE(x, 0);
                    auto supp = detail::support(c.chars);
                    for (int i : supp) EXPECT_EQ(pb.blocks.part_of(i), pb.blocks.part_of(supp[0]));
                    SubsumTester T(*W, c.chars, {s});
                    ASSERT_TRUE(T.supported());
                    std::vector<long> full;
                    for (int i : T.support()) full.push_back(c.chars[i]);
                    EXPECT_TRUE(T.integral(full)) << n << " " << p;
                }
            }
    }
}

// A projective seen only as a sum: the engine must not claim it.
TEST(HeckeBlocks, SumOfProjectivesStaysUnresolved) {
    auto W = group("G4");
    auto spec = first_prime(*W, 2);
    auto coarse = coarse_partition(*W, spec);
    VirtualCharacter sum = vc(*W, {{"phi1,4", 1}, {"phi1,8", 1}, {"phi2,5", 2}});
    std::vector<VirtualCharacter> U{sum};
    for (std::size_t i = 0; i < coarse.parts.size(); ++i)
        if (coarse.exact[i]) {
            VirtualCharacter e(W->num_irr(), 0);
            e[coarse.parts[i][0]] = 1;
            U.push_back(e);
        }
    auto pb = resolve_blocks(*W, spec, coarse, U);
    EXPECT_FALSE(pb.decomp.columns[0].resolved);
    int big = pb.blocks.part_of(W->index_of("phi1,4"));
    EXPECT_FALSE(pb.blocks.exact[big]);
    EXPECT_FALSE(pb.decomp.notes.empty());
}

TEST(Families, G4) {
    auto W = group("G4");
    auto fr = engine().families(*W);
    EXPECT_EQ(fr.bad_primes, (std::vector<long>{2, 3}));
    EXPECT_EQ(named(*W, fr.families),
              (Names{{"phi1,0"}, {"phi3,2"}, {"phi2,1", "phi2,3"}, {"phi1,4", "phi1,8", "phi2,5"}}));
    EXPECT_TRUE(fr.families.all_exact());
}

TEST(Families, Dihedral) {
    for (int n = 3; n <= 16; ++n) {
        auto W = group("I2(" + std::to_string(n) + ")");
        auto fr = engine().families(*W);
        std::set<std::string> rest;
        for (int i = 2; i < W->num_irr(); ++i) rest.insert(W->characters[i].name);
        Names want{{"1"}, {"sgn"}};
        if (n == 3) want.insert({"rho1"});
        else want.insert(rest);
        EXPECT_EQ(named(*W, fr.families), want) << n;
        EXPECT_TRUE(fr.families.all_exact()) << n;
    }
}

TEST(Families, Cyclic) {
    auto Z3 = group("Z3");
    EXPECT_EQ(named(*Z3, engine().families(*Z3).families), (Names{{"chi0"}, {"chi1", "chi2"}}));
    for (int d = 3; d <= 12; ++d) {
        auto W = group("Z" + std::to_string(d));
        auto fr = engine().families(*W);
        EXPECT_EQ(fr.families.parts.size(), 2u) << d;
        EXPECT_TRUE(fr.families.all_exact()) << d;
    }
}

TEST(Families, RefineEveryPrimePartition) {
    for (auto& n : small_groups()) {
        auto W = group(n);
        auto fr = engine().families(*W);
        for (auto& pb : fr.per_prime) EXPECT_TRUE(pb.blocks.refines(fr.families)) << n;
    }
}

TEST(Families, InvariantsConstant) {
    for (auto& n : small_groups()) {
        auto W = group(n);
        auto fr = engine().families(*W);
        auto inv = compute_invariants(*W);
        for (std::size_t i = 0; i < fr.families.parts.size(); ++i) {
            const auto& F = fr.families.parts[i];
            if (!fr.families.exact[i]) continue;
            int specials = 0;
            for (int c : F) {
                EXPECT_EQ(inv[c].a, inv[F[0]].a) << n;
                EXPECT_EQ(inv[c].A, inv[F[0]].A) << n;
                EXPECT_EQ(omega_pi_exponent(*W, c), omega_pi_exponent(*W, F[0])) << n;
                specials += inv[c].special;
            }
            if (W->spetsial) EXPECT_EQ(specials, 1) << n << " " << W->character_names(F);
        }
    }
}

TEST(Families, GaloisAndConjugationStable) {
    for (auto& n : small_groups()) {
        auto W = group(n);
        auto fr = engine().families(*W);
        auto lab = fr.families.labels();
        for (int c = 0; c < W->num_irr(); ++c)
            for (int d = 0; d < W->num_irr(); ++d)
                if (lab[c] == lab[d]) EXPECT_EQ(lab[W->conj_perm[c]], lab[W->conj_perm[d]]) << n;
        for (auto& perm : galois_orbits_action(*W))
            for (int c = 0; c < W->num_irr(); ++c)
                for (int d = 0; d < W->num_irr(); ++d)
                    if (lab[c] == lab[d]) EXPECT_EQ(lab[perm[c]], lab[perm[d]]) << n;
    }
}

// Within an exact block, relative-trace scalars agree modulo the prime.
TEST(Families, RelativeTraceConstantOnBlocks) {
    for (auto name : {"G4", "I2(5)", "I2(6)", "I2(8)", "Z4", "Z6"}) {
        auto W = group(name);
        for (long p : bad_primes(*W))
            for (auto& s : engine().primes_for(*W, p)) {
                const auto& pb = engine().hecke_blocks_at(*W, s);
                for (std::size_t i = 0; i < pb.blocks.parts.size(); ++i) {
                    const auto& B = pb.blocks.parts[i];
                    if (!pb.blocks.exact[i]) continue;
                    for (auto& emb : W->parabolics) {
                        auto sub = group(emb.subgroup);
                        RationalFunction t0 = relative_trace_scalar(*W, *sub, emb, B[0]);
                        for (int c : B) {
                            RationalFunction d = relative_trace_scalar(*W, *sub, emb, c) - t0;
                            auto v = content_valuation(d, s);
                            ASSERT_TRUE(v.has_value()) << name;
                            EXPECT_TRUE(v->at_least(1)) << name << " p=" << p << " over " << sub->name << ": "
                                                        << W->characters[c].name << " vs "
                                                        << W->characters[B[0]].name << " " << d.to_string();
                        }
                    }
                }
            }
    }
}

TEST(GlobalCheck, DihedralMiddleColumn) {
    for (int n = 4; n <= 16; ++n) {
        auto W = group("I2(" + std::to_string(n) + ")");
        VirtualCharacter phi(W->num_irr(), 1);
        phi[0] = phi[1] = 0;
        // the middle part of Ind from a reflection subgroup of the trivial character
        for (int i = 2; i < W->num_irr(); ++i) phi[i] = W->parabolics.front().induction[0][i];
        auto r = engine().global_check(*W, phi);
        EXPECT_EQ(r.verdict, Verdict::indecomposable) << n << " " << r.note;
    }
}

TEST(Engine, Deterministic) {
    BlockEngine a(catalog()), b(catalog());
    auto W = group("I2(12)");
    auto fa = a.families(*W), fb = b.families(*W);
    EXPECT_EQ(fa.families, fb.families);
    EXPECT_EQ(fa.families.exact, fb.families.exact);
}
