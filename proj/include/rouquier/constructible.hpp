#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "blocks.hpp"

namespace rouquier {

// Constructible characters: minimal generators of the monoid spanned by the
// family cuts of inductions of parabolic constructibles. Needs exact families
// all the way down.
class ConstructibleEngine {
  public:
    explicit ConstructibleEngine(BlockEngine& blocks) : blocks_(blocks) {}

    const std::vector<VirtualCharacter>& of(const GroupDatum& W) {
        if (auto it = memo_.find(W.name); it != memo_.end()) return it->second;
        std::vector<VirtualCharacter> out;
        if (W.parabolics.empty()) {
            if (W.num_irr() != 1) throw DomainError(W.name + " has no parabolics to induce from");
            out.push_back({1});
            return memo_.emplace(W.name, out).first->second;
        }
        FamilyResult fr = blocks_.families(W);
        for (std::size_t i = 0; i < fr.families.parts.size(); ++i)
            if (!fr.families.exact[i])
                throw AmbiguityError("family " + W.character_names(fr.families.parts[i]) + " of " + W.name +
                                     " is only an upper bound");
        int r = W.num_irr();
        std::vector<VirtualCharacter> P;
        for (auto& emb : W.parabolics) {
            auto sub = blocks_.catalog().get(emb.subgroup);
            for (auto& phi : of(*sub)) {
                VirtualCharacter ind(r, 0);
                for (int a = 0; a < sub->num_irr(); ++a)
                    if (phi[a])
                        for (int b = 0; b < r; ++b) ind[b] += phi[a] * emb.induction[a][b];
                for (auto& F : fr.families.parts) {
                    VirtualCharacter cut(r, 0);
                    for (int c : F) cut[c] = ind[c];
                    P.push_back(cut);
                }
            }
        }
        out = monoid_minimal_generators(P);
        return memo_.emplace(W.name, out).first->second;
    }

  private:
    BlockEngine& blocks_;
    std::map<std::string, std::vector<VirtualCharacter>> memo_;
};

inline std::vector<VirtualCharacter> constructible_chars(const Catalog& cat, const GroupDatum& W) {
    BlockEngine be(cat);
    ConstructibleEngine ce(be);
    return ce.of(W);
}

// The unique special character of a family, if there is exactly one.
inline std::optional<int> special_of(const std::vector<InvariantRecord>& inv, const std::vector<int>& F) {
    std::optional<int> s;
    for (int c : F)
        if (inv[c].special) {
            if (s) return std::nullopt;
            s = c;
        }
    return s;
}

// <phi, chi_s> - sum over F of <phi, chi> / f_chi, evaluated exactly.
inline Cyclotomic construc_pairing(const GroupDatum& W, const VirtualCharacter& phi, const std::vector<int>& F,
                                   const std::vector<Cyclotomic>& f) {
    auto inv = compute_invariants(W);
    auto s = special_of(inv, F);
    if (!s) throw DomainError("family " + W.character_names(F) + " has no unique special character");
    Cyclotomic v(phi[*s]);
    for (int c : F)
        if (phi[c]) v -= Cyclotomic(phi[c]) / f[c];
    return v;
}

inline bool construc_pairing_check(const GroupDatum& W, const VirtualCharacter& phi, const std::vector<int>& F) {
    std::vector<Cyclotomic> f;
    for (int c = 0; c < W.num_irr(); ++c) f.push_back(f_of(W, c));
    return construc_pairing(W, phi, F, f).is_zero();
}

}  // namespace rouquier
