#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"

namespace rouquier {

// Ordered pair of rows; most comparisons go through canonical(), which
// forgets the order.
struct Symbol {
    std::vector<int> S, T;

    Symbol() = default;
    Symbol(std::vector<int> s, std::vector<int> t) : S(std::move(s)), T(std::move(t)) {
        std::sort(S.begin(), S.end());
        std::sort(T.begin(), T.end());
        for (auto* row : {&S, &T}) {
            if (std::adjacent_find(row->begin(), row->end()) != row->end())
                throw DomainError("symbol row with a repeated entry");
            if (!row->empty() && row->front() < 0) throw DomainError("symbol with a negative entry");
        }
    }

    int size() const { return static_cast<int>(S.size() + T.size()); }
    int signed_defect() const { return static_cast<int>(S.size()) - static_cast<int>(T.size()); }
    int defect() const { return std::abs(signed_defect()); }
    long rank() const {
        long sum = 0;
        for (int x : S) sum += x;
        for (int x : T) sum += x;
        long m = size() - 1;
        return sum - m * m / 4;
    }

    Symbol shifted() const {
        std::vector<int> s{0}, t{0};
        for (int x : S) s.push_back(x + 1);
        for (int x : T) t.push_back(x + 1);
        return {s, t};
    }

    // Undo shifts while both rows start with 0.
    Symbol normalized() const {
        Symbol r = *this;
        while (!r.S.empty() && !r.T.empty() && r.S[0] == 0 && r.T[0] == 0) {
            r.S.erase(r.S.begin());
            r.T.erase(r.T.begin());
            for (int& x : r.S) --x;
            for (int& x : r.T) --x;
        }
        return r;
    }

    // normalized, with the rows in a fixed order
    Symbol canonical() const {
        Symbol r = normalized();
        if (std::make_pair(r.S.size(), r.S) < std::make_pair(r.T.size(), r.T)) std::swap(r.S, r.T);
        return r;
    }

    std::vector<int> family_key() const {
        Symbol n = normalized();
        std::vector<int> z = n.S;
        z.insert(z.end(), n.T.begin(), n.T.end());
        std::sort(z.begin(), z.end());
        return z;
    }

    friend bool operator==(const Symbol&, const Symbol&) = default;
    friend auto operator<=>(const Symbol&, const Symbol&) = default;

    std::string to_string() const {
        auto row = [](const std::vector<int>& v) {
            std::string s = "{";
            for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
            return s + "}";
        };
        return "(" + row(S) + ", " + row(T) + ")";
    }
};

inline bool same_symbol(const Symbol& a, const Symbol& b) { return a.canonical() == b.canonical(); }

enum class Row { S, T };

namespace detail {

inline std::vector<int>& row_of(Symbol& s, Row r) { return r == Row::S ? s.S : s.T; }
inline bool has(const std::vector<int>& v, int x) { return std::binary_search(v.begin(), v.end(), x); }
inline void insert_sorted(std::vector<int>& v, int x) { v.insert(std::lower_bound(v.begin(), v.end(), x), x); }
inline void erase_value(std::vector<int>& v, int x) { v.erase(std::lower_bound(v.begin(), v.end(), x)); }

}  // namespace detail

// Move lambda in one row to lambda - l in the other.
inline Symbol remove_cohook(const Symbol& s, int l, Row row, int lambda) {
    Symbol r = s;
    auto& from = detail::row_of(r, row);
    auto& to = detail::row_of(r, row == Row::S ? Row::T : Row::S);
    if (l < 1 || !detail::has(from, lambda) || lambda - l < 0 || detail::has(to, lambda - l))
        throw DomainError("no cohook of length " + std::to_string(l) + " at " + std::to_string(lambda));
    detail::erase_value(from, lambda);
    detail::insert_sorted(to, lambda - l);
    return r;
}

// Inverse of remove_cohook: mu in one row goes to mu + l in the other.
inline Symbol add_cohook(const Symbol& s, int l, Row row, int mu) {
    Symbol r = s;
    auto& from = detail::row_of(r, row);
    auto& to = detail::row_of(r, row == Row::S ? Row::T : Row::S);
    if (l < 1 || !detail::has(from, mu) || detail::has(to, mu + l))
        throw DomainError("cannot add a cohook of length " + std::to_string(l) + " at " + std::to_string(mu));
    detail::erase_value(from, mu);
    detail::insert_sorted(to, mu + l);
    return r;
}

inline Symbol remove_hook(const Symbol& s, int d, Row row, int lambda) {
    Symbol r = s;
    auto& v = detail::row_of(r, row);
    if (d < 1 || !detail::has(v, lambda) || lambda - d < 0 || detail::has(v, lambda - d))
        throw DomainError("no hook of length " + std::to_string(d) + " at " + std::to_string(lambda));
    detail::erase_value(v, lambda);
    detail::insert_sorted(v, lambda - d);
    return r;
}

// All single removals; cohook = true for cohooks of length l, else hooks.
inline std::vector<Symbol> removals(const Symbol& s, int l, bool cohook) {
    std::vector<Symbol> out;
    for (Row row : {Row::S, Row::T}) {
        const auto& v = row == Row::S ? s.S : s.T;
        const auto& other = row == Row::S ? s.T : s.S;
        for (int x : v) {
            if (x - l < 0) continue;
            if (cohook ? detail::has(other, x - l) : detail::has(v, x - l)) continue;
            out.push_back(cohook ? remove_cohook(s, l, row, x) : remove_hook(s, l, row, x));
        }
    }
    return out;
}

namespace detail {

inline Symbol strip(Symbol s, int l, bool cohook) {
    if (l < 1) throw DomainError("hook length must be positive");
    for (;;) {
        auto next = removals(s, l, cohook);
        if (next.empty()) return s.canonical();
        s = next.front();
    }
}

}  // namespace detail

inline Symbol d_core(const Symbol& s, int d) { return detail::strip(s, d, false); }
inline Symbol e_cocore(const Symbol& s, int e) { return detail::strip(s, e, true); }

// Every removal order; returns the set of canonical end results.
inline std::set<Symbol> all_residues(const Symbol& s, int l, bool cohook) {
    std::set<Symbol> seen, ends;
    std::vector<Symbol> todo{s};
    while (!todo.empty()) {
        Symbol x = todo.back();
        todo.pop_back();
        if (!seen.insert(x).second) continue;
        auto next = removals(x, l, cohook);
        if (next.empty()) ends.insert(x.canonical());
        for (auto& y : next) todo.push_back(y);
    }
    return ends;
}

inline bool same_series(const Symbol& a, const Symbol& b, int d) {
    if (a.rank() != b.rank()) throw DomainError("same_series: ranks differ");
    if (d % 2) return d_core(a, d) == d_core(b, d);
    return e_cocore(a, d / 2) == e_cocore(b, d / 2);
}

struct Bridge {
    Symbol target;
    int length = 0;
};

// Moves the singletons lambda1 < lambda2 of S over to T.
inline Bridge defect_bridge(const Symbol& s, int lambda1, int lambda2) {
    if (!(lambda1 < lambda2) || !detail::has(s.S, lambda1) || !detail::has(s.S, lambda2) ||
        detail::has(s.T, lambda1) || detail::has(s.T, lambda2))
        throw DomainError("defect_bridge: need two entries of S absent from T");
    Symbol mid = remove_cohook(s, lambda2 - lambda1, Row::S, lambda2);
    Symbol out = add_cohook(mid, lambda2 - lambda1, Row::S, lambda1);
    return {out, lambda2 - lambda1};
}

// First usable pair of S-singletons.
inline Bridge defect_bridge(const Symbol& s) {
    std::vector<int> single;
    for (int x : s.S)
        if (!detail::has(s.T, x)) single.push_back(x);
    if (single.size() < 2) throw DomainError("defect_bridge: fewer than two singletons in S");
    return defect_bridge(s, single[0], single[1]);
}

namespace detail {

inline void partitions_of(int n, int maxpart, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, maxpart); k >= 1; --k) {
        cur.push_back(k);
        partitions_of(n - k, k, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_of(n, n, cur, out);
    return out;
}

// beta-set of length len for a partition (parts decreasing)
inline std::vector<int> beta_set(const std::vector<int>& part, int len) {
    std::vector<int> v;
    for (int i = 0; i < len; ++i) {
        int idx = len - 1 - i;  // smallest beta number takes the smallest part
        int p = idx < static_cast<int>(part.size()) ? part[idx] : 0;
        v.push_back(p + i);
    }
    return v;
}

}  // namespace detail

// Canonical symbols of the given rank and defect (defect 0 counted once per
// unordered pair of rows).
inline std::vector<Symbol> symbols_of(int rank, int defect) {
    std::vector<Symbol> out;
    if (defect < 0) return out;
    long base = (static_cast<long>(defect) * defect) / 4;  // floor(d^2/4) is the cuspidal rank
    if (rank < base) return out;
    int n = static_cast<int>(rank - base);
    std::set<Symbol> seen;
    for (int a = 0; a <= n; ++a)
        for (auto& alpha : detail::partitions(a))
            for (auto& beta : detail::partitions(n - a)) {
                int m = static_cast<int>(std::max(alpha.size(), beta.size() + 0));
                int lenT = m, lenS = m + defect;
                if (static_cast<int>(alpha.size()) > lenS) continue;
                Symbol s(detail::beta_set(alpha, lenS), detail::beta_set(beta, lenT));
                if (s.rank() != rank) throw DomainError("symbol enumeration produced a wrong rank");
                Symbol c = s.canonical();
                if (seen.insert(c).second) out.push_back(c);
            }
    return out;
}

struct FamilyReport {
    long families = 0;
    long symbols = 0;
    long violations = 0;
    long bridges_checked = 0;
    std::vector<std::string> messages;
};

// For every family of symbols up to the bounds, check that linking members
// whose d-series agree for some d connects the whole family, that members of
// equal defect share their 1-series, and that the odd defects below the
// maximum all occur. `keep` filters defects (odd for types B and C).
inline FamilyReport verify_family_finest(int max_rank, int max_defect,
                                         const std::function<bool(int)>& keep = [](int d) { return d % 2 == 1; }) {
    FamilyReport rep;
    for (int n = 0; n <= max_rank; ++n) {
        std::map<std::vector<int>, std::vector<Symbol>> fam;
        for (int t = 0; t <= max_defect; ++t) {
            if (!keep(t)) continue;
            for (auto& s : symbols_of(n, t)) fam[s.family_key()].push_back(s);
        }
        for (auto& [key, F] : fam) {
            ++rep.families;
            rep.symbols += static_cast<long>(F.size());
            int k = static_cast<int>(F.size());
            int top = 0;
            for (int x : key) top = std::max(top, x);
            std::vector<int> up(k);
            for (int i = 0; i < k; ++i) up[i] = i;
            std::function<int(int)> find = [&](int x) { return up[x] == x ? x : up[x] = find(up[x]); };
            std::set<int> defects;
            for (auto& s : F) defects.insert(s.defect());
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) {
                    if (F[i].defect() == F[j].defect() && !same_series(F[i], F[j], 1)) {
                        ++rep.violations;
                        rep.messages.push_back(F[i].to_string() + " and " + F[j].to_string() +
                                               " have equal defect but different 1-series");
                    }
                    for (int d = 1; d <= 2 * top + 2 && find(i) != find(j); ++d)
                        if (same_series(F[i], F[j], d)) up[find(i)] = find(j);
                }
            for (int i = 1; i < k; ++i)
                if (find(i) != find(0)) {
                    ++rep.violations;
                    rep.messages.push_back("family " + F[0].to_string() + " splits: " + F[i].to_string() +
                                           " is not series-linked to it");
                    break;
                }
            int dmax = *defects.rbegin();
            for (int d = dmax % 2; d <= dmax; d += 2)
                if (keep(d) && !defects.count(d)) {
                    ++rep.violations;
                    rep.messages.push_back("family " + F[0].to_string() + " misses defect " + std::to_string(d));
                }
            for (auto& s : F) {
                for (const Symbol& o : {s, Symbol(s.T, s.S)}) {
                    std::vector<int> single;
                    for (int x : o.S)
                        if (!detail::has(o.T, x)) single.push_back(x);
                    for (std::size_t a = 0; a < single.size(); ++a)
                        for (std::size_t b = a + 1; b < single.size(); ++b) {
                            Bridge br = defect_bridge(o, single[a], single[b]);
                            ++rep.bridges_checked;
                            bool ok = br.target.family_key() == o.family_key() &&
                                      br.target.signed_defect() == o.signed_defect() - 4 &&
                                      br.target.rank() == o.rank() &&
                                      e_cocore(br.target, br.length) == e_cocore(o, br.length);
                            if (!ok) {
                                ++rep.violations;
                                rep.messages.push_back("bridge from " + o.to_string() + " fails");
                            }
                        }
                }
            }
        }
    }
    return rep;
}

}  // namespace rouquier
