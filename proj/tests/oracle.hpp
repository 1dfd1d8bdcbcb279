#pragma once

// Brute-force reference implementations used to cross-check the library.
// They work on plain std::set tables and share no code with src/.

#include "hyperlab/hyperring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Set = std::set<unsigned>;

struct Tables {
    unsigned n = 0;
    std::vector<std::vector<unsigned>> add;
    std::vector<std::vector<Set>> mul;
};

inline Tables from(const hyperlab::FiniteHyperring& h) {
    Tables t;
    t.n = static_cast<unsigned>(h.order());
    t.add.assign(t.n, std::vector<unsigned>(t.n));
    t.mul.assign(t.n, std::vector<Set>(t.n));
    for (unsigned a = 0; a < t.n; ++a)
        for (unsigned b = 0; b < t.n; ++b) {
            t.add[a][b] = h.add(a, b);
            for (auto e : h.mul(a, b).members()) t.mul[a][b].insert(e);
        }
    return t;
}

inline unsigned neg(const Tables& t, unsigned a) {
    for (unsigned b = 0; b < t.n; ++b)
        if (t.add[a][b] == 0) return b;
    return 0;
}

inline Set prod(const Tables& t, const Set& A, const Set& B) {
    Set out;
    for (auto a : A)
        for (auto b : B) out.insert(t.mul[a][b].begin(), t.mul[a][b].end());
    return out;
}

inline Set sum(const Tables& t, const Set& A, const Set& B) {
    Set out;
    for (auto a : A)
        for (auto b : B) out.insert(t.add[a][b]);
    return out;
}

/// a^k by repeated multiplication from the left.
inline Set power(const Tables& t, unsigned a, std::size_t k) {
    Set p{a};
    for (std::size_t i = 1; i < k; ++i) p = prod(t, p, Set{a});
    return p;
}

inline bool subset(const Set& a, const Set& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

inline Set to_set(const hyperlab::ElementSet& s) {
    const auto m = s.members();
    return Set(m.begin(), m.end());
}

/// Every subset of the carrier that is a nonempty subtraction-closed absorbing set.
inline std::vector<Set> hyperideals(const Tables& t) {
    std::vector<Set> out;
    for (unsigned mask = 1; mask < (1U << t.n); ++mask) {
        Set s;
        for (unsigned e = 0; e < t.n; ++e)
            if (mask >> e & 1U) s.insert(e);
        bool ok = true;
        for (auto a : s)
            for (auto b : s) ok = ok && s.count(t.add[a][neg(t, b)]);
        for (auto a : s)
            for (unsigned r = 0; r < t.n; ++r) ok = ok && subset(t.mul[a][r], s);
        if (ok) out.push_back(s);
    }
    return out;
}

inline bool sn_closed(const Tables& t, const Set& q, std::size_t s, std::size_t n) {
    for (unsigned a = 0; a < t.n; ++a)
        if (subset(power(t, a, s), q) && !subset(power(t, a, n), q)) return false;
    return true;
}

inline bool weakly_sn_closed(const Tables& t, const Set& q, std::size_t s, std::size_t n) {
    for (unsigned a = 0; a < t.n; ++a) {
        const Set ps = power(t, a, s);
        if (!ps.count(0) && subset(ps, q) && !subset(power(t, a, n), q)) return false;
    }
    return true;
}

/// All finite products a1∘…∘ak (k ≥ 1), grown until no new set appears.
inline std::set<Set> products(const Tables& t) {
    std::set<Set> all;
    std::vector<Set> frontier;
    for (unsigned a = 0; a < t.n; ++a)
        if (all.insert(Set{a}).second) frontier.push_back(Set{a});
    while (!frontier.empty()) {
        std::vector<Set> next;
        for (const auto& p : frontier)
            for (unsigned a = 0; a < t.n; ++a) {
                Set q = prod(t, p, Set{a});
                if (all.insert(q).second) next.push_back(q);
            }
        frontier = std::move(next);
    }
    return all;
}

/// Finite sums of members of C, grown the same way.
inline std::set<Set> sums(const Tables& t, const std::set<Set>& C) {
    std::set<Set> all = C;
    std::vector<Set> frontier(C.begin(), C.end());
    while (!frontier.empty()) {
        std::vector<Set> next;
        for (const auto& u : frontier)
            for (const auto& c : C) {
                Set v = sum(t, u, c);
                if (all.insert(v).second) next.push_back(v);
            }
        frontier = std::move(next);
    }
    return all;
}

/// γ* classes by Warshall closure of the co-membership relation.
inline std::vector<Set> gamma_star(const Tables& t) {
    const unsigned n = t.n;
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (unsigned a = 0; a < n; ++a) r[a][a] = true;
    for (const auto& u : sums(t, products(t)))
        for (auto x : u)
            for (auto y : u) r[x][y] = true;
    for (unsigned k = 0; k < n; ++k)
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j)
                if (r[i][k] && r[k][j]) r[i][j] = true;
    std::vector<Set> classes;
    std::vector<bool> seen(n, false);
    for (unsigned a = 0; a < n; ++a) {
        if (seen[a]) continue;
        Set c;
        for (unsigned b = 0; b < n; ++b)
            if (r[a][b]) {
                c.insert(b);
                seen[b] = true;
            }
        classes.push_back(c);
    }
    return classes;
}

/// Every axiom by direct triple loops.
inline bool is_hyperring(const Tables& t) {
    const unsigned n = t.n;
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b) {
            if (t.add[a][b] != t.add[b][a] || t.mul[a][b] != t.mul[b][a] || t.mul[a][b].empty()) return false;
            const Set neg_ab = [&] {
                Set s;
                for (auto x : t.mul[a][b]) s.insert(neg(t, x));
                return s;
            }();
            if (t.mul[a][neg(t, b)] != neg_ab) return false;
            for (unsigned c = 0; c < n; ++c) {
                if (t.add[t.add[a][b]][c] != t.add[a][t.add[b][c]]) return false;
                if (prod(t, t.mul[a][b], Set{c}) != prod(t, Set{a}, t.mul[b][c])) return false;
                if (!subset(t.mul[a][t.add[b][c]], sum(t, t.mul[a][b], t.mul[a][c]))) return false;
            }
        }
    for (unsigned a = 0; a < n; ++a)
        if (t.add[a][0] != a) return false;
    return true;
}

} // namespace oracle
