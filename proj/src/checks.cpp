// Check registry. Each check enumerates its cases in a fixed order:
// ideals in enumeration order, then elements ascending, then (s,n)
// lexicographic, so the first failure found is the least one.

#include "hyperlab/harness.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace hyperlab {

namespace {

using Sets = std::vector<ElementSet>;
using Elements = std::vector<Element>;
using OptSize = std::optional<std::size_t>;

Counterexample make_cx(Sets ideals, Elements elements, OptSize s, OptSize n, std::string detail) {
    return Counterexample{std::move(ideals), std::move(elements), s, n, std::move(detail)};
}

Elements witness_of(const ClosedVerdict& v) { return v.witness ? Elements{*v.witness} : Elements{}; }

std::string show(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string("inf"); }

/// Calls f on every index tuple of length t over [0,k): nondecreasing, or
/// strictly increasing when strict. Stops as soon as f returns false.
template <class F>
bool for_each_tuple(std::size_t k, std::size_t t, bool strict, F&& f) {
    std::vector<std::size_t> idx(t);
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
        if (pos == t) return f(idx);
        for (std::size_t i = from; i < k; ++i) {
            idx[pos] = i;
            if (!rec(pos + 1, strict ? i + 1 : i)) return false;
        }
        return true;
    };
    return rec(0, 0);
}

// Closedness that reads "false" for the whole ring instead of throwing.
bool closed_any(const FiniteHyperring& h, const ElementSet& q, std::size_t s, std::size_t n) {
    return is_proper(h, q) && is_sn_closed(h, q, s, n);
}

bool weakly_any(const FiniteHyperring& h, const ElementSet& q, std::size_t s, std::size_t n) {
    return is_proper(h, q) && is_weakly_sn_closed(h, q, s, n);
}

bool omega_le(const ClosedProfile& p, const ClosedProfile& q, std::size_t bound) {
    for (std::size_t s = 1; s <= bound; ++s)
        if (p.omega(s) > q.omega(s)) return false;
    return true;
}

/// Ω_P(n) ≤ Ω_Q(n) for all n, ∞ largest.
bool Omega_le(const ClosedProfile& p, const ClosedProfile& q, std::size_t bound) {
    for (std::size_t n = 1; n <= bound; ++n) {
        const auto a = p.Omega(n), b = q.Omega(n);
        if (!b) continue;
        if (!a || *a > *b) return false;
    }
    return true;
}

bool cset_subset(const ClosedProfile& p, const ClosedProfile& q, std::size_t bound) {
    for (std::size_t s = 1; s <= bound; ++s)
        for (std::size_t n = 1; n <= bound; ++n)
            if (p.closed(s, n) && !q.closed(s, n)) return false;
    return true;
}

// ------------------------------------------------------------ section 2

void check_T2_3(Analysis& an, CaseLog& log) {
    const auto& h = an.ring();
    for (const auto& q : an.proper_ideals()) {
        if (!an.c_ideal(q)) continue;
        const auto& p = an.profile(q);
        for (std::size_t n = 1; n <= an.config().absorbing_n_max; ++n) {
            if (!is_n_absorbing(h, q, n)) continue;
            const auto big = p.Omega(n);
            if (!log.expect(!big.has_value(), [&] {
                    const std::size_t s = *big;
                    return make_cx({q}, witness_of(sn_closed(h, q, s, n)), s, n,
                                   "n-absorbing C-hyperideal that is not (s,n)-closed");
                }))
                return;
        }
    }
}

void check_T2_4(Analysis& an, CaseLog& log) {
    const auto& h = an.ring();
    std::vector<std::size_t> primes;
    for (const auto& q : an.proper_ideals())
        if (an.prime(q)) primes.push_back(an.index_of(q));
    const std::size_t B = an.exact_bound();
    for (std::size_t t = 1; t <= an.config().t_max; ++t) {
        const bool go = for_each_tuple(primes.size(), t, false, [&](const std::vector<std::size_t>& idx) {
            std::size_t prod = primes[idx[0]];
            for (std::size_t k = 1; k < t; ++k) prod = an.product_index(prod, primes[idx[k]]);
            const auto& q = an.ideals()[prod];
            if (!is_proper(h, q)) return true;
            const auto& p = an.profile(q);
            std::size_t bad_s = 0;
            for (std::size_t s = 1; s <= B && bad_s == 0; ++s)
                if (p.omega(s) > std::min(s, t)) bad_s = s;
            return log.expect(bad_s == 0, [&] {
                Sets ideals;
                for (auto i : idx) ideals.push_back(an.ideals()[primes[i]]);
                ideals.push_back(q);
                const std::size_t n = std::min(bad_s, t);
                return make_cx(std::move(ideals), witness_of(sn_closed(h, q, bad_s, n)), bad_s, n,
                               "product of " + std::to_string(t) + " primes (last ideal) is not (s,min{s,t})-closed");
            });
        });
        if (!go) return;
    }
}

/// T2_5 (i) products, (ii) intersections. Strongest instance per s: s_i = s
/// and n_i = ω_i(s), since ω is nondecreasing.
void check_T2_5(Analysis& an, CaseLog& log, bool intersections) {
    const auto& h = an.ring();
    const auto& all = an.ideals();
    std::vector<std::size_t> proper;
    for (const auto& q : an.proper_ideals()) proper.push_back(an.index_of(q));
    const std::size_t B = an.exact_bound();
    for (std::size_t t = 1; t <= an.config().t_max; ++t) {
        const bool go = for_each_tuple(proper.size(), t, false, [&](const std::vector<std::size_t>& idx) {
            std::size_t combined = proper[idx[0]];
            ElementSet meet = all[combined];
            for (std::size_t k = 1; k < t; ++k) {
                if (intersections) meet &= all[proper[idx[k]]];
                else combined = an.product_index(combined, proper[idx[k]]);
            }
            const ElementSet q = intersections ? meet : all[combined];
            if (!is_proper(h, q)) return true;
            const auto& pq = an.profile(q);
            for (std::size_t s = 1; s <= B; ++s) {
                std::size_t agg = 0;
                for (auto i : idx) {
                    const auto w = an.profile(all[proper[i]]).omega(s);
                    agg = intersections ? std::max(agg, w) : agg + w;
                }
                const std::size_t n = std::min(s, agg);
                if (!log.expect(pq.closed(s, n), [&] {
                        Sets ideals;
                        for (auto i : idx) ideals.push_back(all[proper[i]]);
                        ideals.push_back(q);
                        return make_cx(std::move(ideals), witness_of(sn_closed(h, q, s, n)), s, n,
                                       intersections ? "intersection (last ideal) not closed at the max of the omegas"
                                                     : "product (last ideal) not closed at min{s, sum of omegas}");
                    }))
                    return false;
            }
            return true;
        });
        if (!go) return;
    }
}

void check_C2_6(Analysis& an, CaseLog& log) {
    const auto& h = an.ring();
    const auto& proper = an.proper_ideals();
    const auto& cfg = an.config();
    for (std::size_t t = 2; t <= cfg.t_max; ++t) {
        const bool go = for_each_tuple(proper.size(), t, false, [&](const std::vector<std::size_t>& idx) {
            ElementSet meet = proper[idx[0]];
            for (std::size_t k = 1; k < t; ++k) meet &= proper[idx[k]];
            const auto& pm = an.profile(meet);
            for (std::size_t s = 1; s <= cfg.s_max; ++s)
                for (std::size_t n = 1; n <= cfg.n_max; ++n) {
                    bool all_closed = true;
                    for (auto i : idx) all_closed = all_closed && an.profile(proper[i]).closed(s, n);
                    if (!all_closed) continue;
                    if (!log.expect(pm.closed(s, n), [&] {
                            Sets ideals;
                            for (auto i : idx) ideals.push_back(proper[i]);
                            ideals.push_back(meet);
                            return make_cx(std::move(ideals), witness_of(sn_closed(h, meet, s, n)), s, n,
                                           "intersection of (s,n)-closed hyperideals is not (s,n)-closed");
                        }))
                        return false;
                }
            return true;
        });
        if (!go) return;
    }
}

void check_C2_7(Analysis& an, CaseLog& log) {
    const auto& h = an.ring();
    const auto& all = an.ideals();
    std::vector<std::size_t> proper;
    for (const auto& q : an.proper_ideals()) proper.push_back(an.index_of(q));
    const auto& cfg = an.config();
    for (std::size_t t = 2; t <= cfg.t_max; ++t) {
        const bool go = for_each_tuple(proper.size(), t, true, [&](const std::vector<std::size_t>& idx) {
            for (std::size_t a = 0; a < t; ++a)
                for (std::size_t b = a + 1; b < t; ++b)
                    if (!is_coprime(h, all[proper[idx[a]]], all[proper[idx[b]]])) return true;
            std::size_t prod = proper[idx[0]];
            for (std::size_t k = 1; k < t; ++k) prod = an.product_index(prod, proper[idx[k]]);
            const auto& q = all[prod];
            for (std::size_t s = 1; s <= cfg.s_max; ++s)
                for (std::size_t n = 1; n <= cfg.n_max; ++n) {
                    bool all_closed = true;
                    for (auto i : idx) all_closed = all_closed && an.profile(all[proper[i]]).closed(s, n);
                    if (!all_closed) continue;
                    if (!log.expect(closed_any(h, q, s, n), [&] {
                            Sets ideals;
                            for (auto i : idx) ideals.push_back(all[proper[i]]);
                            ideals.push_back(q);
                            Elements w = is_proper(h, q) ? witness_of(sn_closed(h, q, s, n)) : Elements{};
                            return make_cx(std::move(ideals), std::move(w), s, n,
                                           "product of pairwise coprime (s,n)-closed hyperideals is not (s,n)-closed");
                        }))
                        return false;
                }
            return true;
        });
        if (!go) return;
    }
}

void check_T2_8(Analysis& an, CaseLog& log) {
    const auto& h = an.ring();
    for (const auto& q : an.proper_ideals()) {
        if (!an.strong_c_ideal(q)) continue;
        const auto& pq = an.profile(q);
        for (std::size_t s = 1; s <= an.config().s_max; ++s) {
            if (!pq.closed(s, 2)) continue;
            for (const auto& p : an.ideals()) {
                if (!ideal_power(h, p, s).subset_of(q)) continue;
                const ElementSet p2 = ideal_power(h, p, 2);
                const ElementSet sum = h.sum(p2, p2);
                if (!log.expect(sum.subset_of(q), [&] {
                        return make_cx({q, p}, (sum - q).members(), s, 2,
                                       "P^s inside Q but P^2+P^2 escapes Q (elements listed)");
                    }))
                    return;
            }
        }
    }
}

void check_T2_9(Analysis& an, CaseLog& log) {
    const auto& h = an.ring();
    const FundamentalRing* r = nullptr;
    try {
        r = &an.fundamental();
    } catch (const Error& e) {
        log.expect(false, [&] { return make_cx({}, {}, std::nullopt, std::nullopt, e.what()); });
        return;
    }
    const std::size_t bound = std::max(an.config().s_max, an.config().n_max);
    for (const auto& q : an.proper_ideals()) {
        const auto fi = ideal_in_fundamental(h, *r, q, bound);
        if (!fi.proper) log.note("image_is_whole_fundamental_ring");
        else if (!fi.mismatches.empty()) log.note("mismatch_with_proper_image");
        if (!log.expect(fi.is_ideal && fi.mismatches.empty(), [&] {
                if (!fi.is_ideal)
                    return make_cx({q}, fi.image.members(), std::nullopt, std::nullopt,
                                   "image in the fundamental ring is not an ideal (elements are class indices)");
                const auto& m = fi.mismatches.front();
                std::ostringstream os;
                os << "(s,n)-closed in the hyperring: " << (m.in_hyperring ? "yes" : "no")
                   << "; image proper: " << (fi.proper ? "yes" : "no") << "; image in G/gamma* with classes";
                for (const auto& c : r->classes) os << " " << c.to_string();
                os << ": " << (m.in_fundamental ? "yes" : "no");
                return make_cx({q, fi.image}, witness_of(sn_closed(h, q, m.s, m.n)), m.s, m.n, os.str());
            }))
            return;
    }
}

void check_R2_rad(Analysis& an, CaseLog& log) {
    const auto& h = an.ring();
    for (const auto& q : an.proper_ideals()) {
        const ElementSet rad = radical_from(h, q, an.ideals());
        const bool everything = an.profile(q).all_closed();
        if (!log.expect((rad == q) == everything, [&] {
                return make_cx({q, rad}, {}, std::nullopt, std::nullopt,
                               std::string("rad(Q) (second ideal) ") + (rad == q ? "equals" : "differs from") +
                                   " Q while every (s,n) closed: " + (everything ? "yes" : "no"));
            }))
            return;
    }
}

/// Direct (s,n) grid for Q, recomputed from powers without the profile.
std::vector<std::vector<bool>> direct_grid(const FiniteHyperring& h, const ElementSet& q, std::size_t smax,
                                           std::size_t nmax) {
    std::vector<std::vector<bool>> g(smax + 2, std::vector<bool>(nmax + 2, false));
    for (std::size_t s = 1; s <= smax + 1; ++s)
        for (std::size_t n = 1; n <= nmax + 1; ++n) g[s][n] = is_sn_closed(h, q, s, n);
    return g;
}

void check_T2_10(Analysis& an, CaseLog& log) {
    const auto& h = an.ring();
    const auto& cfg = an.config();
    for (const auto& q : an.proper_ideals()) {
        const auto g = direct_grid(h, q, cfg.s_max, cfg.n_max);
        for (std::size_t s = 1; s <= cfg.s_max; ++s)
            for (std::size_t n = 1; n <= cfg.n_max; ++n) {
                if (s == n || !g[s][n] || !g[s + 1][n + 1]) continue;
                if (!log.expect(g[s + 1][n], [&] {
                        return make_cx({q}, witness_of(sn_closed(h, q, s + 1, n)), s, n,
                                       "(s,n) and (s+1,n+1) closed but (s+1,n) is not");
                    }))
                    return;
            }
    }
}

void check_L2_11(Analysis& an, CaseLog& log) {
    const auto& h = an.ring();
    const auto& cfg = an.config();
    for (const auto& q : an.proper_ideals()) {
        const auto g = direct_grid(h, q, cfg.s_max, cfg.n_max);
        for (std::size_t s = 1; s <= cfg.s_max; ++s)
            for (std::size_t n = 1; n <= cfg.n_max; ++n) {
                if (s <= n && !log.expect(g[s][n], [&] {
                        return make_cx({q}, witness_of(sn_closed(h, q, s, n)), s, n, "s <= n but not (s,n)-closed");
                    }))
                    return;
                if (!g[s][n]) continue;
                for (std::size_t s2 = 1; s2 <= s; ++s2)
                    for (std::size_t n2 = n; n2 <= cfg.n_max; ++n2)
                        if (!log.expect(g[s2][n2], [&] {
                                return make_cx({q}, witness_of(sn_closed(h, q, s2, n2)), s, n,
                                               "(s,n) closed but (" + std::to_string(s2) + "," + std::to_string(n2) +
                                                   ") with smaller s and larger n is not");
                            }))
                            return;
            }
    }
}

void check_T2_12i(Analysis& an, CaseLog& log) {
    const auto& h = an.ring();
    const std::size_t B = an.exact_bound();
    for (const auto& q : an.proper_ideals()) {
        if (!an.c_ideal(q)) continue;
        const auto& p = an.profile(q);
        for (std::size_t n = 3; n <= B; ++n) {
            if (!p.closed(n, 2) || !p.closed(n + 1, 2)) continue;
            if (!log.expect(!p.Omega(2).has_value(), [&] {
                    const std::size_t t = *p.Omega(2);
                    return make_cx({q}, witness_of(sn_closed(h, q, t, 2)), n, 2,
                                   "(n,2),(n+1,2) closed for this n but (" + std::to_string(t) + ",2) is not");
                }))
                return;
        }
    }
}

void check_T2_12ii(Analysis& an, CaseLog& log) {
    const auto& h = an.ring();
    const std::size_t B = an.exact_bound();
    for (const auto& q : an.proper_ideals()) {
        if (!an.c_ideal(q)) continue;
        const auto& p = an.profile(q);
        for (std::size_t s = 2; s <= B; ++s)
            for (std::size_t n = 1; 2 * n <= s; ++n) {
                if (!p.closed(s, n)) continue;
                if (!log.expect(!p.Omega(n).has_value(), [&] {
                        const std::size_t t = *p.Omega(n);
                        return make_cx({q}, witness_of(sn_closed(h, q, t, n)), s, n,
                                       "(s,n) closed with 2n <= s but (" + std::to_string(t) + ",n) is not");
                    }))
                    return;
            }
    }
}

void check_R2_omega(Analysis& an, CaseLog& log) {
    const auto& proper = an.proper_ideals();
    const std::size_t B = an.exact_bound();
    for (const auto& P : proper)
        for (const auto& Q : proper) {
            const auto& pp = an.profile(P);
            const auto& pq = an.profile(Q);
            const bool sub = cset_subset(pp, pq, B);
            const bool om = omega_le(pq, pp, B);
            const bool big = Omega_le(pp, pq, B);
            if (sub != omega_le(pp, pq, B)) log.note("transposed_omega_direction_disagrees");
            if (!log.expect(sub == om && om == big, [&] {
                    return make_cx({P, Q}, {}, std::nullopt, std::nullopt,
                                   std::string("C(P) in C(Q): ") + (sub ? "yes" : "no") +
                                       "; omega_Q <= omega_P: " + (om ? "yes" : "no") +
                                       "; Omega_P <= Omega_Q: " + (big ? "yes" : "no"));
                }))
                return;
        }
}

void check_T2_13(Analysis& an, CaseLog& log) {
    const std::size_t B = an.exact_bound();
    for (const auto& q : an.proper_ideals()) {
        const auto& p = an.profile(q);
        for (std::size_t s = 1; s <= B; ++s) {
            const auto w = p.omega(s);
            if (w >= s) continue;
            const auto w1 = p.omega(s + 1);
            if (!log.expect(w1 == w || w1 >= w + 2, [&] {
                    return make_cx({q}, {}, s, w,
                                   "omega(s) = " + std::to_string(w) + " < s and omega(s+1) = " + std::to_string(w1));
                }))
                return;
        }
    }
}

void check_T2_14(Analysis& an, CaseLog& log) {
    const std::size_t B = an.exact_bound();
    for (const auto& q : an.proper_ideals()) {
        const auto& p = an.profile(q);
        for (std::size_t n = 1; n <= B; ++n) {
            const auto w = p.Omega(n);
            if (w && *w <= n) continue;
            const auto w1 = p.Omega(n + 1);
            const bool ok = !w ? !w1 : (!w1 || *w1 == *w || *w1 >= *w + 2);
            if (!log.expect(ok, [&] {
                    return make_cx({q}, {}, std::nullopt, n,
                                   "Omega(n) = " + show(w) + " > n and Omega(n+1) = " + show(w1));
                }))
                return;
        }
    }
}

/// The pair checks T2_15, T2_16, T2_17, C2_18 over unordered pairs P ≠ Q.
template <class F>
void for_each_pair(Analysis& an, F&& f) {
    const auto& proper = an.proper_ideals();
    for (std::size_t i = 0; i < proper.size(); ++i)
        for (std::size_t j = i + 1; j < proper.size(); ++j) {
            const ElementSet meet = proper[i] & proper[j];
            if (!f(proper[i], proper[j], meet)) return;
        }
}

struct PairFacts {
    bool omega_is_max = true;   // ω_{P∩Q} = ω_P ∨ ω_Q
    bool Omega_is_min = true;   // Ω_{P∩Q} = Ω_P ∧ Ω_Q
    bool cset_is_meet = true;   // 𝔠(P) ∩ 𝔠(Q) = 𝔠(P∩Q)
    bool omega_le_max = true;   // ω_{P∩Q} ≤ ω_P ∨ ω_Q
    bool Omega_ge_min = true;   // Ω_P ∧ Ω_Q ≤ Ω_{P∩Q}
};

PairFacts pair_facts(Analysis& an, const ElementSet& P, const ElementSet& Q, const ElementSet& M) {
    const std::size_t B = an.exact_bound();
    const auto& pp = an.profile(P);
    const auto& pq = an.profile(Q);
    const auto& pm = an.profile(M);
    PairFacts f;
    auto inf_min = [](OptSize a, OptSize b) -> OptSize {
        if (!a) return b;
        if (!b) return a;
        return std::min(*a, *b);
    };
    auto le = [](OptSize a, OptSize b) { return !b || (a && *a <= *b); };
    for (std::size_t s = 1; s <= B; ++s) {
        const auto mx = std::max(pp.omega(s), pq.omega(s));
        f.omega_is_max = f.omega_is_max && pm.omega(s) == mx;
        f.omega_le_max = f.omega_le_max && pm.omega(s) <= mx;
        const auto mn = inf_min(pp.Omega(s), pq.Omega(s));
        f.Omega_is_min = f.Omega_is_min && pm.Omega(s) == mn;
        f.Omega_ge_min = f.Omega_ge_min && le(mn, pm.Omega(s));
        for (std::size_t n = 1; n <= B; ++n)
            f.cset_is_meet = f.cset_is_meet && ((pp.closed(s, n) && pq.closed(s, n)) == pm.closed(s, n));
    }
    return f;
}

std::string facts_text(const PairFacts& f) {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    return std::string("omega_meet = max: ") + yn(f.omega_is_max) + "; Omega_meet = min: " + yn(f.Omega_is_min) +
           "; C(P) and C(Q) meet to C(P and Q): " + yn(f.cset_is_meet) + "; omega_meet <= max: " +
           yn(f.omega_le_max) + "; min <= Omega_meet: " + yn(f.Omega_ge_min);
}

void check_pair(Analysis& an, CaseLog& log, const std::function<bool(const PairFacts&)>& conclusion) {
    for_each_pair(an, [&](const ElementSet& P, const ElementSet& Q, const ElementSet& M) {
        const auto f = pair_facts(an, P, Q, M);
        return log.expect(conclusion(f), [&] { return make_cx({P, Q, M}, {}, std::nullopt, std::nullopt, facts_text(f)); });
    });
}

// ------------------------------------------------------------ section 3

void check_D3_w(Analysis& an, CaseLog& log) {
    const auto& h = an.ring();
    const auto& cfg = an.config();
    const auto& proper = an.proper_ideals();
    for (const auto& q : proper)
        for (std::size_t s = 1; s <= cfg.s_max; ++s)
            for (std::size_t n = 1; n <= cfg.n_max; ++n) {
                const bool w = is_weakly_sn_closed(h, q, s, n);
                if (is_sn_closed(h, q, s, n) &&
                    !log.expect(w, [&] { return make_cx({q}, {}, s, n, "(s,n)-closed but not weakly (s,n)-closed"); }))
                    return;
                if (!w) continue;
                for (std::size_t n2 = n + 1; n2 <= cfg.n_max; ++n2)
                    if (!log.expect(is_weakly_sn_closed(h, q, s, n2), [&] {
                            return make_cx({q}, witness_of(weakly_sn_closed(h, q, s, n2)), s, n,
                                           "weakly (s,n)-closed but not weakly (s," + std::to_string(n2) + ")-closed");
                        }))
                        return;
            }
    for (std::size_t i = 0; i < proper.size(); ++i)
        for (std::size_t j = i + 1; j < proper.size(); ++j) {
            const ElementSet meet = proper[i] & proper[j];
            for (std::size_t s = 1; s <= cfg.s_max; ++s)
                for (std::size_t n = 1; n <= cfg.n_max; ++n) {
                    if (!is_weakly_sn_closed(h, proper[i], s, n) || !is_weakly_sn_closed(h, proper[j], s, n)) continue;
                    if (!log.expect(is_weakly_sn_closed(h, meet, s, n), [&] {
                            return make_cx({proper[i], proper[j], meet}, witness_of(weakly_sn_closed(h, meet, s, n)),
                                           s, n, "intersection of weakly (s,n)-closed hyperideals is not");
                        }))
                        return;
                }
        }
}

void check_R3_tough(Analysis& an, CaseLog& log) {
    const auto& h = an.ring();
    const auto& cfg = an.config();
    for (const auto& q : an.proper_ideals()) {
        if (!an.c_ideal(q)) continue;
        for (std::size_t s = 1; s <= cfg.s_max; ++s)
            for (std::size_t n = 1; n <= cfg.n_max; ++n) {
                if (!is_weakly_sn_closed(h, q, s, n)) continue;
                const bool closed = is_sn_closed(h, q, s, n);
                const auto x = find_tough_zero(h, q, s, n);
                if (!log.expect(closed != x.has_value(), [&] {
                        return make_cx({q}, x ? Elements{*x} : witness_of(sn_closed(h, q, s, n)), s, n,
                                       closed ? "closed yet a tough-zero element exists"
                                              : "not closed yet no tough-zero element exists");
                    }))
                    return;
            }
    }
}

void check_T3_4(Analysis& an, CaseLog& log) {
    const auto& h = an.ring();
    const auto& cfg = an.config();
    for (const auto& q : an.proper_ideals()) {
        if (!an.strong_c_ideal(q)) continue;
        for (std::size_t s = 1; s <= cfg.s_max; ++s)
            for (std::size_t n = 1; n <= cfg.n_max; ++n) {
                if (!is_weakly_sn_closed(h, q, s, n)) continue;
                for (Element x = 0; x < h.order(); ++x) {
                    if (!h.power(x, s).contains(0) || h.power(x, n).subset_of(q)) continue;
                    std::optional<Element> bad;
                    q.for_each([&](Element a) {
                        if (!bad && !h.power(h.add(x, a), s).contains(0)) bad = a;
                    });
                    if (!log.expect(!bad, [&] {
                            return make_cx({q}, {x, *bad}, s, n, "tough-zero x (first) and a in Q with 0 not in (x+a)^s");
                        }))
                        return;
                }
            }
    }
}

void check_T3_5(Analysis& an, CaseLog& log) {
    const auto& h = an.ring();
    const auto& cfg = an.config();
    for (const auto& q : an.proper_ideals()) {
        if (!an.strong_c_ideal(q)) continue;
        for (std::size_t s = 1; s <= cfg.s_max; ++s)
            for (std::size_t n = 1; n <= cfg.n_max; ++n) {
                if (!is_weakly_sn_closed(h, q, s, n) || is_sn_closed(h, q, s, n)) continue;
                if (!log.expect(q.subset_of(an.nilpotent_set()), [&] {
                        return make_cx({q, an.nilpotent_set()}, (q - an.nilpotent_set()).members(), s, n,
                                       "weakly but not (s,n)-closed, yet not inside the nilpotents (listed elements)");
                    }))
                    return;
            }
    }
}

/// i-set existence, noting undecided instances.
bool has_i_set_noted(Analysis& an, CaseLog& log) {
    const auto found = an.i_set_exists();
    if (!found) log.note("i_set_undecided");
    return found.value_or(false);
}

void check_T3_6(Analysis& an, CaseLog& log) {
    const auto& h = an.ring();
    if (!h.strongly_distributive() || !h.has_scalar_identity()) return;
    if (!has_i_set_noted(an, log)) return;
    const auto& cfg = an.config();
    const auto& nil = an.nilpotent_set();
    for (std::size_t s = 2; s <= cfg.s_max; ++s)
        for (std::size_t n = 1; n < s && n <= cfg.n_max; ++n) {
            std::optional<ElementSet> not_weak;
            for (const auto& i : an.ideals())
                if (!not_weak && i.subset_of(nil) && !weakly_any(h, i, s, n)) not_weak = i;
            std::optional<Element> bad_x;
            nil.for_each([&](Element x) {
                if (!bad_x && !h.power(x, s).contains(0)) bad_x = x;
            });
            if (!log.expect(!not_weak.has_value() == !bad_x.has_value(), [&] {
                    Sets ideals{nil};
                    if (not_weak) ideals.push_back(*not_weak);
                    return make_cx(std::move(ideals), bad_x ? Elements{*bad_x} : Elements{}, s, n,
                                   std::string("hyperideals inside the nilpotents all weakly closed: ") +
                                       (not_weak ? "no" : "yes") + "; 0 in x^s on the nilpotents: " +
                                       (bad_x ? "no" : "yes"));
                }))
                return;
        }
}

void check_D3_reg(Analysis& an, CaseLog& log) {
    const auto& h = an.ring();
    const auto& cfg = an.config();
    for (Element a = 0; a < h.order(); ++a)
        for (std::size_t s = 1; s <= cfg.s_max; ++s)
            for (std::size_t n = 1; n <= cfg.n_max; ++n) {
                const bool big = is_sn_Regular(h, a, s, n);
                if (is_sn_regular(h, a, s, n) &&
                    !log.expect(big, [&] { return make_cx({}, {a}, s, n, "(s,n)-regular but not (s,n)-Regular"); }))
                    return;
                if (h.order() <= 6 && !log.expect(big == is_sn_Regular_by_subsets(h, a, s, n), [&] {
                        return make_cx({}, {a}, s, n, "Regular via the whole ring disagrees with the subset search");
                    }))
                    return;
            }
}

void check_T3_9(Analysis& an, CaseLog& log) {
    const auto& h = an.ring();
    if (!h.strongly_distributive() || !h.has_scalar_identity()) return;
    const auto& cfg = an.config();
    const ElementSet excluded = an.weak_zero_divisor_set() | units(h, *h.scalar_identity());
    for (Element a = 0; a < h.order(); ++a) {
        if (excluded.contains(a)) continue;
        for (std::size_t s = 1; s <= cfg.s_max; ++s)
            for (std::size_t n = 1; n <= cfg.n_max; ++n)
                if (!log.expect(is_sn_regular(h, a, s, n) == (s <= n), [&] {
                        return make_cx({}, {a}, s, n, s <= n ? "s <= n but not (s,n)-regular" : "s > n yet (s,n)-regular");
                    }))
                    return;
    }
}

void check_T3_10(Analysis& an, CaseLog& log) {
    const auto& h = an.ring();
    const auto& cfg = an.config();
    for (Element a = 0; a < h.order(); ++a)
        for (std::size_t s = 2; s <= cfg.s_max; ++s)
            for (std::size_t n = 1; n < s && n <= cfg.n_max; ++n) {
                if (!is_sn_regular(h, a, s, n)) continue;
                if (!log.expect(is_sn_Regular(h, a, s + 1, n), [&] {
                        return make_cx({}, {a}, s, n, "(s,n)-regular but not (s+1,n)-Regular");
                    }))
                    return;
            }
}

void check_T3_11(Analysis& an, CaseLog& log) {
    const auto& h = an.ring();
    const auto& cfg = an.config();
    for (Element e : h.identities()) {
        bool stop = false;
        units(h, e).for_each([&](Element x) {
            for (std::size_t s = 1; s <= cfg.s_max && !stop; ++s)
                for (std::size_t n = 1; n <= cfg.n_max && !stop; ++n)
                    if (!log.expect(is_sn_Regular(h, x, s, n), [&] {
                            return make_cx({}, {x, e}, s, n, "unit x (first) for identity e (second) is not Regular");
                        }))
                        stop = true;
        });
        if (stop) return;
    }
}

void check_T3_12(Analysis& an, CaseLog& log) {
    const auto& h = an.ring();
    if (!h.strongly_distributive()) return;
    if (!has_i_set_noted(an, log)) return;
    const auto& cfg = an.config();
    const auto& nil = an.nilpotent_set();
    for (std::size_t s = 2; s <= cfg.s_max; ++s)
        for (std::size_t n = 1; n < s && n <= cfg.n_max; ++n) {
            std::optional<ElementSet> not_weak;
            for (const auto& i : an.proper_ideals())
                if (!not_weak && !is_weakly_sn_closed(h, i, s, n)) not_weak = i;
            std::optional<Element> bad;
            for (Element a = 0; a < h.order() && !bad; ++a) {
                const bool ok = nil.contains(a) ? h.power(a, s).contains(0) : is_sn_Regular(h, a, s, n);
                if (!ok) bad = a;
            }
            if (!log.expect(!not_weak.has_value() == !bad.has_value(), [&] {
                    Sets ideals;
                    if (not_weak) ideals.push_back(*not_weak);
                    return make_cx(std::move(ideals), bad ? Elements{*bad} : Elements{}, s, n,
                                   std::string("all proper hyperideals weakly closed: ") + (not_weak ? "no" : "yes") +
                                       "; Regular off the nilpotents and 0 in a^s on them: " + (bad ? "no" : "yes"));
                }))
                return;
        }
}

struct NamedHom {
    std::string label;
    const FiniteHyperring* source;
    const FiniteHyperring* target;
    HomMap map;
};

/// Hyperideals of an arbitrary ring reachable from the analysis.
std::vector<ElementSet> ring_ideals(Analysis& an, const FiniteHyperring* r) {
    if (r == &an.ring()) return an.ideals();
    if (an.left() && r == &an.left()->ring()) return an.left()->ideals();
    if (an.right() && r == &an.right()->ring()) return an.right()->ideals();
    return enumerate_hyperideals(*r, ElementSet::kCapacity);
}

void check_T3_13hom(Analysis& an, CaseLog& log) {
    const auto& h = an.ring();
    const auto& cfg = an.config();
    std::vector<NamedHom> homs;
    {
        HomMap id;
        for (Element x = 0; x < h.order(); ++x) id.images.push_back(x);
        homs.push_back({"identity", &h, &h, std::move(id)});
    }
    for (const auto& p : an.proper_ideals()) {
        const auto& q = an.quotient(p);
        homs.push_back({"projection onto G/" + p.to_string(), &h, &q.ring, q.projection});
    }
    if (an.instance().is_product()) {
        const auto& g1 = an.left()->ring();
        const auto& g2 = an.right()->ring();
        HomMap p1, p2, i1, i2;
        for (Element x = 0; x < h.order(); ++x) {
            p1.images.push_back(static_cast<Element>(x / g2.order()));
            p2.images.push_back(static_cast<Element>(x % g2.order()));
        }
        for (Element x = 0; x < g1.order(); ++x) i1.images.push_back(pair_index(g2, x, 0));
        for (Element x = 0; x < g2.order(); ++x) i2.images.push_back(pair_index(g2, 0, x));
        homs.push_back({"first projection", &h, &g1, std::move(p1)});
        homs.push_back({"second projection", &h, &g2, std::move(p2)});
        homs.push_back({"first injection", &g1, &h, std::move(i1)});
        homs.push_back({"second injection", &g2, &h, std::move(i2)});
    }
    for (const auto& hom : homs) {
        const auto& G1 = *hom.source;
        const auto& G2 = *hom.target;
        if (!check_good_hom(G1, G2, hom.map)) {
            log.note("not_a_good_homomorphism");
            continue;
        }
        if (is_injective(hom.map, G2.order())) {
            for (const auto& q2 : ring_ideals(an, &G2)) {
                if (!is_proper(G2, q2)) continue;
                const ElementSet pre = hom_preimage(hom.map, G1.order(), q2);
                if (!is_proper(G1, pre)) {
                    log.note("preimage_is_whole_ring");
                    continue;
                }
                for (std::size_t s = 1; s <= cfg.s_max; ++s)
                    for (std::size_t n = 1; n <= cfg.n_max; ++n) {
                        if (!is_weakly_sn_closed(G2, q2, s, n)) continue;
                        if (!log.expect(is_hyperideal(G1, pre) && is_weakly_sn_closed(G1, pre, s, n), [&] {
                                return make_cx({q2, pre}, witness_of(weakly_sn_closed(G1, pre, s, n)), s, n,
                                               "injective " + hom.label + ": preimage (second) not weakly closed");
                            }))
                            return;
                    }
            }
        }
        if (is_surjective(hom.map, G2.order())) {
            const ElementSet ker = kernel(hom.map, G1.order());
            for (const auto& q1 : ring_ideals(an, &G1)) {
                if (!is_proper(G1, q1) || !ker.subset_of(q1)) continue;
                const ElementSet img = hom_image(hom.map, q1);
                for (std::size_t s = 1; s <= cfg.s_max; ++s)
                    for (std::size_t n = 1; n <= cfg.n_max; ++n) {
                        if (!is_weakly_sn_closed(G1, q1, s, n)) continue;
                        if (!log.expect(is_hyperideal(G2, img) && weakly_any(G2, img, s, n), [&] {
                                return make_cx({q1, img}, {}, s, n,
                                               "surjective " + hom.label + ": image (second) not weakly closed");
                            }))
                            return;
                    }
            }
        }
    }
}

void check_C3_quot(Analysis& an, CaseLog& log) {
    const auto& h = an.ring();
    const auto& cfg = an.config();
    const auto& proper = an.proper_ideals();
    for (const auto& p : proper) {
        const auto& quo = an.quotient(p);
        for (const auto& q : proper) {
            if (!p.subset_of(q)) continue;
            const ElementSet img = hom_image(quo.projection, q);
            for (std::size_t s = 1; s <= cfg.s_max; ++s)
                for (std::size_t n = 1; n <= cfg.n_max; ++n) {
                    if (!is_weakly_sn_closed(h, q, s, n)) continue;
                    if (!log.expect(is_hyperideal(quo.ring, img) && weakly_any(quo.ring, img, s, n), [&] {
                            return make_cx({p, q}, {}, s, n, "Q (second) weakly closed but Q/P is not in G/P");
                        }))
                        return;
                }
        }
    }
}

bool factors_have_scalar_identity(Analysis& an) {
    return an.instance().is_product() && an.left()->ring().has_scalar_identity() &&
           an.right()->ring().has_scalar_identity();
}

void check_T3_14(Analysis& an, CaseLog& log) {
    if (!factors_have_scalar_identity(an)) return;
    const auto& h = an.ring();
    auto& L = *an.left();
    const auto& cfg = an.config();
    const ElementSet g2 = an.right()->ring().carrier();
    for (const auto& q1 : L.proper_ideals()) {
        if (!L.c_ideal(q1)) continue;
        const ElementSet rect = an.rectangle(q1, g2);
        for (std::size_t s = 1; s <= cfg.s_max; ++s)
            for (std::size_t n = 1; n <= cfg.n_max; ++n) {
                const bool i = is_weakly_sn_closed(h, rect, s, n);
                const bool ii = is_sn_closed(L.ring(), q1, s, n);
                const bool iii = is_sn_closed(h, rect, s, n);
                if (!log.expect(i == ii && ii == iii, [&] {
                        return make_cx({q1, rect}, {}, s, n,
                                       std::string("Q1 x G2 weakly closed: ") + (i ? "yes" : "no") +
                                           "; Q1 closed: " + (ii ? "yes" : "no") +
                                           "; Q1 x G2 closed: " + (iii ? "yes" : "no"));
                    }))
                    return;
            }
    }
}

void check_L3_15(Analysis& an, CaseLog& log) {
    if (!an.instance().is_product()) return;
    auto& L = *an.left();
    auto& R = *an.right();
    for (const auto& i1 : L.ideals())
        for (const auto& i2 : R.ideals()) {
            const ElementSet rect = an.rectangle(i1, i2);
            const bool parts = L.c_ideal(i1) && R.c_ideal(i2);
            const bool whole = an.c_ideal(rect);
            if (!log.expect(parts == whole, [&] {
                    return make_cx({i1, i2, rect}, {}, std::nullopt, std::nullopt,
                                   std::string("I1 and I2 C-hyperideals: ") + (parts ? "yes" : "no") +
                                       "; I1 x I2 C-hyperideal: " + (whole ? "yes" : "no"));
                }))
                return;
        }
}

/// Condition (1) of the product characterization with (A,B) = (Q1,Q2) in
/// (G1,G2); condition (2) is the same with the factors swapped.
bool product_condition(const FiniteHyperring& g1, const FiniteHyperring& g2, const ElementSet& q1,
                       const ElementSet& q2, std::size_t s, std::size_t n) {
    if (!weakly_any(g1, q1, s, n) || is_sn_closed(g1, q1, s, n)) return false;
    for (Element b = 0; b < g2.order(); ++b)
        if (g2.power(b, s).subset_of(q2) && !g2.power(b, s).contains(0)) return false;
    bool exists_a = false;
    for (Element a = 0; a < g1.order() && !exists_a; ++a)
        exists_a = !g1.power(a, s).contains(0) && g1.power(a, s).subset_of(q1);
    return !exists_a || closed_any(g2, q2, s, n);
}

void check_T3_16(Analysis& an, CaseLog& log) {
    if (!factors_have_scalar_identity(an)) return;
    const auto& h = an.ring();
    auto& L = *an.left();
    auto& R = *an.right();
    const auto& cfg = an.config();
    for (const auto& q : an.proper_ideals()) {
        const ElementSet q1 = an.project_left(q);
        const ElementSet q2 = an.project_right(q);
        const bool rect = an.rectangle(q1, q2) == q && is_hyperideal(L.ring(), q1) && is_hyperideal(R.ring(), q2);
        const bool parts_c = rect && L.c_ideal(q1) && R.c_ideal(q2);
        for (std::size_t s = 1; s <= cfg.s_max; ++s)
            for (std::size_t n = 1; n <= cfg.n_max; ++n) {
                const bool lhs = an.c_ideal(q) && is_weakly_sn_closed(h, q, s, n) && !is_sn_closed(h, q, s, n);
                const bool rhs = parts_c && (product_condition(L.ring(), R.ring(), q1, q2, s, n) ||
                                             product_condition(R.ring(), L.ring(), q2, q1, s, n));
                if (!log.expect(lhs == rhs, [&] {
                        return make_cx({q, q1, q2}, {}, s, n,
                                       std::string("weakly-not-closed C-hyperideal: ") + (lhs ? "yes" : "no") +
                                           "; factor description holds: " + (rhs ? "yes" : "no"));
                    }))
                    return;
            }
    }
}

std::vector<TheoremCheck> build_registry() {
    std::vector<TheoremCheck> r;
    auto add = [&](std::string id, std::string statement, std::string reading,
                   std::function<void(Analysis&, CaseLog&)> run) {
        r.push_back(TheoremCheck{std::move(id), std::move(statement), std::move(reading), std::move(run), {}});
    };
    add("T2_3", "A proper C-hyperideal that is n-absorbing is (s,n)-closed for every s.",
        "n ranges over 1..absorbing_n_max; every s is covered exactly through the profile.", check_T2_3);
    add("T2_4", "A proper product of t prime hyperideals is (s,n)-closed whenever n >= min{s,t}.",
        "Products are generated hyperideals; t ranges over 1..t_max with repetition.", check_T2_4);
    add("T2_5i",
        "If each proper Q_i is (s_i,n_i)-closed and s <= every s_i, the product of the Q_i is (s,n)-closed for "
        "n >= min{s, n_1+...+n_t}.",
        "Checked at the strongest instance s_i = s, n_i = omega_i(s).",
        [](Analysis& an, CaseLog& log) { check_T2_5(an, log, false); });
    add("T2_5ii",
        "Under the same hypotheses the intersection of the Q_i is (s,n)-closed for n >= min{s, max n_i}.",
        "Checked at the strongest instance s_i = s, n_i = omega_i(s).",
        [](Analysis& an, CaseLog& log) { check_T2_5(an, log, true); });
    add("C2_6", "An intersection of (s,n)-closed hyperideals is (s,n)-closed.", "", check_C2_6);
    add("C2_7", "A product of pairwise coprime (s,n)-closed hyperideals is (s,n)-closed.",
        "Distinct ideals only; coprime means Q_i + Q_j is the whole ring.", check_C2_7);
    add("T2_8", "If Q is an (s,2)-closed strong C-hyperideal and P^s is inside Q, then P^2 + P^2 is inside Q.",
        "P ranges over all hyperideals including the whole ring; powers are set powers.", check_T2_8);
    add("T2_9", "Q is (s,n)-closed in G exactly when Q/gamma* is (s,n)-closed in the fundamental ring.",
        "Q/gamma* is the set of classes meeting Q; s,n range over 1..max(s_max,n_max).", check_T2_9);
    add("R2_rad", "rad(Q) = Q exactly when every pair (s,n) lies in C(Q).", "", check_R2_rad);
    add("T2_10", "If (s,n) and (s+1,n+1) lie in C(Q) with s != n, then (s+1,n) lies in C(Q).",
        "Evaluated from powers directly, not from the profile.", check_T2_10);
    add("L2_11", "C(Q) contains every (s,n) with s <= n and is closed under lowering s and raising n.",
        "Evaluated from powers directly, not from the profile.", check_L2_11);
    add("T2_12i",
        "For a proper C-hyperideal Q and n >= 3, if (n,2) and (n+1,2) lie in C(Q) then (t,2) lies in C(Q) for all t.",
        "", check_T2_12i);
    add("T2_12ii",
        "For a proper C-hyperideal Q, if (s,n) lies in C(Q) with 2n <= s then (t,n) lies in C(Q) for all t.", "",
        check_T2_12ii);
    add("R2_omega",
        "C(P) inside C(Q) is equivalent to a pointwise comparison of omega and to one of Omega.",
        "The omega comparison is taken as omega_Q <= omega_P, the direction that matches C(P) inside C(Q); "
        "disagreements of the other direction are counted in notes.",
        check_R2_omega);
    add("T2_13", "If omega_Q(s) < s then omega_Q(s+1) equals omega_Q(s) or exceeds it by at least 2.", "",
        check_T2_13);
    add("T2_14", "If Omega_Q(n) > n then Omega_Q(n+1) equals Omega_Q(n) or exceeds it by at least 2.",
        "Infinity compares above every integer.", check_T2_14);
    add("T2_15", "omega of P and Q intersected is at most the max; Omega of the intersection is at least the min.",
        "", [](Analysis& an, CaseLog& log) {
            check_pair(an, log, [](const PairFacts& f) { return f.omega_le_max && f.Omega_ge_min; });
        });
    add("T2_16", "omega of the intersection equals the pointwise max iff C(P) and C(Q) meet to C of the intersection.",
        "", [](Analysis& an, CaseLog& log) {
            check_pair(an, log, [](const PairFacts& f) { return f.omega_is_max == f.cset_is_meet; });
        });
    add("T2_17", "Omega of the intersection equals the pointwise min iff C(P) and C(Q) meet to C of the intersection.",
        "", [](Analysis& an, CaseLog& log) {
            check_pair(an, log, [](const PairFacts& f) { return f.Omega_is_min == f.cset_is_meet; });
        });
    add("C2_18", "omega of the intersection is the pointwise max iff Omega of it is the pointwise min.", "",
        [](Analysis& an, CaseLog& log) {
            check_pair(an, log, [](const PairFacts& f) { return f.omega_is_max == f.Omega_is_min; });
        });
    add("D3_w",
        "(s,n)-closed implies weakly (s,n)-closed; weak closedness is kept when n grows and under intersections.",
        "Weakly closed reads: 0 not in a^s and a^s inside Q imply a^n inside Q.", check_D3_w);
    add("R3_tough",
        "A weakly (s,n)-closed C-hyperideal fails to be (s,n)-closed exactly when it has an (s,n)-tough-zero "
        "element.",
        "A tough-zero x has 0 in x^s and x^n not inside Q.", check_R3_tough);
    add("T3_4", "For a tough-zero x of a weakly (s,n)-closed strong C-hyperideal Q, 0 lies in (x+a)^s for all a in Q.",
        "Every tough-zero element is tested, not only the least.", check_T3_4);
    add("T3_5",
        "A weakly (s,n)-closed strong C-hyperideal that is not (s,n)-closed lies inside the nilpotent elements.",
        "The second index of the non-closedness hypothesis is read as n.", check_T3_5);
    add("T3_6",
        "In a strongly distributive hyperring with scalar identity and an i-set, for s > n: every hyperideal inside "
        "the nilpotents is weakly (s,n)-closed iff 0 lies in x^s for every nilpotent x.",
        "The whole ring, when nilpotent, counts as not weakly closed. Instances whose i-set search is undecided are "
        "skipped and counted.",
        check_T3_6);
    add("D3_reg", "(s,n)-regular implies (s,n)-Regular, and Regular is decided by the multiplier set G.",
        "The subset search runs for order <= 6.", check_D3_reg);
    add("T3_9",
        "In a strongly distributive hyperring with scalar identity, an element outside the weak zero divisors and "
        "the units is (s,n)-regular iff s <= n.",
        "Weak zero divisors: 0 in a∘b for some nonzero b. Units relative to the scalar identity.", check_T3_9);
    r.back().unrealizable =
        "In a finite strongly distributive hyperring, if 0 is in no a∘b with b nonzero then the sets a∘b are pairwise "
        "disjoint (a∘b meeting a∘c puts 0 in a∘(b-c)), so they are singletons covering G and a is a unit.";
    add("T3_10", "If s > n and a is (s,n)-regular then a is (s+1,n)-Regular.", "", check_T3_10);
    add("T3_11", "Every unit is (s,n)-Regular for all s and n.", "Units are tested for every identity element.",
        check_T3_11);
    add("T3_12",
        "In a strongly distributive hyperring with an i-set, for s > n: every proper hyperideal is weakly "
        "(s,n)-closed iff every non-nilpotent element is (s,n)-Regular and 0 lies in a^s for every nilpotent a.",
        "Instances whose i-set search is undecided are skipped and counted.", check_T3_12);
    add("T3_13hom",
        "Preimages under injective good homomorphisms and images under surjective ones with kernel inside Q keep "
        "weak (s,n)-closedness.",
        "Maps: identity, quotient projections, product projections and injections, each validated. Preimages equal "
        "to the whole ring are skipped and counted.",
        check_T3_13hom);
    add("C3_quot", "If P is inside Q and Q is weakly (s,n)-closed then Q/P is weakly (s,n)-closed in G/P.",
        "G/P uses (a+P)∘(b+P) = {c+P : c in a∘b}; P ranges over proper hyperideals.", check_C3_quot);
    add("T3_14",
        "With scalar identities on both factors and Q1 a proper C-hyperideal: Q1 x G2 weakly (s,n)-closed, Q1 "
        "(s,n)-closed and Q1 x G2 (s,n)-closed are equivalent.",
        "", check_T3_14);
    add("L3_15", "I1 and I2 are C-hyperideals iff I1 x I2 is a C-hyperideal of the product.",
        "All hyperideals of the factors, including the whole factor.", check_L3_15);
    add("T3_16",
        "With scalar identities on both factors: Q is a weakly (s,n)-closed C-hyperideal of G1 x G2 that is not "
        "(s,n)-closed iff Q = Q1 x Q2 with C-hyperideals Q_i satisfying one of the two factor conditions.",
        "'If 0 is not in a^s inside Q1 for some a then Q2 is (s,n)-closed' is read with an existential a; "
        "(s,n)-closed requires a proper hyperideal.",
        check_T3_16);
    return r;
}

} // namespace

const std::vector<TheoremCheck>& default_registry() {
    static const std::vector<TheoremCheck> registry = build_registry();
    return registry;
}

const TheoremCheck& find_check(const std::string& id) {
    for (const auto& c : default_registry())
        if (c.id == id) return c;
    throw Error(ErrorKind::UnknownCheckId, "no check named '" + id + "'");
}

} // namespace hyperlab
