#include "hyperlab/ideals.hpp"

#include <algorithm>
#include <unordered_set>

namespace hyperlab {

namespace {

// ∪_{r∈G, a∈S} r∘a
ElementSet absorb(const FiniteHyperring& h, const ElementSet& s) {
    ElementSet out;
    s.for_each([&](Element a) {
        for (Element r = 0; r < h.order(); ++r) out |= h.mul(r, a);
    });
    return out;
}

void require_proper(const FiniteHyperring& h, const ElementSet& p, const char* what) {
    if (!is_proper(h, p)) throw Error(ErrorKind::ProperIdealRequired, what);
}

using SetHashSet = std::unordered_set<ElementSet, ElementSetHash>;

std::vector<ElementSet> sorted(const SetHashSet& s) {
    std::vector<ElementSet> v(s.begin(), s.end());
    std::sort(v.begin(), v.end(), size_lex_less);
    return v;
}

} // namespace

bool is_hyperideal(const FiniteHyperring& h, const ElementSet& s) {
    if (s.empty() || !s.subset_of(h.carrier())) return false;
    bool ok = true;
    s.for_each([&](Element a) {
        if (!ok) return;
        s.for_each([&](Element b) {
            if (ok && !s.contains(h.sub(a, b))) ok = false;
        });
    });
    return ok && absorb(h, s).subset_of(s);
}

ElementSet additive_closure(const FiniteHyperring& h, const ElementSet& s) {
    ElementSet cur = s;
    cur.insert(0);
    std::vector<Element> frontier = cur.members();
    const std::vector<Element> gens = cur.members();
    while (!frontier.empty()) {
        std::vector<Element> next;
        for (Element x : frontier)
            for (Element g : gens) {
                const Element y = h.add(x, g);
                if (!cur.contains(y)) {
                    cur.insert(y);
                    next.push_back(y);
                }
            }
        frontier = std::move(next);
    }
    return cur;
}

ElementSet generate_hyperideal(const FiniteHyperring& h, const ElementSet& gens) {
    ElementSet cur = gens;
    cur.insert(0);
    for (;;) {
        cur = additive_closure(h, cur);
        const ElementSet next = cur | absorb(h, cur);
        if (next == cur) return cur;
        cur = next;
    }
}

std::vector<ElementSet> additive_subgroups(const FiniteHyperring& h) {
    SetHashSet seen;
    std::vector<ElementSet> work{ElementSet::singleton(0)};
    seen.insert(work.front());
    while (!work.empty()) {
        const ElementSet g = work.back();
        work.pop_back();
        for (Element a = 0; a < h.order(); ++a) {
            if (g.contains(a)) continue;
            ElementSet with = g;
            with.insert(a);
            ElementSet next = additive_closure(h, with);
            if (seen.insert(next).second) work.push_back(next);
        }
    }
    return sorted(seen);
}

std::vector<ElementSet> enumerate_hyperideals(const FiniteHyperring& h, std::size_t max_order) {
    if (h.order() > max_order)
        throw Error(ErrorKind::OrderTooLarge, "enumerate_hyperideals: order " + std::to_string(h.order()) +
                                                  " exceeds bound " + std::to_string(max_order));
    std::vector<ElementSet> out;
    for (const auto& g : additive_subgroups(h))
        if (absorb(h, g).subset_of(g)) out.push_back(g);
    return out;
}

bool is_prime(const FiniteHyperring& h, const ElementSet& p) {
    require_proper(h, p, "is_prime");
    for (Element a = 0; a < h.order(); ++a) {
        if (p.contains(a)) continue;
        for (Element b = a; b < h.order(); ++b)
            if (!p.contains(b) && h.mul(a, b).subset_of(p)) return false;
    }
    return true;
}

bool is_maximal(const FiniteHyperring& h, const ElementSet& p) {
    require_proper(h, p, "is_maximal");
    // Any hyperideal strictly above P contains some a ∉ P and hence ⟨P ∪ {a}⟩.
    const ElementSet all = h.carrier();
    for (Element a = 0; a < h.order(); ++a) {
        if (p.contains(a)) continue;
        ElementSet g = p;
        g.insert(a);
        if (!(generate_hyperideal(h, g) == all)) return false;
    }
    return true;
}

bool is_coprime(const FiniteHyperring& h, const ElementSet& p, const ElementSet& q) {
    return h.sum(p, q) == h.carrier();
}

std::vector<ElementSet> product_class_C(const FiniteHyperring& h) {
    SetHashSet seen;
    std::vector<ElementSet> work;
    for (Element r = 0; r < h.order(); ++r) {
        seen.insert(ElementSet::singleton(r));
        work.push_back(ElementSet::singleton(r));
    }
    while (!work.empty()) {
        const ElementSet s = work.back();
        work.pop_back();
        for (Element r = 0; r < h.order(); ++r) {
            ElementSet next = h.times(s, r);
            if (seen.insert(next).second) work.push_back(next);
        }
    }
    return sorted(seen);
}

std::vector<ElementSet> sums_class_U(const FiniteHyperring& h, const std::vector<ElementSet>& C) {
    SetHashSet seen(C.begin(), C.end());
    std::vector<ElementSet> work(C.begin(), C.end());
    while (!work.empty()) {
        const ElementSet s = work.back();
        work.pop_back();
        for (const auto& a : C) {
            ElementSet next = h.sum(s, a);
            if (seen.insert(next).second) work.push_back(next);
        }
    }
    return sorted(seen);
}

ProductClass product_classes(const FiniteHyperring& h) {
    ProductClass pc;
    pc.C = product_class_C(h);
    pc.U = sums_class_U(h, pc.C);
    return pc;
}

bool meets_implies_contained(const std::vector<ElementSet>& family, const ElementSet& ideal) {
    return std::all_of(family.begin(), family.end(),
                       [&](const ElementSet& a) { return !a.intersects(ideal) || a.subset_of(ideal); });
}

bool is_C_hyperideal(const FiniteHyperring& h, const ElementSet& ideal) {
    return meets_implies_contained(product_class_C(h), ideal);
}

bool is_strong_C_hyperideal(const FiniteHyperring& h, const ElementSet& ideal) {
    return meets_implies_contained(sums_class_U(h, product_class_C(h)), ideal);
}

namespace {

struct AbsorbingSearch {
    const FiniteHyperring& h;
    const ElementSet& ideal;
    std::size_t n;
    std::vector<Element> tuple;
    std::vector<ElementSet> prefix; // prefix[k] = x1∘…∘x_{k+1}

    ElementSet product_without(std::size_t skip) const {
        ElementSet acc;
        bool started = false;
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            if (i == skip) continue;
            acc = started ? h.times(acc, tuple[i]) : ElementSet::singleton(tuple[i]);
            started = true;
        }
        return acc;
    }

    // Tuples are nondecreasing: the product is commutative.
    bool run(Element start) {
        const std::size_t depth = tuple.size();
        for (Element x = start; x < h.order(); ++x) {
            tuple.push_back(x);
            prefix.push_back(depth == 0 ? ElementSet::singleton(x) : h.times(prefix.back(), x));
            const ElementSet& p = prefix.back();
            bool ok = true;
            if (depth + 1 == n + 1) {
                if (p.subset_of(ideal)) {
                    ok = false;
                    for (std::size_t skip = 0; skip < tuple.size() && !ok; ++skip) {
                        if (skip > 0 && tuple[skip] == tuple[skip - 1]) continue;
                        if (product_without(skip).subset_of(ideal)) ok = true;
                    }
                }
            } else if (!p.subset_of(ideal)) {
                // A prefix of at most n factors inside I already settles every
                // completion: drop any later factor.
                ok = run(x);
            }
            if (!ok) return false;
            tuple.pop_back();
            prefix.pop_back();
        }
        return true;
    }
};

} // namespace

AbsorbingResult n_absorbing(const FiniteHyperring& h, const ElementSet& ideal, std::size_t n) {
    require_proper(h, ideal, "is_n_absorbing");
    if (n == 0) throw Error(ErrorKind::InvalidExponent, "n-absorbing needs n ≥ 1");
    AbsorbingSearch search{h, ideal, n, {}, {}};
    AbsorbingResult r;
    if (!search.run(0)) {
        r.absorbing = false;
        r.witness = search.tuple;
    }
    return r;
}

ElementSet radical_from(const FiniteHyperring& h, const ElementSet& ideal, const std::vector<ElementSet>& hyperideals) {
    ElementSet out = h.carrier();
    for (const auto& p : hyperideals)
        if (is_proper(h, p) && ideal.subset_of(p) && is_prime(h, p)) out &= p;
    return out;
}

ElementSet radical(const FiniteHyperring& h, const ElementSet& ideal, std::size_t max_order) {
    return radical_from(h, ideal, enumerate_hyperideals(h, max_order));
}

ElementSet power_members_D(const FiniteHyperring& h, const ElementSet& ideal) {
    ElementSet out;
    for (Element a = 0; a < h.order(); ++a) {
        const auto& seq = h.power_profile(a).sequence;
        if (std::any_of(seq.begin(), seq.end(), [&](const ElementSet& s) { return s.subset_of(ideal); }))
            out.insert(a);
    }
    return out;
}

ElementSet nilpotents(const FiniteHyperring& h) {
    ElementSet out;
    for (Element a = 0; a < h.order(); ++a) {
        const auto& seq = h.power_profile(a).sequence;
        if (std::any_of(seq.begin(), seq.end(), [](const ElementSet& s) { return s.contains(0); })) out.insert(a);
    }
    return out;
}

ElementSet units(const FiniteHyperring& h, Element identity) {
    ElementSet out;
    for (Element x = 0; x < h.order(); ++x)
        for (Element y = 0; y < h.order(); ++y)
            if (h.mul(x, y).contains(identity)) {
                out.insert(x);
                break;
            }
    return out;
}

std::optional<ElementSet> units(const FiniteHyperring& h) {
    if (auto e = h.identity()) return units(h, *e);
    return std::nullopt;
}

ElementSet weak_zero_divisors(const FiniteHyperring& h) {
    ElementSet out;
    for (Element a = 0; a < h.order(); ++a)
        for (Element b = 1; b < h.order(); ++b)
            if (h.mul(a, b).contains(0)) {
                out.insert(a);
                break;
            }
    return out;
}

bool is_i_set(const FiniteHyperring& h, const ElementSet& xi) {
    if (xi.empty() || xi == ElementSet::singleton(0)) return false;
    for (Element x = 0; x < h.order(); ++x) {
        ElementSet acc;
        bool first = true;
        xi.for_each([&](Element e) {
            acc = first ? h.mul(x, e) : h.sum(acc, h.mul(x, e));
            first = false;
        });
        if (!acc.contains(x)) return false;
    }
    return true;
}

std::vector<ElementSet> find_i_sets(const FiniteHyperring& h, std::size_t max_order) {
    if (h.order() > max_order)
        throw Error(ErrorKind::OrderTooLarge, "find_i_sets: order " + std::to_string(h.order()) + " exceeds bound");
    std::vector<ElementSet> out;
    const std::uint64_t limit = std::uint64_t{1} << h.order();
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
        ElementSet xi;
        for (Element e = 0; e < h.order(); ++e)
            if ((mask >> e) & 1U) xi.insert(e);
        if (is_i_set(h, xi)) out.push_back(xi);
    }
    std::sort(out.begin(), out.end(), size_lex_less);
    return out;
}

std::optional<bool> has_i_set(const FiniteHyperring& h, std::size_t max_order) {
    if (h.has_identity()) return true; // {e} for any identity e
    if (h.order() <= max_order) return !find_i_sets(h, max_order).empty();
    const std::size_t n = h.order();
    for (Element a = 0; a < n; ++a) {
        if (is_i_set(h, ElementSet{a})) return true;
        for (Element b = a + 1; b < n; ++b) {
            if (is_i_set(h, ElementSet{a, b})) return true;
            for (Element c = b + 1; c < n; ++c)
                if (is_i_set(h, ElementSet{a, b, c})) return true;
        }
    }
    return std::nullopt;
}

ElementSet ideal_product(const FiniteHyperring& h, const ElementSet& i, const ElementSet& j) {
    return generate_hyperideal(h, h.hyper_product(i, j));
}

ElementSet ideal_power(const FiniteHyperring& h, const ElementSet& i, std::size_t s) { return h.set_power(i, s); }

ElementSet ideal_sum(const FiniteHyperring& h, const ElementSet& i, const ElementSet& j) { return h.sum(i, j); }

IdealClass classify(const FiniteHyperring& h, const ProductClass& pc, const ElementSet& ideal) {
    IdealClass c;
    c.proper = is_proper(h, ideal);
    if (c.proper) {
        c.prime = is_prime(h, ideal);
        c.maximal = is_maximal(h, ideal);
    }
    c.c_hyperideal = is_C_hyperideal(pc, ideal);
    c.strong_c_hyperideal = is_strong_C_hyperideal(pc, ideal);
    return c;
}

} // namespace hyperlab
