#include "hyperlab/fundamental.hpp"

#include "hyperlab/closedness.hpp"

#include <numeric>

namespace hyperlab {

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Element{0}); }

    Element find(Element x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // The smaller root wins, so every root is its class's least member.
    void unite(Element a, Element b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent_[b] = a;
    }

private:
    std::vector<Element> parent_;
};

std::string entry(const char* what, std::size_t i, std::size_t j) {
    return std::string(what) + "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}

} // namespace

std::vector<ElementSet> gamma_star_classes(const FiniteHyperring& h, const std::vector<ElementSet>& U) {
    UnionFind uf(h.order());
    for (const auto& a : U) {
        const Element first = a.min();
        a.for_each([&](Element x) { uf.unite(first, x); });
    }
    std::vector<ElementSet> classes;
    std::vector<std::size_t> slot(h.order(), h.order());
    for (Element x = 0; x < h.order(); ++x) {
        const Element root = uf.find(x);
        if (slot[root] == h.order()) {
            slot[root] = classes.size();
            classes.emplace_back();
        }
        classes[slot[root]].insert(x);
    }
    return classes;
}

std::vector<ElementSet> gamma_star_classes(const FiniteHyperring& h) {
    return gamma_star_classes(h, sums_class_U(h, product_class_C(h)));
}

Element FundamentalRing::power(Element c, std::size_t k) const {
    if (k == 0) throw Error(ErrorKind::InvalidExponent, "c^0 is undefined");
    Element out = c;
    for (std::size_t i = 1; i < k; ++i) out = mul[out][c];
    return out;
}

FundamentalRing fundamental_ring(const FiniteHyperring& h, const std::vector<ElementSet>& U) {
    FundamentalRing r;
    r.classes = gamma_star_classes(h, U);
    r.class_of.assign(h.order(), 0);
    for (Element i = 0; i < r.classes.size(); ++i) r.classes[i].for_each([&](Element x) { r.class_of[x] = i; });
    const std::size_t k = r.classes.size();
    r.add.assign(k, std::vector<Element>(k));
    r.mul.assign(k, std::vector<Element>(k));
    r.witness.assign(k, std::vector<std::pair<Element, Element>>(k));

    auto single_class = [&](const ElementSet& s, const char* what, std::size_t i, std::size_t j) {
        const Element c = r.class_of[s.min()];
        if (!s.subset_of(r.classes[c]))
            throw Error(ErrorKind::WellDefinednessFailure, entry(what, i, j) + " spans several classes");
        return c;
    };
    for (Element i = 0; i < k; ++i)
        for (Element j = 0; j < k; ++j) {
            r.add[i][j] = single_class(h.sum(r.classes[i], r.classes[j]), "add", i, j);
            r.mul[i][j] = single_class(h.hyper_product(r.classes[i], r.classes[j]), "mul", i, j);
            r.witness[i][j] = {r.classes[i].min(), r.classes[j].min()};
        }
    if (auto failure = ring_axiom_failure(r)) throw Error(ErrorKind::WellDefinednessFailure, *failure);
    return r;
}

FundamentalRing fundamental_ring(const FiniteHyperring& h) {
    return fundamental_ring(h, sums_class_U(h, product_class_C(h)));
}

std::optional<std::string> ring_axiom_failure(const FundamentalRing& r) {
    const std::size_t k = r.order();
    if (k == 0) return "empty ring";
    const Element zero = r.class_of.empty() ? 0 : r.class_of[0];
    for (Element a = 0; a < k; ++a) {
        if (r.add[a][zero] != a) return "zero class is not additive identity at " + std::to_string(a);
        bool inverse = false;
        for (Element b = 0; b < k; ++b) {
            if (r.add[a][b] == zero) inverse = true;
            if (r.add[a][b] != r.add[b][a]) return entry("add commutativity", a, b);
            if (r.mul[a][b] != r.mul[b][a]) return entry("mul commutativity", a, b);
            for (Element c = 0; c < k; ++c) {
                if (r.add[r.add[a][b]][c] != r.add[a][r.add[b][c]]) return entry("add associativity", a, b);
                if (r.mul[r.mul[a][b]][c] != r.mul[a][r.mul[b][c]]) return entry("mul associativity", a, b);
                if (r.mul[a][r.add[b][c]] != r.add[r.mul[a][b]][r.mul[a][c]]) return entry("distributivity", a, b);
            }
        }
        if (!inverse) return "no additive inverse for class " + std::to_string(a);
    }
    return std::nullopt;
}

bool is_ring_ideal(const FundamentalRing& r, const ElementSet& ideal) {
    if (ideal.empty()) return false;
    bool ok = true;
    ideal.for_each([&](Element a) {
        for (Element x = 0; x < r.order() && ok; ++x) {
            if (!ideal.contains(r.mul[x][a])) ok = false;
            // Finite: closure under + gives a subgroup.
            if (ideal.contains(x) && !ideal.contains(r.add[a][x])) ok = false;
        }
    });
    return ok;
}

bool ring_sn_closed(const FundamentalRing& r, const ElementSet& ideal, std::size_t s, std::size_t n) {
    if (ideal == ElementSet::full(r.order())) return false; // closedness is defined for proper ideals only
    for (Element c = 0; c < r.order(); ++c)
        if (ideal.contains(r.power(c, s)) && !ideal.contains(r.power(c, n))) return false;
    return true;
}

FundamentalIdeal ideal_in_fundamental(const FiniteHyperring& h, const FundamentalRing& r, const ElementSet& q,
                                      std::size_t max_sn) {
    if (!is_proper(h, q)) throw Error(ErrorKind::ProperIdealRequired, "ideal_in_fundamental");
    FundamentalIdeal out;
    q.for_each([&](Element x) { out.image.insert(r.class_of[x]); });
    out.is_ideal = is_ring_ideal(r, out.image);
    out.proper = !(out.image == ElementSet::full(r.order()));
    const ClosedProfile profile(h, q);
    for (std::size_t s = 1; s <= max_sn; ++s)
        for (std::size_t n = 1; n <= max_sn; ++n) {
            const bool in_h = profile.closed(s, n);
            const bool in_r = out.is_ideal && ring_sn_closed(r, out.image, s, n);
            if (in_h != in_r) out.mismatches.push_back({s, n, in_h, in_r});
        }
    return out;
}

} // namespace hyperlab
