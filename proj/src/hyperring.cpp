#include "hyperlab/hyperring.hpp"

#include "hyperlab/ideals.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace hyperlab {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::MalformedTables: return "MalformedTables";
    case ErrorKind::AxiomFailure: return "AxiomFailure";
    case ErrorKind::EmptyOperand: return "EmptyOperand";
    case ErrorKind::InvalidExponent: return "InvalidExponent";
    case ErrorKind::NotAHyperideal: return "NotAHyperideal";
    case ErrorKind::ProperIdealRequired: return "ProperIdealRequired";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::WellDefinednessFailure: return "WellDefinednessFailure";
    case ErrorKind::ImageNotIdeal: return "ImageNotIdeal";
    case ErrorKind::UnknownCheckId: return "UnknownCheckId";
    case ErrorKind::Config: return "ConfigError";
    case ErrorKind::Parse: return "ParseError";
    }
    return "Error";
}

const AxiomCheck* AxiomReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.passed) return &c;
    return nullptr;
}

void check_well_formed(const RawTables& t) {
    const std::size_t n = t.order;
    if (n < 2) throw Error(ErrorKind::MalformedTables, "order must be at least 2");
    if (n > ElementSet::kCapacity)
        throw Error(ErrorKind::MalformedTables, "order exceeds " + std::to_string(ElementSet::kCapacity));
    if (t.add.size() != n) throw Error(ErrorKind::MalformedTables, "add: expected " + std::to_string(n) + " rows");
    if (t.mul.size() != n) throw Error(ErrorKind::MalformedTables, "mul: expected " + std::to_string(n) + " rows");
    const ElementSet carrier = ElementSet::full(n);
    for (std::size_t a = 0; a < n; ++a) {
        if (t.add[a].size() != n)
            throw Error(ErrorKind::MalformedTables, "add[" + std::to_string(a) + "]: wrong length");
        if (t.mul[a].size() != n)
            throw Error(ErrorKind::MalformedTables, "mul[" + std::to_string(a) + "]: wrong length");
        for (std::size_t b = 0; b < n; ++b) {
            if (t.add[a][b] >= n)
                throw Error(ErrorKind::MalformedTables,
                            "add[" + std::to_string(a) + "][" + std::to_string(b) + "] out of range");
            const ElementSet& m = t.mul[a][b];
            if (m.empty())
                throw Error(ErrorKind::MalformedTables,
                            "mul[" + std::to_string(a) + "][" + std::to_string(b) + "] is empty");
            if (!m.subset_of(carrier))
                throw Error(ErrorKind::MalformedTables,
                            "mul[" + std::to_string(a) + "][" + std::to_string(b) + "] out of range");
        }
    }
}

namespace {

// Table view used while validating, before a FiniteHyperring exists.
struct TableView {
    const RawTables& t;
    std::size_t n;

    Element add(Element a, Element b) const { return t.add[a][b]; }
    const ElementSet& mul(Element a, Element b) const { return t.mul[a][b]; }

    ElementSet times(const ElementSet& s, Element c) const {
        ElementSet out;
        s.for_each([&](Element u) { out |= mul(u, c); });
        return out;
    }
    ElementSet left_times(Element a, const ElementSet& s) const {
        ElementSet out;
        s.for_each([&](Element v) { out |= mul(a, v); });
        return out;
    }
    ElementSet sum(const ElementSet& s, const ElementSet& r) const {
        ElementSet out;
        s.for_each([&](Element x) { r.for_each([&](Element y) { out.insert(add(x, y)); }); });
        return out;
    }
};

void fail(AxiomCheck& c, Element a, Element b = 0, Element d = 0) {
    if (c.passed) {
        c.passed = false;
        c.witness = std::array<Element, 3>{a, b, d};
    }
}

} // namespace

AxiomReport validate_axioms(const RawTables& t) {
    check_well_formed(t);
    const std::size_t n = t.order;
    const TableView v{t, n};
    AxiomReport rep;

    AxiomCheck add_comm{"add_commutative"}, add_assoc{"add_associative"}, add_zero{"add_zero"},
        add_inv{"add_inverse"};
    for (Element a = 0; a < n; ++a) {
        if (v.add(a, 0) != a || v.add(0, a) != a) fail(add_zero, a);
        bool has_inv = false;
        for (Element b = 0; b < n; ++b) {
            if (v.add(a, b) != v.add(b, a)) fail(add_comm, a, b);
            if (v.add(a, b) == 0) has_inv = true;
            for (Element c = 0; c < n && add_assoc.passed; ++c)
                if (v.add(v.add(a, b), c) != v.add(a, v.add(b, c))) fail(add_assoc, a, b, c);
        }
        if (!has_inv) fail(add_inv, a);
    }
    rep.checks = {add_comm, add_assoc, add_zero, add_inv};
    const bool group_ok = std::all_of(rep.checks.begin(), rep.checks.end(), [](auto& c) { return c.passed; });

    AxiomCheck mul_comm{"mul_commutative"}, mul_assoc{"mul_associative"}, distrib{"distributive"},
        sign{"sign_rule"};
    bool strong = true;
    if (group_ok) {
        std::vector<Element> neg(n);
        for (Element a = 0; a < n; ++a)
            for (Element b = 0; b < n; ++b)
                if (v.add(a, b) == 0) neg[a] = b;

        for (Element a = 0; a < n; ++a) {
            for (Element b = 0; b < n; ++b) {
                if (!(v.mul(a, b) == v.mul(b, a))) fail(mul_comm, a, b);

                ElementSet negated;
                v.mul(a, b).for_each([&](Element x) { negated.insert(neg[x]); });
                if (!(v.mul(a, neg[b]) == negated) || !(v.mul(neg[a], b) == negated)) fail(sign, a, b);

                for (Element c = 0; c < n; ++c) {
                    if (mul_assoc.passed) {
                        const ElementSet lhs = v.left_times(a, v.mul(b, c));
                        const ElementSet rhs = v.times(v.mul(a, b), c);
                        if (!(lhs == rhs)) fail(mul_assoc, a, b, c);
                    }
                    const ElementSet& lhs = v.mul(a, v.add(b, c));
                    const ElementSet rhs = v.sum(v.mul(a, b), v.mul(a, c));
                    if (!lhs.subset_of(rhs)) fail(distrib, a, b, c);
                    else if (!(lhs == rhs)) strong = false;
                }
            }
        }
    } else {
        mul_comm.passed = mul_assoc.passed = distrib.passed = sign.passed = false;
    }
    rep.checks.push_back(mul_comm);
    rep.checks.push_back(mul_assoc);
    rep.checks.push_back(distrib);
    rep.checks.push_back(sign);

    rep.is_hyperring = rep.first_failure() == nullptr;
    if (!rep.is_hyperring) return rep;
    rep.strongly_distributive = strong;
    for (Element e = 0; e < n; ++e) {
        bool ident = true, scalar = true;
        for (Element a = 0; a < n && (ident || scalar); ++a) {
            const ElementSet& p = v.mul(a, e);
            if (!p.contains(a)) ident = false;
            if (!(p == ElementSet::singleton(a))) scalar = false;
        }
        if (ident) rep.identities.push_back(e);
        if (scalar && !rep.scalar_identity) rep.scalar_identity = e;
    }
    return rep;
}

const ElementSet& PowerProfile::at(std::size_t k) const {
    if (k == 0) throw Error(ErrorKind::InvalidExponent, "exponent must be at least 1");
    if (k <= sequence.size()) return sequence[k - 1];
    const std::size_t idx = tail + (k - tail) % period;
    return sequence[idx - 1];
}

PowerProfile compute_power_profile(const FiniteHyperring& h, Element a) {
    PowerProfile p;
    p.base = a;
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
    ElementSet cur = ElementSet::singleton(a);
    for (std::size_t k = 1;; ++k) {
        auto [it, inserted] = seen.emplace(cur, k);
        if (!inserted) {
            p.tail = it->second;
            p.period = k - it->second;
            return p;
        }
        p.sequence.push_back(cur);
        cur = h.times(cur, a);
    }
}

FiniteHyperring FiniteHyperring::build(RawTables t) {
    const AxiomReport rep = validate_axioms(t);
    if (const AxiomCheck* f = rep.first_failure()) {
        std::string w;
        if (f->witness) {
            w = " at (" + std::to_string((*f->witness)[0]) + "," + std::to_string((*f->witness)[1]) + "," +
                std::to_string((*f->witness)[2]) + ")";
        }
        throw Error(ErrorKind::AxiomFailure, f->axiom + w);
    }
    FiniteHyperring h;
    h.name_ = std::move(t.name);
    h.meta_ = std::move(t.meta);
    h.order_ = t.order;
    const std::size_t n = t.order;
    h.add_.resize(n * n);
    h.mul_.resize(n * n);
    h.neg_.resize(n);
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            h.add_[a * n + b] = t.add[a][b];
            h.mul_[a * n + b] = t.mul[a][b];
            if (t.add[a][b] == 0) h.neg_[a] = b;
        }
    h.strongly_distributive_ = rep.strongly_distributive;
    h.identities_ = rep.identities;
    h.scalar_identity_ = rep.scalar_identity;
    h.profiles_.reserve(n);
    for (Element a = 0; a < n; ++a) {
        h.profiles_.push_back(compute_power_profile(h, a));
        const auto& p = h.profiles_.back();
        h.power_bound_ = std::max(h.power_bound_, p.tail + p.period);
        h.max_tail_ = std::max(h.max_tail_, p.tail);
    }
    return h;
}

std::optional<Element> FiniteHyperring::identity() const {
    if (identities_.empty()) return std::nullopt;
    return identities_.front();
}

ElementSet FiniteHyperring::hyper_product(const ElementSet& s, const ElementSet& t) const {
    if (s.empty() || t.empty()) throw Error(ErrorKind::EmptyOperand, "hyper_product of an empty set");
    ElementSet out;
    s.for_each([&](Element a) { t.for_each([&](Element b) { out |= mul(a, b); }); });
    return out;
}

ElementSet FiniteHyperring::times(const ElementSet& s, Element a) const {
    ElementSet out;
    s.for_each([&](Element u) { out |= mul(u, a); });
    return out;
}

ElementSet FiniteHyperring::translate(const ElementSet& s, Element a) const {
    ElementSet out;
    s.for_each([&](Element x) { out.insert(add(x, a)); });
    return out;
}

ElementSet FiniteHyperring::sum(const ElementSet& s, const ElementSet& t) const {
    ElementSet out;
    t.for_each([&](Element b) { out |= translate(s, b); });
    return out;
}

ElementSet FiniteHyperring::negate(const ElementSet& s) const {
    ElementSet out;
    s.for_each([&](Element x) { out.insert(neg(x)); });
    return out;
}

const ElementSet& FiniteHyperring::power(Element a, std::size_t k) const {
    if (k == 0) throw Error(ErrorKind::InvalidExponent, "a^0 is undefined");
    return profiles_[a].at(k);
}

ElementSet FiniteHyperring::set_power(const ElementSet& s, std::size_t k) const {
    if (k == 0) throw Error(ErrorKind::InvalidExponent, "S^0 is undefined");
    ElementSet out = s;
    for (std::size_t i = 1; i < k; ++i) out = hyper_product(out, s);
    return out;
}

RawTables FiniteHyperring::tables() const {
    RawTables t;
    t.name = name_;
    t.order = order_;
    t.meta = meta_;
    t.add.assign(order_, std::vector<Element>(order_));
    t.mul.assign(order_, std::vector<ElementSet>(order_));
    for (Element a = 0; a < order_; ++a)
        for (Element b = 0; b < order_; ++b) {
            t.add[a][b] = add(a, b);
            t.mul[a][b] = mul(a, b);
        }
    return t;
}

FiniteHyperring make_zx_mod(std::int64_t m, std::span<const std::int64_t> X) {
    if (m < 2) throw Error(ErrorKind::MalformedTables, "zx_mod: modulus must be at least 2");
    if (X.empty()) throw Error(ErrorKind::MalformedTables, "zx_mod: X must be nonempty");
    if (static_cast<std::size_t>(m) > ElementSet::kCapacity)
        throw Error(ErrorKind::OrderTooLarge, "zx_mod: modulus too large for a finite table");
    auto mod = [m](std::int64_t v) { return ((v % m) + m) % m; };
    RawTables t;
    t.order = static_cast<std::size_t>(m);
    t.meta.family = "zx_mod";
    t.meta.m = m;
    t.meta.X.assign(X.begin(), X.end());
    t.name = "zx_mod(" + std::to_string(m) + ",{";
    for (std::size_t i = 0; i < X.size(); ++i) t.name += (i ? "," : "") + std::to_string(X[i]);
    t.name += "})";
    t.add.assign(t.order, std::vector<Element>(t.order));
    t.mul.assign(t.order, std::vector<ElementSet>(t.order));
    for (std::int64_t a = 0; a < m; ++a)
        for (std::int64_t b = 0; b < m; ++b) {
            t.add[a][b] = static_cast<Element>(mod(a + b));
            for (std::int64_t x : X) t.mul[a][b].insert(static_cast<Element>(mod(mod(a * b) * mod(x))));
        }
    return FiniteHyperring::build(std::move(t));
}

FiniteHyperring product_ring(const FiniteHyperring& h1, const FiniteHyperring& h2) {
    const std::size_t n1 = h1.order(), n2 = h2.order();
    if (n1 * n2 > ElementSet::kCapacity) throw Error(ErrorKind::OrderTooLarge, "product_ring: carrier too large");
    RawTables t;
    t.order = n1 * n2;
    t.name = h1.name() + "x" + h2.name();
    t.meta.family = "product";
    t.add.assign(t.order, std::vector<Element>(t.order));
    t.mul.assign(t.order, std::vector<ElementSet>(t.order));
    for (Element x1 = 0; x1 < n1; ++x1)
        for (Element x2 = 0; x2 < n2; ++x2)
            for (Element y1 = 0; y1 < n1; ++y1)
                for (Element y2 = 0; y2 < n2; ++y2) {
                    const Element i = pair_index(h2, x1, x2), j = pair_index(h2, y1, y2);
                    t.add[i][j] = pair_index(h2, h1.add(x1, y1), h2.add(x2, y2));
                    ElementSet& m = t.mul[i][j];
                    h1.mul(x1, y1).for_each([&](Element u) {
                        h2.mul(x2, y2).for_each([&](Element w) { m.insert(pair_index(h2, u, w)); });
                    });
                }
    return FiniteHyperring::build(std::move(t));
}

bool check_good_hom(const FiniteHyperring& src, const FiniteHyperring& dst, const HomMap& map) {
    if (map.images.size() != src.order()) return false;
    for (Element x : map.images)
        if (x >= dst.order()) return false;
    for (Element x = 0; x < src.order(); ++x)
        for (Element y = 0; y < src.order(); ++y) {
            if (map(src.add(x, y)) != dst.add(map(x), map(y))) return false;
            if (!(hom_image(map, src.mul(x, y)) == dst.mul(map(x), map(y)))) return false;
        }
    return true;
}

ElementSet hom_image(const HomMap& map, const ElementSet& s) {
    ElementSet out;
    s.for_each([&](Element x) { out.insert(map(x)); });
    return out;
}

ElementSet hom_preimage(const HomMap& map, std::size_t source_order, const ElementSet& s) {
    ElementSet out;
    for (Element x = 0; x < source_order; ++x)
        if (s.contains(map(x))) out.insert(x);
    return out;
}

bool is_injective(const HomMap& map, std::size_t target_order) {
    std::vector<bool> hit(target_order, false);
    for (Element x : map.images) {
        if (hit[x]) return false;
        hit[x] = true;
    }
    return true;
}

bool is_surjective(const HomMap& map, std::size_t target_order) {
    return hom_image(map, ElementSet::full(map.images.size())) == ElementSet::full(target_order);
}

ElementSet kernel(const HomMap& map, std::size_t source_order) {
    return hom_preimage(map, source_order, ElementSet::singleton(0));
}

Quotient quotient_by_ideal(const FiniteHyperring& h, const ElementSet& p) {
    if (p.empty() || !is_hyperideal(h, p)) throw Error(ErrorKind::NotAHyperideal, "quotient by " + p.to_string());
    if (p == h.carrier()) throw Error(ErrorKind::ProperIdealRequired, "quotient by the whole ring");
    const std::size_t n = h.order();

    // Cosets indexed by ascending least representative; the zero coset is first.
    std::vector<Element> cls(n, static_cast<Element>(n));
    std::vector<Element> reps;
    std::vector<ElementSet> cosets;
    for (Element a = 0; a < n; ++a) {
        if (cls[a] != n) continue;
        const auto idx = static_cast<Element>(reps.size());
        reps.push_back(a);
        const ElementSet coset = h.translate(p, a);
        coset.for_each([&](Element x) { cls[x] = idx; });
        cosets.push_back(coset);
    }
    const std::size_t k = reps.size();
    RawTables t;
    t.order = k;
    t.name = h.name() + "/" + p.to_string();
    t.meta.family = "quotient";
    t.add.assign(k, std::vector<Element>(k));
    t.mul.assign(k, std::vector<ElementSet>(k));
    for (Element i = 0; i < k; ++i)
        for (Element j = 0; j < k; ++j) {
            t.add[i][j] = cls[h.add(reps[i], reps[j])];
            h.mul(reps[i], reps[j]).for_each([&](Element c) { t.mul[i][j].insert(cls[c]); });
        }
    return Quotient{FiniteHyperring::build(std::move(t)), HomMap{std::move(cls)}, std::move(cosets)};
}

} // namespace hyperlab
