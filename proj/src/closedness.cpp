#include "hyperlab/closedness.hpp"

#include "hyperlab/ideals.hpp"

#include <algorithm>
#include <set>

namespace hyperlab {

namespace {

void require_proper(const FiniteHyperring& h, const ElementSet& q) {
    if (!is_proper(h, q)) throw Error(ErrorKind::ProperIdealRequired, "closedness needs a proper hyperideal");
}

void require_exponents(std::size_t s, std::size_t n) {
    if (s == 0 || n == 0) throw Error(ErrorKind::InvalidExponent, "s and n must be positive");
}

} // namespace

ClosedVerdict sn_closed(const FiniteHyperring& h, const ElementSet& q, std::size_t s, std::size_t n) {
    require_proper(h, q);
    require_exponents(s, n);
    for (Element a = 0; a < h.order(); ++a)
        if (h.power(a, s).subset_of(q) && !h.power(a, n).subset_of(q)) return {false, a};
    return {};
}

ClosedVerdict weakly_sn_closed(const FiniteHyperring& h, const ElementSet& q, std::size_t s, std::size_t n) {
    require_proper(h, q);
    require_exponents(s, n);
    for (Element a = 0; a < h.order(); ++a) {
        const ElementSet& as = h.power(a, s);
        if (!as.contains(0) && as.subset_of(q) && !h.power(a, n).subset_of(q)) return {false, a};
    }
    return {};
}

std::optional<Element> find_tough_zero(const FiniteHyperring& h, const ElementSet& q, std::size_t s, std::size_t n) {
    require_proper(h, q);
    require_exponents(s, n);
    for (Element x = 0; x < h.order(); ++x)
        if (h.power(x, s).contains(0) && !h.power(x, n).subset_of(q)) return x;
    return std::nullopt;
}

ClosedProfile::ClosedProfile(const FiniteHyperring& h, const ElementSet& q) : ideal_(q) {
    require_proper(h, q);
    bound_ = std::max<std::size_t>(h.power_bound(), 1);
    inside_.resize(bound_);
    for (std::size_t k = 1; k <= bound_; ++k)
        for (Element a = 0; a < h.order(); ++a)
            if (h.power(a, k).subset_of(q)) inside_[k - 1].insert(a);
}

const ElementSet& ClosedProfile::members_with_power_inside(std::size_t k) const {
    require_exponents(k, 1);
    return inside_[clamp(k) - 1];
}

bool ClosedProfile::closed(std::size_t s, std::size_t n) const {
    require_exponents(s, n);
    return inside_[clamp(s) - 1].subset_of(inside_[clamp(n) - 1]);
}

std::size_t ClosedProfile::omega(std::size_t s) const {
    require_exponents(s, 1);
    const std::size_t top = std::min(s, bound_);
    for (std::size_t n = 1; n <= top; ++n)
        if (closed(s, n)) return n;
    // Unreachable for s ≤ bound (the diagonal is closed); beyond the bound
    // rows repeat row `bound_`.
    return top;
}

std::optional<std::size_t> ClosedProfile::Omega(std::size_t n) const {
    require_exponents(n, 1);
    for (std::size_t s = n + 1; s <= std::max(n, bound_); ++s)
        if (!closed(s, n)) return s - 1;
    return std::nullopt;
}

bool ClosedProfile::all_closed() const {
    for (std::size_t s = 1; s <= bound_; ++s)
        if (!closed(s, 1)) return false;
    return true;
}

std::vector<std::size_t> ClosedProfile::omega_table(std::size_t s_max) const {
    std::vector<std::size_t> out;
    for (std::size_t s = 1; s <= s_max; ++s) out.push_back(omega(s));
    return out;
}

std::vector<std::optional<std::size_t>> ClosedProfile::Omega_table(std::size_t n_max) const {
    std::vector<std::optional<std::size_t>> out;
    for (std::size_t n = 1; n <= n_max; ++n) out.push_back(Omega(n));
    return out;
}

std::map<std::pair<std::size_t, std::size_t>, Element> ClosedProfile::witnesses(std::size_t s_max,
                                                                                 std::size_t n_max) const {
    std::map<std::pair<std::size_t, std::size_t>, Element> out;
    for (std::size_t s = 1; s <= s_max; ++s)
        for (std::size_t n = 1; n <= n_max; ++n) {
            const ElementSet bad = inside_[clamp(s) - 1] - inside_[clamp(n) - 1];
            if (!bad.empty()) out[{s, n}] = bad.min();
        }
    return out;
}

std::optional<Element> regular_multiplier(const FiniteHyperring& h, Element a, std::size_t s, std::size_t n) {
    require_exponents(s, n);
    const ElementSet& an = h.power(a, n);
    const ElementSet& as = h.power(a, s);
    for (Element b = 0; b < h.order(); ++b)
        if (an.subset_of(h.times(as, b))) return b;
    return std::nullopt;
}

bool is_sn_Regular(const FiniteHyperring& h, Element a, std::size_t s, std::size_t n) {
    require_exponents(s, n);
    return h.power(a, n).subset_of(h.hyper_product(h.power(a, s), h.carrier()));
}

bool is_sn_Regular_by_subsets(const FiniteHyperring& h, Element a, std::size_t s, std::size_t n) {
    require_exponents(s, n);
    if (h.order() > 16) throw Error(ErrorKind::OrderTooLarge, "subset search limited to order 16");
    const ElementSet& an = h.power(a, n);
    const ElementSet& as = h.power(a, s);
    const std::uint64_t limit = std::uint64_t{1} << h.order();
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
        ElementSet b;
        for (Element e = 0; e < h.order(); ++e)
            if ((mask >> e) & 1U) b.insert(e);
        if (an.subset_of(h.hyper_product(as, b))) return true;
    }
    return false;
}

namespace {

std::int64_t mod(std::int64_t v, std::int64_t d) { return ((v % d) + d) % d; }

// Residues mod d of every k-fold product of members of X (k = 0 gives {1}).
std::set<std::int64_t> x_products(const ZxResidueModel& m, std::size_t k) {
    std::set<std::int64_t> cur{mod(1, m.d)};
    for (std::size_t i = 0; i < k; ++i) {
        std::set<std::int64_t> next;
        for (std::int64_t p : cur)
            for (std::int64_t x : m.X) next.insert(mod(p * mod(x, m.d), m.d));
        cur = std::move(next);
    }
    return cur;
}

std::int64_t pow_mod(std::int64_t r, std::size_t e, std::int64_t d) {
    std::int64_t out = mod(1, d);
    for (std::size_t i = 0; i < e; ++i) out = mod(out * r, d);
    return out;
}

// r^k · p ≡ 0 (mod d) for every p in the (k−1)-fold product set.
bool power_inside(const ZxResidueModel& m, std::int64_t r, std::size_t k, const std::set<std::int64_t>& prods) {
    const std::int64_t rk = pow_mod(r, k, m.d);
    return std::all_of(prods.begin(), prods.end(), [&](std::int64_t p) { return mod(rk * p, m.d) == 0; });
}

void check_model(const ZxResidueModel& m, std::size_t s, std::size_t n) {
    if (m.d < 2) throw Error(ErrorKind::Config, "residue model needs d ≥ 2");
    if (m.X.empty()) throw Error(ErrorKind::Config, "residue model needs a nonempty X");
    require_exponents(s, n);
}

} // namespace

ResidueVerdict zx_residue_closed(const ZxResidueModel& m, std::size_t s, std::size_t n) {
    check_model(m, s, n);
    const auto ps = x_products(m, s - 1);
    const auto pn = x_products(m, n - 1);
    for (std::int64_t r = 0; r < m.d; ++r)
        if (power_inside(m, r, s, ps) && !power_inside(m, r, n, pn)) return {false, r};
    return {};
}

ResidueVerdict zx_residue_weakly_closed(const ZxResidueModel& m, std::size_t s, std::size_t n) {
    check_model(m, s, n);
    // With 0 ∈ X every a^s (s ≥ 2) contains 0, so the premise never fires.
    if (s >= 2 && std::find(m.X.begin(), m.X.end(), 0) != m.X.end()) return {};
    // Otherwise only a = 0 has 0 ∈ a^s, and a = 0 satisfies the conclusion;
    // every nonzero residue class contains a nonzero integer.
    return zx_residue_closed(m, s, n);
}

} // namespace hyperlab
