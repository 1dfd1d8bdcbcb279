#pragma once

/**
 * @file hyperring.hpp
 * @brief Finite commutative multiplicative hyperrings.
 *
 * A multiplicative hyperring has an ordinary commutative group (G,+) and a
 * set-valued, associative, commutative multiplication that distributes over
 * + in the inclusion sense a∘(b+c) ⊆ a∘b + a∘c and obeys the sign rule
 * a∘(−b) = −(a∘b). The carrier is always {0..n−1} with 0 the additive zero.
 *
 * Instances are built from raw tables through FiniteHyperring::build, which
 * validates every axiom and rejects failures. A built instance is immutable.
 */

#include "hyperlab/element_set.hpp"
#include "hyperlab/error.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hyperlab {

struct RingMeta {
    std::string family = "table"; // "table" | "zx_mod" | "product" | "quotient"
    std::optional<std::int64_t> m;
    std::vector<std::int64_t> X;
};

/// Unvalidated input for FiniteHyperring::build.
struct RawTables {
    std::string name;
    std::size_t order = 0;
    std::vector<std::vector<Element>> add;
    std::vector<std::vector<ElementSet>> mul;
    RingMeta meta;
};

struct AxiomCheck {
    std::string axiom;
    bool passed = true;
    /// Lexicographically first failing triple (pairs use the first two slots).
    std::optional<std::array<Element, 3>> witness;
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    bool is_hyperring = false;
    bool strongly_distributive = false;
    std::vector<Element> identities;        ///< e with a ∈ a∘e for all a
    std::optional<Element> scalar_identity; ///< e with a∘e = {a} for all a

    const AxiomCheck* first_failure() const;
};

/// Checks dimensions and ranges; throws Error(MalformedTables).
void check_well_formed(const RawTables& tables);

/// Full axiom validation. Throws only on malformed input.
AxiomReport validate_axioms(const RawTables& tables);

/// a^1 … a^k under S ↦ S∘{a}; the sequence is eventually periodic.
struct PowerProfile {
    Element base = 0;
    std::vector<ElementSet> sequence; ///< sequence[k-1] = a^k, up to tail+period-1
    std::size_t tail = 1;             ///< exponent where the cycle starts
    std::size_t period = 1;

    /// a^k for any k ≥ 1 by periodic extension.
    const ElementSet& at(std::size_t k) const;
};

class FiniteHyperring {
public:
    /// Validates and builds. Throws MalformedTables or AxiomFailure.
    static FiniteHyperring build(RawTables tables);

    const std::string& name() const { return name_; }
    const RingMeta& meta() const { return meta_; }
    std::size_t order() const { return order_; }
    ElementSet carrier() const { return ElementSet::full(order_); }

    Element add(Element a, Element b) const { return add_[a * order_ + b]; }
    Element neg(Element a) const { return neg_[a]; }
    Element sub(Element a, Element b) const { return add(a, neg(b)); }
    const ElementSet& mul(Element a, Element b) const { return mul_[a * order_ + b]; }

    bool strongly_distributive() const { return strongly_distributive_; }
    bool has_identity() const { return !identities_.empty(); }
    /// Least identity element, when any exists.
    std::optional<Element> identity() const;
    const std::vector<Element>& identities() const { return identities_; }
    bool has_scalar_identity() const { return scalar_identity_.has_value(); }
    std::optional<Element> scalar_identity() const { return scalar_identity_; }

    /// ∪_{s∈S,t∈T} s∘t. Throws EmptyOperand.
    ElementSet hyper_product(const ElementSet& s, const ElementSet& t) const;
    /// S∘{a}; S may be empty.
    ElementSet times(const ElementSet& s, Element a) const;
    /// Minkowski sum S+T.
    ElementSet sum(const ElementSet& s, const ElementSet& t) const;
    ElementSet negate(const ElementSet& s) const;
    ElementSet translate(const ElementSet& s, Element a) const;

    /// a^k, k ≥ 1. Throws InvalidExponent for k = 0.
    const ElementSet& power(Element a, std::size_t k) const;
    /// S^k as repeated set product (k ≥ 1).
    ElementSet set_power(const ElementSet& s, std::size_t k) const;
    const PowerProfile& power_profile(Element a) const { return profiles_[a]; }
    /// max over elements of tail+period.
    std::size_t power_bound() const { return power_bound_; }
    /// max over elements of tail.
    std::size_t max_tail() const { return max_tail_; }

    /// Rebuilds raw tables (for serialization and derived constructions).
    RawTables tables() const;

    bool operator==(const FiniteHyperring& o) const {
        return order_ == o.order_ && add_ == o.add_ && mul_ == o.mul_;
    }

private:
    FiniteHyperring() = default;

    std::string name_;
    RingMeta meta_;
    std::size_t order_ = 0;
    std::vector<Element> add_;
    std::vector<Element> neg_;
    std::vector<ElementSet> mul_;
    bool strongly_distributive_ = false;
    std::vector<Element> identities_;
    std::optional<Element> scalar_identity_;
    std::vector<PowerProfile> profiles_;
    std::size_t power_bound_ = 0;
    std::size_t max_tail_ = 0;
};

/// Power profile from scratch, independent of any cache.
PowerProfile compute_power_profile(const FiniteHyperring& h, Element a);

/// a∘b = {a·x·b mod m : x ∈ X} on ℤ_m. m ≥ 2, X nonempty.
FiniteHyperring make_zx_mod(std::int64_t m, std::span<const std::int64_t> X);

/// Carrier pairs (x1,x2) indexed x1·|H2| + x2, componentwise operations.
FiniteHyperring product_ring(const FiniteHyperring& h1, const FiniteHyperring& h2);

inline Element pair_index(const FiniteHyperring& h2, Element x1, Element x2) {
    return static_cast<Element>(x1 * h2.order() + x2);
}

/// A map between carriers, checked with check_good_hom.
struct HomMap {
    std::vector<Element> images;

    Element operator()(Element x) const { return images[x]; }
};

/// ψ(x+y) = ψ(x)+ψ(y) and ψ(x∘y) = ψ(x)∘ψ(y) as sets, for all x,y.
bool check_good_hom(const FiniteHyperring& source, const FiniteHyperring& target, const HomMap& map);
ElementSet hom_image(const HomMap& map, const ElementSet& s);
ElementSet hom_preimage(const HomMap& map, std::size_t source_order, const ElementSet& s);
bool is_injective(const HomMap& map, std::size_t target_order);
bool is_surjective(const HomMap& map, std::size_t target_order);
/// ψ^{-1}(0)
ElementSet kernel(const HomMap& map, std::size_t source_order);

struct Quotient {
    FiniteHyperring ring;
    HomMap projection;
    std::vector<ElementSet> cosets; ///< coset i is the preimage of quotient element i
};

/// G/P with (a+P)∘(b+P) = {c+P : c ∈ a∘b}. Throws NotAHyperideal or
/// ProperIdealRequired.
Quotient quotient_by_ideal(const FiniteHyperring& h, const ElementSet& p);

} // namespace hyperlab
