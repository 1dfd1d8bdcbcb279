#pragma once

/**
 * @file ideals.hpp
 * @brief Hyperideals, their classification, and the special element sets.
 *
 * A hyperideal is a nonempty subset closed under subtraction that absorbs
 * r∘a for every ring element r. The product class C holds every finite
 * product r1∘…∘rk (k ≥ 1, so singletons are members) and U holds every
 * finite Minkowski sum of members of C. Both are computed as fixpoints.
 */

#include "hyperlab/hyperring.hpp"

#include <optional>
#include <vector>

namespace hyperlab {

inline constexpr std::size_t kDefaultEnumerationBound = 16;

bool is_hyperideal(const FiniteHyperring& h, const ElementSet& s);

inline bool is_proper(const FiniteHyperring& h, const ElementSet& s) { return !(s == h.carrier()); }

/// Least hyperideal containing gens.
ElementSet generate_hyperideal(const FiniteHyperring& h, const ElementSet& gens);

/// Subgroup generated by s under addition.
ElementSet additive_closure(const FiniteHyperring& h, const ElementSet& s);

/// All subgroups of (G,+), ascending by size then lexicographic.
std::vector<ElementSet> additive_subgroups(const FiniteHyperring& h);

/// All hyperideals including {0}-generated and G, ascending by size then
/// lexicographic. Throws OrderTooLarge above max_order.
std::vector<ElementSet> enumerate_hyperideals(const FiniteHyperring& h,
                                              std::size_t max_order = kDefaultEnumerationBound);

/// a∘b ⊆ P ⇒ a ∈ P or b ∈ P. Throws ProperIdealRequired.
bool is_prime(const FiniteHyperring& h, const ElementSet& p);
/// No hyperideal strictly between P and G. Throws ProperIdealRequired.
bool is_maximal(const FiniteHyperring& h, const ElementSet& p);
/// P + Q = G.
bool is_coprime(const FiniteHyperring& h, const ElementSet& p, const ElementSet& q);

struct ProductClass {
    std::vector<ElementSet> C; ///< finite products, size-lex sorted
    std::vector<ElementSet> U; ///< finite sums of members of C, size-lex sorted
};

std::vector<ElementSet> product_class_C(const FiniteHyperring& h);
std::vector<ElementSet> sums_class_U(const FiniteHyperring& h, const std::vector<ElementSet>& C);
ProductClass product_classes(const FiniteHyperring& h);

/// A ∈ family, A ∩ I ≠ ∅ ⇒ A ⊆ I.
bool meets_implies_contained(const std::vector<ElementSet>& family, const ElementSet& ideal);
inline bool is_C_hyperideal(const ProductClass& pc, const ElementSet& ideal) {
    return meets_implies_contained(pc.C, ideal);
}
inline bool is_strong_C_hyperideal(const ProductClass& pc, const ElementSet& ideal) {
    return meets_implies_contained(pc.U, ideal);
}
bool is_C_hyperideal(const FiniteHyperring& h, const ElementSet& ideal);
bool is_strong_C_hyperideal(const FiniteHyperring& h, const ElementSet& ideal);

/// Witness of a failed n-absorbing test: x1..x_{n+1} with the full product in
/// I and every n-factor subproduct outside it.
struct AbsorbingResult {
    bool absorbing = true;
    std::vector<Element> witness;
};

/// Throws ProperIdealRequired.
AbsorbingResult n_absorbing(const FiniteHyperring& h, const ElementSet& ideal, std::size_t n);
inline bool is_n_absorbing(const FiniteHyperring& h, const ElementSet& ideal, std::size_t n) {
    return n_absorbing(h, ideal, n).absorbing;
}

/// Intersection of the primes containing I, or G when there are none.
ElementSet radical(const FiniteHyperring& h, const ElementSet& ideal,
                   std::size_t max_order = kDefaultEnumerationBound);
/// Same, over a precomputed hyperideal list.
ElementSet radical_from(const FiniteHyperring& h, const ElementSet& ideal, const std::vector<ElementSet>& hyperideals);
/// {r : r^k ⊆ I for some k}
ElementSet power_members_D(const FiniteHyperring& h, const ElementSet& ideal);

/// {a : 0 ∈ a^k for some k}
ElementSet nilpotents(const FiniteHyperring& h);
/// {x : ∃y, e ∈ x∘y} for the given identity.
ElementSet units(const FiniteHyperring& h, Element identity);
/// Units for the least identity; nullopt when the ring has no identity.
std::optional<ElementSet> units(const FiniteHyperring& h);
/// {a : ∃b ≠ 0 with 0 ∈ a∘b}
ElementSet weak_zero_divisors(const FiniteHyperring& h);

bool is_i_set(const FiniteHyperring& h, const ElementSet& xi);
/// Every i-set, size-lex sorted. Throws OrderTooLarge above max_order.
std::vector<ElementSet> find_i_sets(const FiniteHyperring& h, std::size_t max_order = kDefaultEnumerationBound);
/// Decides whether an i-set exists. Exact up to max_order; above it only
/// subsets of size ≤ 3 are searched and nullopt means undecided.
std::optional<bool> has_i_set(const FiniteHyperring& h, std::size_t max_order = kDefaultEnumerationBound);

/// Hyperideal generated by ∪_{a∈I,b∈J} a∘b.
ElementSet ideal_product(const FiniteHyperring& h, const ElementSet& i, const ElementSet& j);
/// Raw union of all s-fold element products from I (not closed).
ElementSet ideal_power(const FiniteHyperring& h, const ElementSet& i, std::size_t s);
/// Minkowski sum I + J.
ElementSet ideal_sum(const FiniteHyperring& h, const ElementSet& i, const ElementSet& j);

struct IdealClass {
    bool proper = false;
    bool prime = false;
    bool maximal = false;
    bool c_hyperideal = false;
    bool strong_c_hyperideal = false;
};

struct Hyperideal {
    ElementSet members;
    IdealClass cls;
};

IdealClass classify(const FiniteHyperring& h, const ProductClass& pc, const ElementSet& ideal);

} // namespace hyperlab
