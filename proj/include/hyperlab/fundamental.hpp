#pragma once

/**
 * @file fundamental.hpp
 * @brief The γ* relation and the fundamental ring G/γ*.
 *
 * γ* is the transitive closure of "x and y lie together in some finite sum of
 * finite products". Classes come from a union-find over the members of U.
 */

#include "hyperlab/hyperring.hpp"
#include "hyperlab/ideals.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hyperlab {

/// γ* classes, each listed once, ordered by least member.
std::vector<ElementSet> gamma_star_classes(const FiniteHyperring& h, const std::vector<ElementSet>& U);
std::vector<ElementSet> gamma_star_classes(const FiniteHyperring& h);

struct FundamentalRing {
    std::vector<ElementSet> classes;
    std::vector<Element> class_of; ///< carrier element -> class index
    std::vector<std::vector<Element>> add;
    std::vector<std::vector<Element>> mul;
    /// Representative pair (least members) used for each table entry.
    std::vector<std::vector<std::pair<Element, Element>>> witness;

    std::size_t order() const { return classes.size(); }
    /// c ⊙ … ⊙ c (k factors), k ≥ 1.
    Element power(Element c, std::size_t k) const;
};

/// Builds the tables and asserts well-definedness and the commutative ring
/// axioms. Throws WellDefinednessFailure with the offending entry.
FundamentalRing fundamental_ring(const FiniteHyperring& h);
FundamentalRing fundamental_ring(const FiniteHyperring& h, const std::vector<ElementSet>& U);

/// Brute-force cross-check of the ring axioms; empty when all hold.
std::optional<std::string> ring_axiom_failure(const FundamentalRing& r);

struct TransferMismatch {
    std::size_t s = 0;
    std::size_t n = 0;
    bool in_hyperring = false;
    bool in_fundamental = false;
};

struct FundamentalIdeal {
    ElementSet image;       ///< class indices {γ*(q) : q ∈ Q}
    bool is_ideal = false;  ///< false is the ImageNotIdeal finding
    bool proper = false;
    std::vector<TransferMismatch> mismatches; ///< empty iff the transfer holds
};

/// (s,n)-closedness of an ideal of the fundamental ring (single-valued powers).
bool ring_sn_closed(const FundamentalRing& r, const ElementSet& ideal, std::size_t s, std::size_t n);
bool is_ring_ideal(const FundamentalRing& r, const ElementSet& ideal);

/// Compares Q in H with Q/γ* in G/γ* for every s,n ≤ max_sn.
/// Throws ProperIdealRequired when Q is not proper.
FundamentalIdeal ideal_in_fundamental(const FiniteHyperring& h, const FundamentalRing& r, const ElementSet& q,
                                      std::size_t max_sn = 6);

} // namespace hyperlab
