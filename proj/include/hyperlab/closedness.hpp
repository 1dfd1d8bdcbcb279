#pragma once

/**
 * @file closedness.hpp
 * @brief (s,n)-closed and weakly (s,n)-closed hyperideals.
 *
 * A proper hyperideal Q is (s,n)-closed when a^s ⊆ Q forces a^n ⊆ Q, and
 * weakly (s,n)-closed when the same holds for every a with 0 ∉ a^s.
 *
 * Deciding closedness for every pair (s,n) at once rests on one fact: the set
 * In(k) = {a : a^k ⊆ Q} is monotone in k (Q absorbs) and eventually periodic
 * (powers are), hence constant once k passes every element's power tail.
 * With B = max(tail + period) over the carrier,
 *
 *     (s,n)-closed  ⇔  In(min(s,B)) ⊆ In(min(n,B))
 *
 * for all s,n ≥ 1, which gives ω_Q and Ω_Q (including Ω_Q = ∞) exactly.
 */

#include "hyperlab/hyperring.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace hyperlab {

struct ClosedVerdict {
    bool closed = true;
    /// Least a with a^s ⊆ Q (and 0 ∉ a^s for the weak form) but a^n ⊄ Q.
    std::optional<Element> witness;

    explicit operator bool() const { return closed; }
};

/// Throws ProperIdealRequired.
ClosedVerdict sn_closed(const FiniteHyperring& h, const ElementSet& q, std::size_t s, std::size_t n);
inline bool is_sn_closed(const FiniteHyperring& h, const ElementSet& q, std::size_t s, std::size_t n) {
    return sn_closed(h, q, s, n).closed;
}

/// Throws ProperIdealRequired.
ClosedVerdict weakly_sn_closed(const FiniteHyperring& h, const ElementSet& q, std::size_t s, std::size_t n);
inline bool is_weakly_sn_closed(const FiniteHyperring& h, const ElementSet& q, std::size_t s, std::size_t n) {
    return weakly_sn_closed(h, q, s, n).closed;
}

/// Least x with 0 ∈ x^s and x^n ⊄ Q. Throws ProperIdealRequired.
std::optional<Element> find_tough_zero(const FiniteHyperring& h, const ElementSet& q, std::size_t s, std::size_t n);

/// ω_Q, Ω_Q and the closed-pair predicate of one proper hyperideal.
class ClosedProfile {
public:
    ClosedProfile(const FiniteHyperring& h, const ElementSet& q);

    const ElementSet& ideal() const { return ideal_; }
    /// max over elements of tail + period.
    std::size_t bound_L() const { return bound_; }

    bool closed(std::size_t s, std::size_t n) const;
    /// min{n : (s,n)-closed}; always in [1, s].
    std::size_t omega(std::size_t s) const;
    /// sup{s : (s,n)-closed}; nullopt is ∞.
    std::optional<std::size_t> Omega(std::size_t n) const;
    /// True when every pair is closed.
    bool all_closed() const;

    std::vector<std::size_t> omega_table(std::size_t s_max) const;
    std::vector<std::optional<std::size_t>> Omega_table(std::size_t n_max) const;

    /// {a : a^k ⊆ Q}
    const ElementSet& members_with_power_inside(std::size_t k) const;

    /// Least witness for each failing (s,n) with s ≤ s_max, n ≤ n_max.
    std::map<std::pair<std::size_t, std::size_t>, Element> witnesses(std::size_t s_max, std::size_t n_max) const;

private:
    std::size_t clamp(std::size_t k) const { return k < bound_ ? k : bound_; }

    ElementSet ideal_;
    std::size_t bound_ = 1;
    std::vector<ElementSet> inside_; // inside_[k-1] = In(k), k ∈ [1, bound_]
};

inline ClosedProfile closed_profile(const FiniteHyperring& h, const ElementSet& q) { return ClosedProfile(h, q); }

/// ∃b: a^n ⊆ a^s∘b; returns the least such b.
std::optional<Element> regular_multiplier(const FiniteHyperring& h, Element a, std::size_t s, std::size_t n);
inline bool is_sn_regular(const FiniteHyperring& h, Element a, std::size_t s, std::size_t n) {
    return regular_multiplier(h, a, s, n).has_value();
}

/// ∃B ⊆ G: a^n ⊆ a^s∘B. B ↦ a^s∘B is monotone, so B = G decides it.
bool is_sn_Regular(const FiniteHyperring& h, Element a, std::size_t s, std::size_t n);
/// Same predicate by explicit search over nonempty subsets B. Order ≤ 16.
bool is_sn_Regular_by_subsets(const FiniteHyperring& h, Element a, std::size_t s, std::size_t n);

/// The hyperideal dℤ of (ℤ, +, ∘_X) with a∘b = {a·x·b : x ∈ X}.
///
/// Every member of a^s is a^s times a product of s−1 members of X, so
/// a^s ⊆ dℤ depends only on a mod d. For an integer a ≠ 0, 0 ∈ a^s only
/// when s ≥ 2 and 0 ∈ X.
struct ZxResidueModel {
    std::int64_t d = 2;
    std::vector<std::int64_t> X;
};

struct ResidueVerdict {
    bool closed = true;
    std::optional<std::int64_t> witness_residue;
};

ResidueVerdict zx_residue_closed(const ZxResidueModel& model, std::size_t s, std::size_t n);
ResidueVerdict zx_residue_weakly_closed(const ZxResidueModel& model, std::size_t s, std::size_t n);

} // namespace hyperlab
