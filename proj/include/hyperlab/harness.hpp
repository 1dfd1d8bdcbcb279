#pragma once

/**
 * @file harness.hpp
 * @brief Machine checks of the closedness theory over generated finite instances.
 *
 * Each TheoremCheck is a named property: a hypothesis filter that selects
 * applicable cases inside one instance and a conclusion asserted on each.
 * run_suite evaluates every check on every instance and keeps, per check,
 * the first counterexample in instance order (instances are sorted by order,
 * cases are enumerated ideal-lexicographic, then element, then (s,n)).
 */

#include "hyperlab/closedness.hpp"
#include "hyperlab/fundamental.hpp"
#include "hyperlab/hyperring.hpp"
#include "hyperlab/ideals.hpp"
#include "hyperlab/json_io.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace hyperlab {

struct InstanceConfig {
    bool named_seeds = true;             ///< H1 = zx_mod(4,{2}), H3 = zx_mod(4,{1,3})
    std::int64_t zx_max_m = 10;          ///< every zx_mod(m,X), 2 ≤ m ≤ zx_max_m
    std::size_t zx_max_x = 2;            ///< X ⊆ {1..m−1}, 1 ≤ |X| ≤ zx_max_x
    std::size_t product_factor_order = 6; ///< pairwise products of instances up to this order; 0 disables
    std::size_t random_count = 0;        ///< random candidates to draw (rejected unless valid)
    std::size_t random_max_m = 8;
    std::uint64_t seed = 1;
    std::size_t max_order = 64;
};

struct SuiteConfig {
    InstanceConfig instances;
    std::size_t s_max = 6;
    std::size_t n_max = 6;
    std::size_t t_max = 3;            ///< ideals per product/intersection tuple
    std::size_t absorbing_n_max = 3;  ///< n range for the n-absorbing hypothesis
    std::size_t i_set_exhaustive = 16; ///< exact i-set search up to this order
    std::size_t threads = 1;
    std::vector<std::string> only;    ///< restrict to these check ids; empty = all
};

/// Throws Error(Config) on unknown keys or bad values.
SuiteConfig suite_config_from_json(const Json& j);
Json to_json(const SuiteConfig& c);

struct Instance {
    std::string name;
    std::shared_ptr<const FiniteHyperring> ring;
    std::shared_ptr<const FiniteHyperring> left;  ///< factors of a product instance
    std::shared_ptr<const FiniteHyperring> right;
    bool is_product() const { return left != nullptr; }
};

struct GenerationStats {
    std::size_t random_attempts = 0;
    std::size_t random_accepted = 0;
    std::size_t duplicates_skipped = 0;
};

/// Deterministic given the config; instances sorted by order (stable).
std::vector<Instance> generate_instances(const InstanceConfig& config, GenerationStats* stats = nullptr);

/// H1 := zx_mod(4,{2}) and H3 := zx_mod(4,{1,3}).
FiniteHyperring seed_H1();
FiniteHyperring seed_H3();

/// Lazily computed facts about one instance, shared by all checks run on it.
/// Not thread-safe; one Analysis per worker.
class Analysis {
public:
    Analysis(const Instance& instance, const SuiteConfig& config);
    ~Analysis();
    Analysis(const Analysis&) = delete;
    Analysis& operator=(const Analysis&) = delete;

    const Instance& instance() const { return instance_; }
    const FiniteHyperring& ring() const { return *instance_.ring; }
    const SuiteConfig& config() const { return config_; }
    /// Exponents up to this bound decide every ∀s / ∀n statement about powers.
    std::size_t exact_bound() const;

    const std::vector<ElementSet>& ideals();
    const std::vector<ElementSet>& proper_ideals();
    const std::vector<ElementSet>& product_class();
    const std::vector<ElementSet>& sums_class();
    /// Position of a hyperideal in ideals(); throws NotAHyperideal.
    std::size_t index_of(const ElementSet& i);
    /// Index of the hyperideal generated by ideals()[i]∘ideals()[j].
    std::size_t product_index(std::size_t i, std::size_t j);
    bool c_ideal(const ElementSet& i);
    bool strong_c_ideal(const ElementSet& i);
    bool prime(const ElementSet& i);
    const ClosedProfile& profile(const ElementSet& q);
    const ElementSet& nilpotent_set();
    const ElementSet& weak_zero_divisor_set();
    std::optional<bool> i_set_exists();
    const FundamentalRing& fundamental();
    const Quotient& quotient(const ElementSet& p);

    /// Factor analyses of a product instance (nullptr otherwise).
    Analysis* left();
    Analysis* right();
    /// Q1 × Q2 inside a product instance.
    ElementSet rectangle(const ElementSet& q1, const ElementSet& q2) const;
    /// Coordinate projections of a subset of a product instance.
    ElementSet project_left(const ElementSet& q) const;
    ElementSet project_right(const ElementSet& q) const;

private:
    const Instance& instance_;
    const SuiteConfig& config_;
    std::optional<std::vector<ElementSet>> ideals_, proper_, C_, U_;
    std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
    std::vector<std::vector<std::size_t>> products_;
    std::unordered_map<ElementSet, bool, ElementSetHash> c_cache_, strong_cache_, prime_cache_;
    std::unordered_map<ElementSet, std::unique_ptr<ClosedProfile>, ElementSetHash> profiles_;
    std::unordered_map<ElementSet, std::unique_ptr<Quotient>, ElementSetHash> quotients_;
    std::optional<ElementSet> nil_, zw_;
    std::optional<std::optional<bool>> i_set_;
    std::unique_ptr<FundamentalRing> fundamental_;
    std::unique_ptr<Instance> left_inst_, right_inst_;
    std::unique_ptr<Analysis> left_, right_;
};

struct Counterexample {
    std::vector<ElementSet> ideals;
    std::vector<Element> elements;
    std::optional<std::size_t> s;
    std::optional<std::size_t> n;
    std::string detail;
};

/// Collects the cases of one check on one instance. A case that fails stops
/// the check on that instance.
class CaseLog {
public:
    /// Records an applicable case. Returns false once a conclusion failed.
    template <class MakeCounterexample>
    bool expect(bool conclusion, MakeCounterexample&& make) {
        if (counterexample_) return false;
        ++applicable_;
        if (conclusion) {
            ++passed_;
            return true;
        }
        counterexample_ = make();
        return false;
    }
    bool failed() const { return counterexample_.has_value(); }
    void note(const std::string& key, std::int64_t delta = 1) { notes_[key] += delta; }

    std::size_t applicable() const { return applicable_; }
    std::size_t passed() const { return passed_; }
    const std::optional<Counterexample>& counterexample() const { return counterexample_; }
    const std::map<std::string, std::int64_t>& notes() const { return notes_; }

private:
    std::size_t applicable_ = 0;
    std::size_t passed_ = 0;
    std::optional<Counterexample> counterexample_;
    std::map<std::string, std::int64_t> notes_;
};

struct TheoremCheck {
    std::string id;
    std::string statement; ///< the property in plain words
    std::string reading;   ///< interpretation choices, empty when literal
    std::function<void(Analysis&, CaseLog&)> run;
    std::string unrealizable; ///< why no finite instance can be applicable, if known
};

/// Every registered check, in registry order.
const std::vector<TheoremCheck>& default_registry();
/// Throws Error(UnknownCheckId).
const TheoremCheck& find_check(const std::string& id);

struct TheoremReport {
    std::string id;
    std::string statement;
    std::string reading;
    std::string unrealizable;
    std::size_t instances_examined = 0;
    std::size_t applicable = 0;     ///< instances with at least one applicable case
    std::size_t passed = 0;         ///< applicable instances with every case passing
    std::size_t cases_applicable = 0;
    std::size_t cases_passed = 0;
    std::optional<Counterexample> counterexample;
    std::string counterexample_instance;
    Json counterexample_ring;
    std::map<std::string, std::int64_t> notes;
    double runtime_ms = 0.0;

    bool vacuous() const { return applicable == 0; }
    bool ok() const { return !counterexample.has_value(); }
};

struct SuiteReport {
    SuiteConfig config;
    std::size_t instance_count = 0;
    std::map<std::size_t, std::size_t> instances_by_order;
    GenerationStats generation;
    std::vector<TheoremReport> checks;
    Json worked_examples;
    double runtime_ms = 0.0;

    bool any_counterexample() const;
    /// Deterministic content; timings live under "timing" only.
    Json to_json(bool include_timing = true) const;
    std::string summary_table() const;
};

TheoremReport check_theorem(const TheoremCheck& check, const std::vector<Instance>& instances,
                            const SuiteConfig& config);
TheoremReport check_theorem(const std::string& id, const SuiteConfig& config);

SuiteReport run_suite(const SuiteConfig& config);
/// Runs the given checks instead of the registry (used by harness self-tests).
SuiteReport run_suite(const SuiteConfig& config, const std::vector<TheoremCheck>& checks);
SuiteReport run_suite(const SuiteConfig& config, const std::vector<TheoremCheck>& checks,
                      const std::vector<Instance>& instances, const GenerationStats& stats);

/// Worker count: HYPERRING_LAB_THREADS caps the requested value.
std::size_t effective_threads(std::size_t requested);

} // namespace hyperlab
