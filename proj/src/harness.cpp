#include "hyperlab/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace hyperlab {

// ---------------------------------------------------------------- config

namespace {

[[noreturn]] void config_error(const std::string& msg) { throw Error(ErrorKind::Config, msg); }

std::size_t config_count(const Json& j, const std::string& key, std::size_t lo, std::size_t hi) {
    if (!j.is_number_integer()) config_error(key + ": expected an integer");
    const auto v = j.get<std::int64_t>();
    if (v < static_cast<std::int64_t>(lo) || v > static_cast<std::int64_t>(hi))
        config_error(key + ": " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) +
                     "]");
    return static_cast<std::size_t>(v);
}

} // namespace

SuiteConfig suite_config_from_json(const Json& j) {
    if (!j.is_object()) config_error("expected an object");
    SuiteConfig c;
    for (const auto& [key, v] : j.items()) {
        if (key == "s_max") c.s_max = config_count(v, key, 1, 64);
        else if (key == "n_max") c.n_max = config_count(v, key, 1, 64);
        else if (key == "t_max") c.t_max = config_count(v, key, 1, 4);
        else if (key == "absorbing_n_max") c.absorbing_n_max = config_count(v, key, 1, 4);
        else if (key == "i_set_exhaustive") c.i_set_exhaustive = config_count(v, key, 0, 20);
        else if (key == "threads") c.threads = config_count(v, key, 1, 256);
        else if (key == "only") {
            if (!v.is_array()) config_error("only: expected an array of check ids");
            for (const auto& id : v) {
                if (!id.is_string()) config_error("only: expected strings");
                c.only.push_back(id.get<std::string>());
            }
        } else if (key == "instances") {
            if (!v.is_object()) config_error("instances: expected an object");
            auto& ic = c.instances;
            for (const auto& [k, w] : v.items()) {
                const std::string f = "instances." + k;
                if (k == "named_seeds") {
                    if (!w.is_boolean()) config_error(f + ": expected a boolean");
                    ic.named_seeds = w.get<bool>();
                } else if (k == "zx_max_m") {
                    ic.zx_max_m = static_cast<std::int64_t>(config_count(w, f, 0, 16));
                } else if (k == "zx_max_x") {
                    ic.zx_max_x = config_count(w, f, 0, 4);
                } else if (k == "product_factor_order") {
                    ic.product_factor_order = config_count(w, f, 0, 16);
                } else if (k == "random_count") {
                    ic.random_count = config_count(w, f, 0, 1000000);
                } else if (k == "random_max_m") {
                    ic.random_max_m = config_count(w, f, 2, 16);
                } else if (k == "seed") {
                    if (!w.is_number_unsigned()) config_error(f + ": expected a non-negative integer");
                    ic.seed = w.get<std::uint64_t>();
                } else if (k == "max_order") {
                    ic.max_order = config_count(w, f, 2, ElementSet::kCapacity);
                } else {
                    config_error("unknown key " + f);
                }
            }
        } else {
            config_error("unknown key " + key);
        }
    }
    for (const auto& id : c.only) {
        try {
            find_check(id);
        } catch (const Error&) {
            config_error("only: unknown check id '" + id + "'");
        }
    }
    return c;
}

Json to_json(const SuiteConfig& c) {
    Json j;
    Json ic;
    ic["named_seeds"] = c.instances.named_seeds;
    ic["zx_max_m"] = c.instances.zx_max_m;
    ic["zx_max_x"] = c.instances.zx_max_x;
    ic["product_factor_order"] = c.instances.product_factor_order;
    ic["random_count"] = c.instances.random_count;
    ic["random_max_m"] = c.instances.random_max_m;
    ic["seed"] = c.instances.seed;
    ic["max_order"] = c.instances.max_order;
    j["instances"] = std::move(ic);
    j["s_max"] = c.s_max;
    j["n_max"] = c.n_max;
    j["t_max"] = c.t_max;
    j["absorbing_n_max"] = c.absorbing_n_max;
    j["i_set_exhaustive"] = c.i_set_exhaustive;
    j["only"] = c.only;
    return j;
}

// ------------------------------------------------------------- instances

FiniteHyperring seed_H1() {
    const std::array<std::int64_t, 1> x{2};
    auto t = make_zx_mod(4, x).tables();
    t.name = "H1";
    return FiniteHyperring::build(std::move(t));
}

FiniteHyperring seed_H3() {
    const std::array<std::int64_t, 2> x{1, 3};
    auto t = make_zx_mod(4, x).tables();
    t.name = "H3";
    return FiniteHyperring::build(std::move(t));
}

namespace {

/// Key for duplicate detection: identical tables, name ignored.
std::string table_key(const FiniteHyperring& h) {
    std::string key = std::to_string(h.order()) + ":";
    const auto n = static_cast<Element>(h.order());
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) key += std::to_string(h.add(a, b)) + ",";
    key += "|";
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            for (auto w : h.mul(a, b).words()) key += std::to_string(w) + ".";
            key += ";";
        }
    return key;
}

/// Random candidates: half are a∘b = abX + S over ℤ_m with S a subgroup
/// (always valid), half are unconstrained symmetric tables over ℤ_m.
std::optional<FiniteHyperring> random_candidate(std::mt19937_64& rng, std::size_t max_m, std::size_t serial) {
    std::uniform_int_distribution<std::size_t> pick_m(2, max_m);
    const std::size_t m = pick_m(rng);
    RawTables t;
    t.order = m;
    t.name = "random#" + std::to_string(serial);
    t.meta.family = "table";
    t.add.assign(m, std::vector<Element>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) t.add[a][b] = static_cast<Element>((a + b) % m);
    t.mul.assign(m, std::vector<ElementSet>(m));

    if (std::bernoulli_distribution(0.5)(rng)) {
        std::vector<std::size_t> divisors;
        for (std::size_t d = 1; d <= m; ++d)
            if (m % d == 0) divisors.push_back(d);
        const std::size_t step = divisors[std::uniform_int_distribution<std::size_t>(0, divisors.size() - 1)(rng)];
        ElementSet X;
        const std::size_t xs = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
        for (std::size_t i = 0; i < xs; ++i) X.insert(static_cast<Element>(std::uniform_int_distribution<std::size_t>(0, m - 1)(rng)));
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                ElementSet cell;
                X.for_each([&](Element x) {
                    for (std::size_t s = 0; s < m; s += step) cell.insert(static_cast<Element>((a * b * x + s) % m));
                });
                t.mul[a][b] = cell;
            }
    } else {
        std::uniform_int_distribution<std::uint64_t> bits(1, (std::uint64_t{1} << m) - 1);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a; b < m; ++b) {
                const auto mask = bits(rng);
                ElementSet cell;
                for (std::size_t e = 0; e < m; ++e)
                    if (mask >> e & 1U) cell.insert(static_cast<Element>(e));
                t.mul[a][b] = cell;
                t.mul[b][a] = cell;
            }
    }
    if (!validate_axioms(t).is_hyperring) return std::nullopt;
    return FiniteHyperring::build(std::move(t));
}

} // namespace

std::vector<Instance> generate_instances(const InstanceConfig& config, GenerationStats* stats) {
    GenerationStats local;
    GenerationStats& st = stats ? *stats : local;
    st = GenerationStats{};

    std::vector<Instance> out;
    std::set<std::string> seen;
    auto emit = [&](FiniteHyperring h, std::shared_ptr<const FiniteHyperring> l = nullptr,
                    std::shared_ptr<const FiniteHyperring> r = nullptr) {
        if (h.order() > config.max_order) return;
        if (!seen.insert(table_key(h)).second) {
            ++st.duplicates_skipped;
            return;
        }
        Instance inst;
        inst.name = h.name();
        inst.ring = std::make_shared<const FiniteHyperring>(std::move(h));
        inst.left = std::move(l);
        inst.right = std::move(r);
        out.push_back(std::move(inst));
    };

    if (config.named_seeds) {
        emit(seed_H1());
        emit(seed_H3());
    }
    for (std::int64_t m = 2; m <= config.zx_max_m; ++m) {
        // Subsets of {1..m−1} by size, then lexicographically.
        for (std::size_t k = 1; k <= config.zx_max_x; ++k) {
            std::vector<std::int64_t> X(k);
            std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t pos, std::int64_t from) {
                if (pos == k) {
                    emit(make_zx_mod(m, X));
                    return;
                }
                for (std::int64_t x = from; x < m; ++x) {
                    X[pos] = x;
                    rec(pos + 1, x + 1);
                }
            };
            rec(0, 1);
        }
    }
    if (config.random_count > 0) {
        std::mt19937_64 rng(config.seed);
        for (std::size_t i = 0; i < config.random_count; ++i) {
            ++st.random_attempts;
            if (auto h = random_candidate(rng, config.random_max_m, i)) {
                ++st.random_accepted;
                emit(std::move(*h));
            }
        }
    }
    if (config.product_factor_order > 0) {
        std::vector<std::shared_ptr<const FiniteHyperring>> factors;
        for (const auto& inst : out)
            if (inst.ring->order() <= config.product_factor_order) factors.push_back(inst.ring);
        for (std::size_t i = 0; i < factors.size(); ++i)
            for (std::size_t j = i; j < factors.size(); ++j)
                emit(product_ring(*factors[i], *factors[j]), factors[i], factors[j]);
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Instance& a, const Instance& b) { return a.ring->order() < b.ring->order(); });
    return out;
}

// -------------------------------------------------------------- analysis

Analysis::Analysis(const Instance& instance, const SuiteConfig& config) : instance_(instance), config_(config) {}

Analysis::~Analysis() = default;

std::size_t Analysis::exact_bound() const {
    return std::max({ring().power_bound(), config_.s_max, config_.n_max}) + 1;
}

const std::vector<ElementSet>& Analysis::ideals() {
    if (!ideals_) ideals_ = enumerate_hyperideals(ring(), ElementSet::kCapacity);
    return *ideals_;
}

const std::vector<ElementSet>& Analysis::proper_ideals() {
    if (!proper_) {
        proper_.emplace();
        for (const auto& i : ideals())
            if (is_proper(ring(), i)) proper_->push_back(i);
    }
    return *proper_;
}

std::size_t Analysis::index_of(const ElementSet& i) {
    if (index_.empty())
        for (std::size_t k = 0; k < ideals().size(); ++k) index_.emplace(ideals()[k], k);
    const auto it = index_.find(i);
    if (it == index_.end()) throw Error(ErrorKind::NotAHyperideal, i.to_string() + " is not a hyperideal");
    return it->second;
}

std::size_t Analysis::product_index(std::size_t i, std::size_t j) {
    constexpr auto unset = static_cast<std::size_t>(-1);
    const std::size_t k = ideals().size();
    if (products_.empty()) products_.assign(k, std::vector<std::size_t>(k, unset));
    if (i > j) std::swap(i, j);
    auto& slot = products_[i][j];
    if (slot == unset) slot = index_of(ideal_product(ring(), ideals()[i], ideals()[j]));
    return slot;
}

const std::vector<ElementSet>& Analysis::product_class() {
    if (!C_) C_ = product_class_C(ring());
    return *C_;
}

const std::vector<ElementSet>& Analysis::sums_class() {
    if (!U_) U_ = sums_class_U(ring(), product_class());
    return *U_;
}

bool Analysis::c_ideal(const ElementSet& i) {
    auto it = c_cache_.find(i);
    if (it == c_cache_.end()) it = c_cache_.emplace(i, meets_implies_contained(product_class(), i)).first;
    return it->second;
}

bool Analysis::strong_c_ideal(const ElementSet& i) {
    auto it = strong_cache_.find(i);
    if (it == strong_cache_.end()) it = strong_cache_.emplace(i, meets_implies_contained(sums_class(), i)).first;
    return it->second;
}

bool Analysis::prime(const ElementSet& i) {
    auto it = prime_cache_.find(i);
    if (it == prime_cache_.end()) it = prime_cache_.emplace(i, is_prime(ring(), i)).first;
    return it->second;
}

const ClosedProfile& Analysis::profile(const ElementSet& q) {
    auto it = profiles_.find(q);
    if (it == profiles_.end()) it = profiles_.emplace(q, std::make_unique<ClosedProfile>(ring(), q)).first;
    return *it->second;
}

const ElementSet& Analysis::nilpotent_set() {
    if (!nil_) nil_ = nilpotents(ring());
    return *nil_;
}

const ElementSet& Analysis::weak_zero_divisor_set() {
    if (!zw_) zw_ = weak_zero_divisors(ring());
    return *zw_;
}

std::optional<bool> Analysis::i_set_exists() {
    if (!i_set_) i_set_ = has_i_set(ring(), config_.i_set_exhaustive);
    return *i_set_;
}

const FundamentalRing& Analysis::fundamental() {
    if (!fundamental_) fundamental_ = std::make_unique<FundamentalRing>(fundamental_ring(ring(), sums_class()));
    return *fundamental_;
}

const Quotient& Analysis::quotient(const ElementSet& p) {
    auto it = quotients_.find(p);
    if (it == quotients_.end()) it = quotients_.emplace(p, std::make_unique<Quotient>(quotient_by_ideal(ring(), p))).first;
    return *it->second;
}

Analysis* Analysis::left() {
    if (!instance_.is_product()) return nullptr;
    if (!left_) {
        left_inst_ = std::make_unique<Instance>(Instance{instance_.left->name(), instance_.left, nullptr, nullptr});
        left_ = std::make_unique<Analysis>(*left_inst_, config_);
    }
    return left_.get();
}

Analysis* Analysis::right() {
    if (!instance_.is_product()) return nullptr;
    if (!right_) {
        right_inst_ = std::make_unique<Instance>(Instance{instance_.right->name(), instance_.right, nullptr, nullptr});
        right_ = std::make_unique<Analysis>(*right_inst_, config_);
    }
    return right_.get();
}

ElementSet Analysis::rectangle(const ElementSet& q1, const ElementSet& q2) const {
    ElementSet out;
    q1.for_each([&](Element a) { q2.for_each([&](Element b) { out.insert(pair_index(*instance_.right, a, b)); }); });
    return out;
}

ElementSet Analysis::project_left(const ElementSet& q) const {
    ElementSet out;
    const auto n2 = static_cast<Element>(instance_.right->order());
    q.for_each([&](Element x) { out.insert(x / n2); });
    return out;
}

ElementSet Analysis::project_right(const ElementSet& q) const {
    ElementSet out;
    const auto n2 = static_cast<Element>(instance_.right->order());
    q.for_each([&](Element x) { out.insert(x % n2); });
    return out;
}

// ---------------------------------------------------------------- runner

std::size_t effective_threads(std::size_t requested) {
    std::size_t n = std::max<std::size_t>(1, requested);
    if (const char* env = std::getenv("HYPERRING_LAB_THREADS")) {
        try {
            const long cap = std::stol(env);
            if (cap >= 1) n = std::min(n, static_cast<std::size_t>(cap));
        } catch (const std::exception&) {
            throw Error(ErrorKind::Config, std::string("HYPERRING_LAB_THREADS: not a number: ") + env);
        }
    }
    return n;
}

namespace {

struct CellResult {
    std::size_t applicable = 0;
    std::size_t passed = 0;
    std::optional<Counterexample> counterexample;
    std::map<std::string, std::int64_t> notes;
    double ms = 0.0;
};

Json counterexample_json(const Counterexample& cx) {
    Json j;
    Json ideals = Json::array();
    for (const auto& i : cx.ideals) ideals.push_back(members_json(i));
    j["ideals"] = std::move(ideals);
    j["elements"] = cx.elements;
    if (cx.s) j["s"] = *cx.s;
    if (cx.n) j["n"] = *cx.n;
    j["detail"] = cx.detail;
    return j;
}

Json worked_examples_json() {
    Json j;
    const ZxResidueModel m105{105, {2, 4}};
    const ZxResidueModel m390{390, {7, 11}};
    auto all_s = [](auto&& verdict) {
        Json row = Json::array();
        for (std::size_t s = 1; s <= 12; ++s) row.push_back(verdict(s).closed);
        return row;
    };
    j["zx_105_2_4_n3_closed"] = all_s([&](std::size_t s) { return zx_residue_closed(m105, s, 3); });
    j["zx_105_2_4_n1_closed"] = all_s([&](std::size_t s) { return zx_residue_closed(m105, s, 1); });
    j["zx_390_7_11_n4_weakly_closed"] = all_s([&](std::size_t s) { return zx_residue_weakly_closed(m390, s, 4); });
    return j;
}

} // namespace

bool SuiteReport::any_counterexample() const {
    return std::any_of(checks.begin(), checks.end(), [](const TheoremReport& r) { return !r.ok(); });
}

Json SuiteReport::to_json(bool include_timing) const {
    Json j;
    j["config"] = hyperlab::to_json(config);
    Json inst;
    inst["count"] = instance_count;
    Json by_order = Json::object();
    for (const auto& [order, count] : instances_by_order) by_order[std::to_string(order)] = count;
    inst["by_order"] = std::move(by_order);
    inst["random_attempts"] = generation.random_attempts;
    inst["random_accepted"] = generation.random_accepted;
    inst["duplicates_skipped"] = generation.duplicates_skipped;
    j["instances"] = std::move(inst);

    Json arr = Json::array();
    std::size_t failed = 0, vacuous = 0;
    for (const auto& r : checks) {
        Json c;
        c["id"] = r.id;
        c["statement"] = r.statement;
        if (!r.reading.empty()) c["reading"] = r.reading;
        c["instances_examined"] = r.instances_examined;
        c["applicable"] = r.applicable;
        c["passed"] = r.passed;
        c["cases_applicable"] = r.cases_applicable;
        c["cases_passed"] = r.cases_passed;
        c["vacuous"] = r.vacuous();
        if (r.vacuous() && !r.unrealizable.empty()) c["unrealizable"] = r.unrealizable;
        if (r.counterexample) {
            Json cx = counterexample_json(*r.counterexample);
            cx["instance"] = r.counterexample_instance;
            cx["hyperring"] = r.counterexample_ring;
            c["counterexample"] = std::move(cx);
        } else {
            c["counterexample"] = nullptr;
        }
        if (!r.notes.empty()) c["notes"] = r.notes;
        arr.push_back(std::move(c));
        failed += r.ok() ? 0 : 1;
        vacuous += r.vacuous() ? 1 : 0;
    }
    j["checks"] = std::move(arr);
    Json summary;
    summary["checks"] = checks.size();
    summary["passed"] = checks.size() - failed;
    summary["failed"] = failed;
    summary["vacuous"] = vacuous;
    j["summary"] = std::move(summary);
    j["worked_examples"] = worked_examples;
    if (include_timing) {
        Json t;
        t["total_ms"] = runtime_ms;
        Json per = Json::object();
        for (const auto& r : checks) per[r.id] = r.runtime_ms;
        t["per_check_ms"] = std::move(per);
        j["timing"] = std::move(t);
    }
    return j;
}

std::string SuiteReport::summary_table() const {
    std::ostringstream os;
    os << std::left << std::setw(10) << "check" << std::right << std::setw(10) << "examined" << std::setw(12)
       << "applicable" << std::setw(8) << "passed" << std::setw(12) << "cases" << "  verdict\n";
    for (const auto& r : checks) {
        os << std::left << std::setw(10) << r.id << std::right << std::setw(10) << r.instances_examined
           << std::setw(12) << r.applicable << std::setw(8) << r.passed << std::setw(12) << r.cases_applicable << "  ";
        if (!r.ok()) {
            const auto& cx = *r.counterexample;
            os << "COUNTEREXAMPLE in " << r.counterexample_instance;
            if (cx.s && cx.n) os << " at (s,n)=(" << *cx.s << "," << *cx.n << ")";
        } else if (r.vacuous()) {
            os << (r.unrealizable.empty() ? "VACUOUS (no applicable case)" : "vacuous, hypothesis unrealizable");
        } else {
            os << "pass";
        }
        os << "\n";
    }
    std::size_t failed = 0;
    for (const auto& r : checks) failed += r.ok() ? 0 : 1;
    os << instance_count << " instances, " << checks.size() << " checks, " << failed << " with counterexamples\n";
    return os.str();
}

SuiteReport run_suite(const SuiteConfig& config, const std::vector<TheoremCheck>& checks,
                      const std::vector<Instance>& instances, const GenerationStats& stats) {
    const auto start = std::chrono::steady_clock::now();
    SuiteReport report;
    report.config = config;
    report.instance_count = instances.size();
    report.generation = stats;
    for (const auto& inst : instances) ++report.instances_by_order[inst.ring->order()];

    std::vector<const TheoremCheck*> selected;
    for (const auto& c : checks)
        if (config.only.empty() || std::find(config.only.begin(), config.only.end(), c.id) != config.only.end())
            selected.push_back(&c);

    // cells[i][c]: check c on instance i. Workers claim instances; the merge
    // walks instances in order so the result is independent of scheduling.
    std::vector<std::vector<CellResult>> cells(instances.size(), std::vector<CellResult>(selected.size()));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= instances.size()) return;
            try {
                Analysis an(instances[i], config);
                for (std::size_t c = 0; c < selected.size(); ++c) {
                    const auto t0 = std::chrono::steady_clock::now();
                    CaseLog log;
                    selected[c]->run(an, log);
                    auto& cell = cells[i][c];
                    cell.applicable = log.applicable();
                    cell.passed = log.passed();
                    cell.counterexample = log.counterexample();
                    cell.notes = log.notes();
                    cell.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
                }
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = instances.size();
                return;
            }
        }
    };
    const std::size_t nthreads = std::min(effective_threads(config.threads), std::max<std::size_t>(1, instances.size()));
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    for (std::size_t c = 0; c < selected.size(); ++c) {
        TheoremReport r;
        r.id = selected[c]->id;
        r.statement = selected[c]->statement;
        r.reading = selected[c]->reading;
        r.unrealizable = selected[c]->unrealizable;
        for (std::size_t i = 0; i < instances.size(); ++i) {
            const auto& cell = cells[i][c];
            ++r.instances_examined;
            r.runtime_ms += cell.ms;
            r.cases_applicable += cell.applicable;
            r.cases_passed += cell.passed;
            for (const auto& [k, v] : cell.notes) r.notes[k] += v;
            if (cell.applicable > 0) {
                ++r.applicable;
                if (!cell.counterexample) ++r.passed;
            }
            if (cell.counterexample && !r.counterexample) {
                r.counterexample = cell.counterexample;
                r.counterexample_instance = instances[i].name;
                r.counterexample_ring = to_json(*instances[i].ring);
            }
        }
        report.checks.push_back(std::move(r));
    }
    report.worked_examples = worked_examples_json();
    report.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

SuiteReport run_suite(const SuiteConfig& config, const std::vector<TheoremCheck>& checks) {
    GenerationStats stats;
    const auto instances = generate_instances(config.instances, &stats);
    return run_suite(config, checks, instances, stats);
}

SuiteReport run_suite(const SuiteConfig& config) { return run_suite(config, default_registry()); }

TheoremReport check_theorem(const TheoremCheck& check, const std::vector<Instance>& instances,
                            const SuiteConfig& config) {
    SuiteConfig c = config;
    c.only.clear();
    auto report = run_suite(c, std::vector<TheoremCheck>{check}, instances, GenerationStats{});
    return report.checks.front();
}

TheoremReport check_theorem(const std::string& id, const SuiteConfig& config) {
    const auto& check = find_check(id);
    return check_theorem(check, generate_instances(config.instances), config);
}

} // namespace hyperlab
