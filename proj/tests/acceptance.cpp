// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria. Usage: acceptance [path-to-hyperlab-cli]

#include "oracle.hpp"

#include "hyperlab/harness.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace hyperlab;

namespace {

// Pinned limits.
constexpr double kWorkedExampleBudgetMs = 1000.0;
constexpr double kSuiteBudgetMs = 10.0 * 60.0 * 1000.0;
constexpr std::size_t kSuiteThreads = 4;
constexpr std::size_t kMinChecks = 25;
constexpr std::size_t kOracleMaxOrder = 8;
constexpr std::size_t kOracleMaxExponent = 6;
constexpr std::size_t kProfileSamples = 1000;
constexpr std::uint64_t kProfileSeed = 20240611;
constexpr std::size_t kTransferMax = 6;
constexpr std::size_t kWorkedMaxS = 12;

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << "  [" << id << "] " << name << ": " << detail << std::endl;
    if (!ok) ++failures;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string bools(const std::vector<bool>& v) {
    std::string s;
    for (bool b : v) s += b ? '1' : '0';
    return s;
}

void worked_examples() {
    {
        const auto t0 = std::chrono::steady_clock::now();
        const ZxResidueModel m{105, {2, 4}};
        std::vector<bool> n3, n1;
        for (std::size_t s = 1; s <= kWorkedMaxS; ++s) {
            n3.push_back(zx_residue_closed(m, s, 3).closed);
            n1.push_back(zx_residue_closed(m, s, 1).closed);
        }
        const double ms = ms_since(t0);
        const bool ok = bools(n3) == std::string(kWorkedMaxS, '1') && ms < kWorkedExampleBudgetMs;
        std::ostringstream os;
        os << "105Z in (Z,+,o_{2,4}) (s,3)-closed for s=1..12: " << bools(n3) << "; (s,1): " << bools(n1) << "; "
           << ms << " ms";
        report(1, "residue example, n=3", ok, os.str());
    }
    {
        const auto t0 = std::chrono::steady_clock::now();
        const ZxResidueModel m{390, {7, 11}};
        std::vector<bool> n4;
        for (std::size_t s = 1; s <= kWorkedMaxS; ++s) n4.push_back(zx_residue_weakly_closed(m, s, 4).closed);
        const double ms = ms_since(t0);
        const bool ok = bools(n4) == std::string(kWorkedMaxS, '1') && ms < kWorkedExampleBudgetMs;
        std::ostringstream os;
        os << "390Z in (Z,+,o_{7,11}) weakly (s,4)-closed for s=1..12: " << bools(n4) << "; " << ms << " ms";
        report(2, "residue example, weakly n=4", ok, os.str());
    }
}

void theorem_suite() {
    SuiteConfig config;
    config.threads = kSuiteThreads;
    const auto t0 = std::chrono::steady_clock::now();
    const auto rep = run_suite(config);
    const double ms = ms_since(t0);
    std::size_t failed = 0, vacuous_unexplained = 0, vacuous_proven = 0;
    std::ostringstream lines;
    for (const auto& c : rep.checks) {
        if (!c.ok()) {
            ++failed;
            lines << "      counterexample " << c.id << " on " << c.counterexample_instance << ": "
                  << c.counterexample->detail << "\n";
        }
        if (c.vacuous()) {
            if (c.unrealizable.empty()) {
                ++vacuous_unexplained;
                lines << "      vacuous " << c.id << "\n";
            } else {
                ++vacuous_proven;
            }
        }
    }
    const bool ok = failed == 0 && vacuous_unexplained == 0 && rep.checks.size() >= kMinChecks && ms < kSuiteBudgetMs;
    std::ostringstream os;
    os << rep.checks.size() << " checks over " << rep.instance_count << " instances; " << failed
       << " with counterexamples; " << vacuous_unexplained << " vacuous unexplained; " << vacuous_proven
       << " vacuous with unrealizability proof; " << ms / 1000.0 << " s on " << effective_threads(kSuiteThreads)
       << " threads";
    report(3, "theorem suite", ok, os.str());
    std::cout << lines.str();
}

void oracle_equivalence() {
    InstanceConfig ic;
    ic.max_order = kOracleMaxOrder;
    std::size_t instances = 0, ideals = 0, pairs = 0;
    std::string mismatch;
    for (const auto& inst : generate_instances(ic)) {
        const auto& h = *inst.ring;
        const auto t = oracle::from(h);
        ++instances;
        const auto lib = enumerate_hyperideals(h);
        std::set<oracle::Set> lib_sets, ref_sets;
        for (const auto& q : lib) lib_sets.insert(oracle::to_set(q));
        for (const auto& q : oracle::hyperideals(t)) ref_sets.insert(q);
        if (lib_sets != ref_sets && mismatch.empty()) mismatch = "hyperideals differ on " + inst.name;
        ideals += lib.size();
        for (const auto& q : lib) {
            if (!is_proper(h, q)) continue;
            const auto qs = oracle::to_set(q);
            for (std::size_t s = 1; s <= kOracleMaxExponent; ++s)
                for (std::size_t n = 1; n <= kOracleMaxExponent; ++n) {
                    ++pairs;
                    if (is_sn_closed(h, q, s, n) != oracle::sn_closed(t, qs, s, n) && mismatch.empty())
                        mismatch = "sn_closed differs on " + inst.name;
                }
        }
        std::set<oracle::Set> lib_classes, ref_classes;
        for (const auto& c : gamma_star_classes(h)) lib_classes.insert(oracle::to_set(c));
        for (const auto& c : oracle::gamma_star(t)) ref_classes.insert(c);
        if (lib_classes != ref_classes && mismatch.empty()) mismatch = "gamma* differs on " + inst.name;
    }
    std::ostringstream os;
    os << instances << " instances of order <= " << kOracleMaxOrder << ", " << ideals << " hyperideals, " << pairs
       << " (ideal,s,n) triples";
    if (!mismatch.empty()) os << "; first mismatch: " << mismatch;
    report(4, "oracle equivalence", mismatch.empty(), os.str());
}

void profile_consistency() {
    const auto instances = generate_instances(InstanceConfig{});
    std::mt19937_64 rng(kProfileSeed);
    std::size_t agree = 0, drawn = 0;
    std::string first;
    while (drawn < kProfileSamples) {
        const auto& inst = instances[std::uniform_int_distribution<std::size_t>(0, instances.size() - 1)(rng)];
        const auto& h = *inst.ring;
        std::vector<ElementSet> proper;
        for (const auto& q : enumerate_hyperideals(h, ElementSet::kCapacity))
            if (is_proper(h, q)) proper.push_back(q);
        if (proper.empty()) continue;
        const auto& q = proper[std::uniform_int_distribution<std::size_t>(0, proper.size() - 1)(rng)];
        const ClosedProfile p(h, q);
        const std::size_t top = p.bound_L() + 4;
        const std::size_t s = std::uniform_int_distribution<std::size_t>(1, top)(rng);
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, top)(rng);
        ++drawn;
        const bool direct = is_sn_closed(h, q, s, n);
        const bool by_omega = n >= p.omega(s);
        const auto big = p.Omega(n);
        const bool by_Omega = !big || s <= *big;
        if (direct == by_omega && direct == by_Omega) {
            ++agree;
        } else if (first.empty()) {
            first = inst.name + " s=" + std::to_string(s) + " n=" + std::to_string(n);
        }
    }
    std::ostringstream os;
    os << agree << "/" << drawn << " samples agree (seed " << kProfileSeed << ")";
    if (!first.empty()) os << "; first disagreement " << first;
    report(5, "profile consistency", agree == drawn, os.str());
}

void fundamental_transfer() {
    const auto instances = generate_instances(InstanceConfig{});
    std::size_t rings_ok = 0, ideals = 0, transfer_ok = 0, whole_image = 0, proper_failures = 0;
    std::string first_axiom, first_transfer;
    for (const auto& inst : instances) {
        const auto& h = *inst.ring;
        FundamentalRing r;
        try {
            r = fundamental_ring(h);
        } catch (const Error& e) {
            if (first_axiom.empty()) first_axiom = inst.name + ": " + e.what();
            continue;
        }
        if (const auto f = ring_axiom_failure(r)) {
            if (first_axiom.empty()) first_axiom = inst.name + ": " + *f;
            continue;
        }
        ++rings_ok;
        for (const auto& q : enumerate_hyperideals(h, ElementSet::kCapacity)) {
            if (!is_proper(h, q)) continue;
            ++ideals;
            const auto fi = ideal_in_fundamental(h, r, q, kTransferMax);
            if (!fi.proper) ++whole_image;
            if (fi.is_ideal && fi.mismatches.empty()) {
                ++transfer_ok;
            } else {
                if (fi.proper) ++proper_failures;
                if (!first_transfer.empty()) continue;
                std::ostringstream os;
                os << inst.name << " Q={";
                bool sep = false;
                q.for_each([&](Element e) {
                    os << (sep ? "," : "") << e;
                    sep = true;
                });
                os << "}";
                if (!fi.mismatches.empty())
                    os << " at (s,n)=(" << fi.mismatches.front().s << "," << fi.mismatches.front().n << ")"
                       << " closed in G: " << fi.mismatches.front().in_hyperring
                       << ", in G/gamma*: " << fi.mismatches.front().in_fundamental;
                first_transfer = os.str();
            }
        }
    }
    std::ostringstream os;
    os << rings_ok << "/" << instances.size() << " fundamental rings satisfy the ring axioms; transfer holds for "
       << transfer_ok << "/" << ideals << " proper hyperideals (" << whole_image
       << " map onto the whole fundamental ring; " << proper_failures << " failures have a proper image)";
    if (!first_axiom.empty()) os << "; first axiom failure " << first_axiom;
    if (!first_transfer.empty()) os << "; first transfer failure " << first_transfer;
    report(6, "fundamental ring and transfer", rings_ok == instances.size() && transfer_ok == ideals, os.str());
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void determinism(const char* cli) {
    const auto dir = std::filesystem::temp_directory_path() / "hyperlab_acceptance";
    std::filesystem::create_directories(dir);
    const auto cfg = dir / "config.json";
    {
        std::ofstream out(cfg);
        out << R"({"instances": {"random_count": 400, "seed": 1}})";
    }
    std::string a, b, how;
    if (cli) {
        how = "two CLI verify runs";
        for (int k = 0; k < 2; ++k) {
            const auto out = dir / ("report" + std::to_string(k) + ".json");
            const std::string cmd = std::string("\"") + cli + "\" verify --config \"" + cfg.string() + "\" --seed 1 --out \"" +
                                    out.string() + "\" > /dev/null";
            if (std::system(cmd.c_str()) == -1) break;
            (k == 0 ? a : b) = slurp(out);
        }
    } else {
        how = "two in-process suite runs";
        auto config = suite_config_from_json(Json::parse(slurp(cfg)));
        a = canonical_dump(run_suite(config).to_json(false));
        config.threads = kSuiteThreads;
        b = canonical_dump(run_suite(config).to_json(false));
    }
    std::filesystem::remove_all(dir);
    std::ostringstream os;
    os << how << " with seed 1 and 400 random candidates: " << a.size() << " and " << b.size() << " bytes";
    report(7, "determinism", !a.empty() && a == b, os.str());
}

} // namespace

int main(int argc, char** argv) {
    try {
        worked_examples();
        oracle_equivalence();
        profile_consistency();
        fundamental_transfer();
        determinism(argc > 1 ? argv[1] : nullptr);
        theorem_suite();
    } catch (const std::exception& e) {
        std::cout << "FAIL  acceptance aborted: " << e.what() << std::endl;
        return 100;
    }
    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAIL") << std::endl;
    return failures;
}
