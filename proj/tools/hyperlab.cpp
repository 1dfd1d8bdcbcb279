// hyperlab: command-line driver for the finite hyperring library.
//
// Exit codes: 0 success, 1 counterexample or axiom failure, 2 input/config error.

#include "hyperlab/catalog.hpp"
#include "hyperlab/harness.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace hl = hyperlab;

namespace {

struct Options {
    std::string catalog;
    bool table = false;
};

int emit(const Options& opt, const std::string& instance, const hl::Json& subject, const std::string& command,
         hl::Json args, const hl::Json& result, const std::string& table_text) {
    if (opt.table) std::cout << table_text;
    else std::cout << hl::canonical_dump(result);
    if (!opt.catalog.empty()) {
        const auto entry = hl::make_entry(instance, subject, command, std::move(args), result);
        std::cerr << "catalog: " << hl::store_entry(opt.catalog, entry) << "\n";
    }
    return 0;
}

std::vector<hl::ElementSet> parse_ideal_spec(const hl::FiniteHyperring& h, const std::string& spec, bool proper_only) {
    std::vector<hl::ElementSet> out;
    if (spec == "@enumerate") {
        for (const auto& i : hl::enumerate_hyperideals(h, hl::ElementSet::kCapacity))
            if (!proper_only || hl::is_proper(h, i)) out.push_back(i);
        return out;
    }
    hl::ElementSet s;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        long v = -1;
        try {
            v = std::stol(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != item.size() || v < 0 || static_cast<std::size_t>(v) >= h.order())
            throw hl::Error(hl::ErrorKind::Parse, "--ideal: bad member '" + item + "'");
        s.insert(static_cast<hl::Element>(v));
    }
    if (!hl::is_hyperideal(h, s)) throw hl::Error(hl::ErrorKind::NotAHyperideal, s.to_string() + " is not a hyperideal");
    out.push_back(s);
    return out;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != item.size() || item.empty()) throw hl::Error(hl::ErrorKind::Parse, "bad integer '" + item + "'");
        out.push_back(v);
    }
    return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_validate(const Options& opt, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw hl::Error(hl::ErrorKind::Parse, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    const auto tables = hl::parse_hyperring(ss.str());
    hl::check_well_formed(tables);
    const auto report = hl::validate_axioms(tables);
    std::ostringstream tt;
    for (const auto& c : report.checks) {
        tt << c.axiom << ": " << (c.passed ? "ok" : "FAILED");
        if (c.witness) tt << " at (" << (*c.witness)[0] << "," << (*c.witness)[1] << "," << (*c.witness)[2] << ")";
        tt << "\n";
    }
    tt << "hyperring: " << yes_no(report.is_hyperring) << "\n";
    emit(opt, tables.name, hl::to_json(tables), "validate", hl::Json::object(), hl::to_json(report), tt.str());
    return report.is_hyperring ? 0 : 1;
}

int cmd_classify(const Options& opt, const std::string& path, const std::string& spec) {
    const auto h = hl::load_hyperring(path);
    const auto pc = hl::product_classes(h);
    hl::Json arr = hl::Json::array();
    std::ostringstream tt;
    for (const auto& i : parse_ideal_spec(h, spec, false)) {
        const hl::Hyperideal ideal{i, hl::classify(h, pc, i)};
        arr.push_back(hl::hyperideal_json(h.name(), ideal));
        tt << i.to_string() << ": proper " << yes_no(ideal.cls.proper) << ", prime " << yes_no(ideal.cls.prime)
           << ", maximal " << yes_no(ideal.cls.maximal) << ", C " << yes_no(ideal.cls.c_hyperideal) << ", strong C "
           << yes_no(ideal.cls.strong_c_hyperideal) << "\n";
    }
    hl::Json args;
    args["ideal"] = spec;
    return emit(opt, h.name(), hl::to_json(h), "classify", args, arr, tt.str());
}

int cmd_profile(const Options& opt, const std::string& path, const std::string& spec, std::size_t smax,
                std::size_t nmax) {
    const auto h = hl::load_hyperring(path);
    hl::Json arr = hl::Json::array();
    std::ostringstream tt;
    for (const auto& q : parse_ideal_spec(h, spec, true)) {
        const hl::ClosedProfile p(h, q);
        hl::Json j = hl::profile_json(p, smax, nmax);
        tt << q.to_string() << "  omega:";
        for (const auto& v : j["omega"]) tt << " " << v.dump();
        tt << "  Omega:";
        for (const auto& v : j["Omega"]) tt << " " << (v.is_string() ? v.get<std::string>() : v.dump());
        tt << "\n";
        arr.push_back(std::move(j));
    }
    hl::Json result = spec == "@enumerate" ? arr : arr.front();
    hl::Json args;
    args["ideal"] = spec;
    args["smax"] = smax;
    args["nmax"] = nmax;
    return emit(opt, h.name(), hl::to_json(h), "profile", args, result, tt.str());
}

int cmd_fundamental(const Options& opt, const std::string& path) {
    const auto h = hl::load_hyperring(path);
    const auto r = hl::fundamental_ring(h);
    std::ostringstream tt;
    tt << "classes:";
    for (const auto& c : r.classes) tt << " " << c.to_string();
    tt << "\n";
    return emit(opt, h.name(), hl::to_json(h), "fundamental", hl::Json::object(), hl::to_json(r), tt.str());
}

int cmd_zx(const Options& opt, std::int64_t d, const std::string& xs, std::size_t smax, std::size_t n, bool weakly) {
    const hl::ZxResidueModel model{d, parse_int_list(xs)};
    hl::Json verdicts = hl::Json::array();
    bool all = true;
    std::ostringstream tt;
    for (std::size_t s = 1; s <= smax; ++s) {
        const auto v = weakly ? hl::zx_residue_weakly_closed(model, s, n) : hl::zx_residue_closed(model, s, n);
        hl::Json j;
        j["s"] = s;
        j["closed"] = v.closed;
        if (v.witness_residue) j["witness_residue"] = *v.witness_residue;
        verdicts.push_back(std::move(j));
        all = all && v.closed;
        tt << "s=" << s << ": " << yes_no(v.closed);
        if (v.witness_residue) tt << " (witness residue " << *v.witness_residue << ")";
        tt << "\n";
    }
    tt << (weakly ? "weakly closed" : "closed") << " for all s ≤ " << smax << ": " << yes_no(all) << "\n";
    hl::Json subject;
    subject["d"] = d;
    subject["X"] = model.X;
    hl::Json result;
    result["d"] = d;
    result["X"] = model.X;
    result["n"] = n;
    result["weakly"] = weakly;
    result["verdicts"] = std::move(verdicts);
    result["all"] = all;
    hl::Json args;
    args["smax"] = smax;
    args["n"] = n;
    args["weakly"] = weakly;
    return emit(opt, "zx(" + std::to_string(d) + ")", subject, "zx", args, result, tt.str());
}

int cmd_make_zx(std::int64_t m, const std::string& xs) {
    const auto x = parse_int_list(xs);
    std::cout << hl::canonical_dump(hl::to_json(hl::make_zx_mod(m, x)));
    return 0;
}

int cmd_make_product(const std::string& a, const std::string& b) {
    std::cout << hl::canonical_dump(hl::to_json(hl::product_ring(hl::load_hyperring(a), hl::load_hyperring(b))));
    return 0;
}

int cmd_verify(const Options& opt, hl::SuiteConfig config, const std::string& out_path) {
    const auto report = hl::run_suite(config);
    const hl::Json deterministic = report.to_json(false);
    if (opt.table) std::cout << report.summary_table();
    else std::cout << hl::canonical_dump(report.to_json(true));
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw hl::Error(hl::ErrorKind::Config, "cannot write " + out_path);
        out << hl::canonical_dump(deterministic);
    }
    if (!opt.catalog.empty()) {
        const auto entry = hl::make_entry("suite", hl::to_json(config), "verify", hl::Json::object(), deterministic);
        std::cerr << "catalog: " << hl::store_entry(opt.catalog, entry) << "\n";
    }
    return report.any_counterexample() ? 1 : 0;
}

int cmd_check(const Options& opt, const std::string& id, const hl::SuiteConfig& config) {
    hl::SuiteConfig c = config;
    c.only = {id};
    hl::find_check(id);
    return cmd_verify(opt, c, "");
}

hl::SuiteConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw hl::Error(hl::ErrorKind::Config, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return hl::suite_config_from_json(hl::Json::parse(ss.str()));
    } catch (const nlohmann::json::parse_error& e) {
        throw hl::Error(hl::ErrorKind::Config, path + ": " + e.what());
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite multiplicative hyperrings: axioms, hyperideals, (s,n)-closedness, fundamental rings"};
    app.require_subcommand(1);
    Options opt;
    bool json_flag = false;
    app.add_option("--catalog", opt.catalog, "Persist results as content-addressed entries in DIR");
    app.add_flag("--table", opt.table, "Human-readable output");
    app.add_flag("--json", json_flag, "JSON output (default)");

    std::string path, ideal = "@enumerate", xs, config_path, out_path, check_id, path_b;
    std::size_t smax = 6, nmax = 6, n = 1, threads = 1;
    std::int64_t d = 0, m = 0;
    std::uint64_t seed = 1;
    bool weakly = false;
    std::vector<std::string> only;

    auto* validate = app.add_subcommand("validate", "Check the hyperring axioms of a table file");
    validate->add_option("path", path)->required();

    auto* classify = app.add_subcommand("classify", "Classify hyperideals");
    classify->add_option("path", path)->required();
    classify->add_option("--ideal", ideal, "Comma-separated members or @enumerate");

    auto* profile = app.add_subcommand("profile", "omega/Omega profile of proper hyperideals");
    profile->add_option("path", path)->required();
    profile->add_option("--ideal", ideal, "Comma-separated members or @enumerate");
    profile->add_option("--smax", smax)->check(CLI::Range(1, 256));
    profile->add_option("--nmax", nmax)->check(CLI::Range(1, 256));

    auto* fundamental = app.add_subcommand("fundamental", "Fundamental ring G/gamma*");
    fundamental->add_option("path", path)->required();

    auto* zx = app.add_subcommand("zx", "Closedness of dZ in (Z,+,o_X) via residues");
    zx->add_option("d", d)->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 40));
    zx->add_option("X", xs, "Comma-separated multipliers")->required();
    zx->add_option("smax", smax)->required()->check(CLI::Range(1, 4096));
    zx->add_option("n", n)->required()->check(CLI::Range(1, 4096));
    zx->add_flag("--weakly", weakly, "Weak closedness instead");

    auto* make = app.add_subcommand("make", "Print a generated hyperring as JSON");
    make->require_subcommand(1);
    auto* make_zx = make->add_subcommand("zx", "zx_mod(m, X)");
    make_zx->add_option("m", m)->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{256}));
    make_zx->add_option("X", xs)->required();
    auto* make_product = make->add_subcommand("product", "Direct product of two table files");
    make_product->add_option("a", path)->required();
    make_product->add_option("b", path_b)->required();

    auto add_suite_options = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "Suite config JSON");
        sub->add_option("--seed", seed, "Seed for random instances");
        sub->add_option("--smax", smax)->check(CLI::Range(1, 64));
        sub->add_option("--nmax", nmax)->check(CLI::Range(1, 64));
        sub->add_option("--threads", threads)->check(CLI::Range(1, 256));
    };
    auto* verify = app.add_subcommand("verify", "Run the theorem suite");
    add_suite_options(verify);
    verify->add_option("--only", only, "Restrict to these check ids");
    verify->add_option("--out", out_path, "Also write the report without timings to FILE");
    auto* check = app.add_subcommand("check", "Run one check of the suite");
    check->add_option("id", check_id)->required();
    add_suite_options(check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (json_flag) opt.table = false;

    try {
        if (*validate) return cmd_validate(opt, path);
        if (*classify) return cmd_classify(opt, path, ideal);
        if (*profile) return cmd_profile(opt, path, ideal, smax, nmax);
        if (*fundamental) return cmd_fundamental(opt, path);
        if (*zx) return cmd_zx(opt, d, xs, smax, n, weakly);
        if (*make_zx) return cmd_make_zx(m, xs);
        if (*make_product) return cmd_make_product(path, path_b);
        if (*verify || *check) {
            CLI::App* sub = *verify ? verify : check;
            hl::SuiteConfig config = config_path.empty() ? hl::SuiteConfig{} : load_config(config_path);
            if (sub->count("--seed")) config.instances.seed = seed;
            if (sub->count("--smax")) config.s_max = smax;
            if (sub->count("--nmax")) config.n_max = nmax;
            if (sub->count("--threads")) config.threads = threads;
            if (*verify) {
                if (!only.empty()) {
                    for (const auto& id : only) hl::find_check(id);
                    config.only = only;
                }
                return cmd_verify(opt, config, out_path);
            }
            return cmd_check(opt, check_id, config);
        }
    } catch (const hl::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == hl::ErrorKind::AxiomFailure ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
