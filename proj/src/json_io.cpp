#include "hyperlab/json_io.hpp"

#include <fstream>
#include <sstream>

namespace hyperlab {

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& msg) {
    throw Error(ErrorKind::Parse, field + ": " + msg);
}

std::size_t as_index(const Json& j, const std::string& field) {
    if (!j.is_number_integer()) bad(field, "expected an integer");
    const auto v = j.get<std::int64_t>();
    if (v < 0) bad(field, "negative index");
    return static_cast<std::size_t>(v);
}

} // namespace

Json members_json(const ElementSet& s) {
    Json arr = Json::array();
    s.for_each([&](Element e) { arr.push_back(e); });
    return arr;
}

ElementSet members_from_json(const Json& j, std::size_t order, const std::string& field) {
    if (!j.is_array()) bad(field, "expected an array of members");
    ElementSet out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string f = field + "[" + std::to_string(i) + "]";
        const std::size_t e = as_index(j[i], f);
        if (e >= order) bad(f, "member " + std::to_string(e) + " out of range for order " + std::to_string(order));
        if (out.contains(static_cast<Element>(e))) bad(f, "duplicate member " + std::to_string(e));
        out.insert(static_cast<Element>(e));
    }
    return out;
}

Json to_json(const RawTables& t) {
    Json j;
    j["name"] = t.name;
    j["order"] = t.order;
    Json add = Json::array();
    for (const auto& row : t.add) add.push_back(row);
    j["add"] = std::move(add);
    Json mul = Json::array();
    for (const auto& row : t.mul) {
        Json r = Json::array();
        for (const auto& cell : row) r.push_back(members_json(cell));
        mul.push_back(std::move(r));
    }
    j["mul"] = std::move(mul);
    Json meta;
    meta["family"] = t.meta.family;
    if (t.meta.m) meta["m"] = *t.meta.m;
    if (!t.meta.X.empty()) meta["X"] = t.meta.X;
    j["meta"] = std::move(meta);
    return j;
}

Json to_json(const FiniteHyperring& h) { return to_json(h.tables()); }

RawTables raw_tables_from_json(const Json& j) {
    if (!j.is_object()) bad("$", "expected an object");
    RawTables t;
    if (j.contains("name")) {
        if (!j["name"].is_string()) bad("name", "expected a string");
        t.name = j["name"].get<std::string>();
    }
    if (!j.contains("order")) bad("order", "missing");
    t.order = as_index(j["order"], "order");
    if (t.order < 2) bad("order", "must be at least 2");
    if (t.order > ElementSet::kCapacity) bad("order", "exceeds " + std::to_string(ElementSet::kCapacity));
    const std::size_t n = t.order;

    if (!j.contains("add") || !j["add"].is_array()) bad("add", "missing or not an array");
    const Json& add = j["add"];
    if (add.size() != n) bad("add", "expected " + std::to_string(n) + " rows");
    t.add.assign(n, std::vector<Element>(n));
    for (std::size_t a = 0; a < n; ++a) {
        const std::string f = "add[" + std::to_string(a) + "]";
        if (!add[a].is_array() || add[a].size() != n) bad(f, "expected " + std::to_string(n) + " entries");
        for (std::size_t b = 0; b < n; ++b) {
            const std::string fb = f + "[" + std::to_string(b) + "]";
            const std::size_t v = as_index(add[a][b], fb);
            if (v >= n) bad(fb, "out of range");
            t.add[a][b] = static_cast<Element>(v);
        }
    }

    if (!j.contains("mul") || !j["mul"].is_array()) bad("mul", "missing or not an array");
    const Json& mul = j["mul"];
    if (mul.size() != n) bad("mul", "expected " + std::to_string(n) + " rows");
    t.mul.assign(n, std::vector<ElementSet>(n));
    for (std::size_t a = 0; a < n; ++a) {
        const std::string f = "mul[" + std::to_string(a) + "]";
        if (!mul[a].is_array() || mul[a].size() != n) bad(f, "expected " + std::to_string(n) + " entries");
        for (std::size_t b = 0; b < n; ++b) {
            const std::string fb = f + "[" + std::to_string(b) + "]";
            t.mul[a][b] = members_from_json(mul[a][b], n, fb);
            if (t.mul[a][b].empty()) bad(fb, "a hyperproduct must be nonempty");
        }
    }

    if (j.contains("meta")) {
        const Json& meta = j["meta"];
        if (!meta.is_object()) bad("meta", "expected an object");
        if (meta.contains("family")) {
            if (!meta["family"].is_string()) bad("meta.family", "expected a string");
            const auto fam = meta["family"].get<std::string>();
            if (fam != "table" && fam != "zx_mod" && fam != "product" && fam != "quotient")
                bad("meta.family", "unknown family '" + fam + "'");
            t.meta.family = fam;
        }
        if (meta.contains("m")) {
            if (!meta["m"].is_number_integer()) bad("meta.m", "expected an integer");
            t.meta.m = meta["m"].get<std::int64_t>();
        }
        if (meta.contains("X")) {
            if (!meta["X"].is_array()) bad("meta.X", "expected an array");
            for (const auto& x : meta["X"]) {
                if (!x.is_number_integer()) bad("meta.X", "expected integers");
                t.meta.X.push_back(x.get<std::int64_t>());
            }
        }
    }
    return t;
}

RawTables parse_hyperring(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // Map the byte offset to line:column for the diagnostic.
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                                          e.what());
    }
    return raw_tables_from_json(j);
}

FiniteHyperring load_hyperring(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return FiniteHyperring::build(parse_hyperring(ss.str()));
}

Json to_json(const IdealClass& c) {
    Json j;
    j["proper"] = c.proper;
    j["prime"] = c.prime;
    j["maximal"] = c.maximal;
    j["c_hyperideal"] = c.c_hyperideal;
    j["strong_c_hyperideal"] = c.strong_c_hyperideal;
    return j;
}

Json hyperideal_json(const std::string& ring_name, const Hyperideal& ideal) {
    Json j;
    j["ring"] = ring_name;
    j["members"] = members_json(ideal.members);
    j["class"] = to_json(ideal.cls);
    return j;
}

Json to_json(const AxiomReport& r) {
    Json j;
    j["is_hyperring"] = r.is_hyperring;
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json cj;
        cj["axiom"] = c.axiom;
        cj["passed"] = c.passed;
        if (c.witness) cj["witness"] = *c.witness;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    if (r.is_hyperring) {
        j["strongly_distributive"] = r.strongly_distributive;
        j["has_identity"] = !r.identities.empty();
        j["identities"] = r.identities;
        j["has_scalar_identity"] = r.scalar_identity.has_value();
        if (r.scalar_identity) j["scalar_identity"] = *r.scalar_identity;
    }
    return j;
}

Json profile_json(const ClosedProfile& p, std::size_t s_max, std::size_t n_max) {
    Json j;
    j["ideal"] = members_json(p.ideal());
    j["bound_L"] = p.bound_L();
    j["omega"] = p.omega_table(s_max);
    Json big = Json::array();
    for (const auto& v : p.Omega_table(n_max)) {
        if (v) big.push_back(*v);
        else big.push_back("inf");
    }
    j["Omega"] = std::move(big);
    Json w = Json::object();
    for (const auto& [sn, a] : p.witnesses(s_max, n_max))
        w[std::to_string(sn.first) + "," + std::to_string(sn.second)] = a;
    j["witnesses"] = std::move(w);
    return j;
}

Json to_json(const FundamentalRing& r) {
    Json j;
    Json classes = Json::array();
    for (const auto& c : r.classes) classes.push_back(members_json(c));
    j["classes"] = std::move(classes);
    j["add"] = r.add;
    j["mul"] = r.mul;
    return j;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace hyperlab
