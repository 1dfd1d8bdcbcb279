#include "hyperlab/catalog.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace hyperlab {

namespace fs = std::filesystem;

std::string content_hash(const std::string& text) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

namespace {

std::string utc_now() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

std::string string_field(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string()) throw Error(ErrorKind::Parse, std::string("catalog entry: ") + key);
    return j[key].get<std::string>();
}

} // namespace

Json CatalogEntry::to_json() const {
    Json j;
    j["instance"] = instance;
    j["content_hash"] = content_hash;
    j["command"] = command;
    j["args"] = args;
    j["result"] = result;
    j["result_hash"] = result_hash;
    j["tool_version"] = tool_version;
    j["timestamp"] = timestamp;
    return j;
}

CatalogEntry CatalogEntry::from_json(const Json& j) {
    if (!j.is_object()) throw Error(ErrorKind::Parse, "catalog entry: expected an object");
    CatalogEntry e;
    e.instance = string_field(j, "instance");
    e.content_hash = string_field(j, "content_hash");
    e.command = string_field(j, "command");
    e.args = j.value("args", Json::object());
    e.result = j.value("result", Json());
    e.result_hash = string_field(j, "result_hash");
    e.tool_version = string_field(j, "tool_version");
    e.timestamp = string_field(j, "timestamp");
    return e;
}

std::string CatalogEntry::file_name() const {
    return content_hash + "-" + command + "-" + hyperlab::content_hash(args.dump()).substr(0, 8) + ".json";
}

CatalogEntry make_entry(const std::string& instance, const Json& subject, const std::string& command, Json args,
                        Json result) {
    CatalogEntry e;
    e.instance = instance;
    e.content_hash = content_hash(canonical_dump(subject));
    e.command = command;
    e.args = std::move(args);
    e.result = std::move(result);
    e.result_hash = content_hash(canonical_dump(e.result));
    e.timestamp = utc_now();
    return e;
}

std::string store_entry(const std::string& dir, const CatalogEntry& entry) {
    fs::create_directories(dir);
    const fs::path path = fs::path(dir) / entry.file_name();
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::Config, "cannot write " + path.string());
    out << canonical_dump(entry.to_json());
    return path.string();
}

std::vector<CatalogEntry> load_catalog(const std::string& dir) {
    std::vector<fs::path> files;
    for (const auto& de : fs::directory_iterator(dir))
        if (de.is_regular_file() && de.path().extension() == ".json") files.push_back(de.path());
    std::sort(files.begin(), files.end());
    std::vector<CatalogEntry> out;
    for (const auto& f : files) {
        std::ifstream in(f);
        std::stringstream ss;
        ss << in.rdbuf();
        try {
            out.push_back(CatalogEntry::from_json(Json::parse(ss.str())));
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorKind::Parse, f.string() + ": " + e.what());
        }
    }
    return out;
}

} // namespace hyperlab
