#pragma once

/**
 * @file catalog.hpp
 * @brief Content-addressed result catalog: one JSON file per (subject, command, arguments).
 *
 * File name: <content_hash>-<command>-<args_hash>.json inside one flat directory.
 * The subject is the canonical JSON of a hyperring, or of the suite config for verify.
 */

#include "hyperlab/json_io.hpp"

#include <string>
#include <vector>

namespace hyperlab {

inline constexpr const char* kToolVersion = "0.1.0";

/// FNV-1a 64 over the bytes, as 16 lowercase hex digits.
std::string content_hash(const std::string& text);

struct CatalogEntry {
    std::string instance;
    std::string content_hash; ///< hash of the canonical subject JSON
    std::string command;
    Json args;
    Json result;
    std::string result_hash;  ///< hash of the canonical result JSON
    std::string tool_version = kToolVersion;
    std::string timestamp;    ///< UTC, ISO 8601; excluded from every hash

    Json to_json() const;
    static CatalogEntry from_json(const Json& j);
    std::string file_name() const;
};

/// Fills both hashes and the timestamp.
CatalogEntry make_entry(const std::string& instance, const Json& subject, const std::string& command, Json args,
                        Json result);

/// Writes the entry (creating dir if needed); returns the path.
std::string store_entry(const std::string& dir, const CatalogEntry& entry);
/// Entries sorted by file name. Throws Error(Parse) on unreadable files.
std::vector<CatalogEntry> load_catalog(const std::string& dir);

} // namespace hyperlab
