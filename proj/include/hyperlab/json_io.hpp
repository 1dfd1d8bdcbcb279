#pragma once

/**
 * @file json_io.hpp
 * @brief JSON documents for hyperrings, hyperideals, profiles and fundamental rings.
 *
 * Hyperring document:
 *   {"name": str, "order": n, "add": [[int]], "mul": [[[int]]],
 *    "meta": {"family": "table"|"zx_mod"|"product"|"quotient", "m": int?, "X": [int]?}}
 * mul[a][b] lists the members of a∘b in ascending order.
 */

#include "hyperlab/closedness.hpp"
#include "hyperlab/fundamental.hpp"
#include "hyperlab/hyperring.hpp"
#include "hyperlab/ideals.hpp"

#include "json.hpp"

#include <string>

namespace hyperlab {

using Json = nlohmann::ordered_json;

Json to_json(const RawTables& t);
Json to_json(const FiniteHyperring& h);
/// Throws Error(Parse) with the offending field path.
RawTables raw_tables_from_json(const Json& j);
/// Parses text; syntax errors carry line/column.
RawTables parse_hyperring(const std::string& text);
FiniteHyperring load_hyperring(const std::string& path);

Json members_json(const ElementSet& s);
/// Throws Error(Parse) on duplicates or members ≥ order.
ElementSet members_from_json(const Json& j, std::size_t order, const std::string& field);

Json to_json(const IdealClass& c);
Json hyperideal_json(const std::string& ring_name, const Hyperideal& ideal);
Json to_json(const AxiomReport& r);

/// {"ideal", "bound_L", "omega", "Omega", "witnesses"}
Json profile_json(const ClosedProfile& p, std::size_t s_max, std::size_t n_max);
/// {"classes", "add", "mul"}
Json to_json(const FundamentalRing& r);

/// Canonical text: two-space indentation, trailing newline.
std::string canonical_dump(const Json& j);

} // namespace hyperlab
