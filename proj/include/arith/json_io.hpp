#pragma once

#include <json.hpp>

#include <string>

#include "arith/critgroup.hpp"
#include "arith/enumerate.hpp"
#include "arith/structures.hpp"

namespace arith {

using Json = nlohmann::ordered_json;

// Graph files: {"vertices": ["a", ...], "edges": [["a","b",mult], ...]};
// multiplicity defaults to 1.
Json to_json(const Multigraph& g);
Multigraph graph_from_json(const Json& j);

// Structure files: {"d": ["2","3","7/5"], "r": [4,3,5], "relaxed": ["v3"]},
// vectors in the graph's vertex order. Rationals are "p/q" strings ("p" when
// integral); r entries may be numbers or strings.
Json to_json(const Multigraph& g, const RationalStructure& s);
Json to_json(const Multigraph& g, const ArithmeticalStructure& s);
RationalStructure structure_from_json(const Multigraph& g, const Json& j);

Json to_json(const BlockDecomposition& b);
Json to_json(const Multigraph& g, const VerifyReport& r);
Json to_json(const GroupInvariants& inv);

Json read_json_file(const std::string& path);

}  // namespace arith
