// JSON wire formats.
//
//   QuadNum      {"m": 2, "rat": "3/2", "rad": "0"}
//   Dissection   {"n": 10, "diagonals": [[1,4],[4,9],[5,8]]}
//   Tree         {"host_n": 10, "edges": [[1,3],[1,9],[5,9],[5,7]]}
//   Frieze       {"width": 7, "m": 2, "rows": [[QuadNum, ...], ...]}
//
// Readers throw std::invalid_argument on malformed input.

#pragma once

#include "lf/bijection.hpp"
#include "lf/exact.hpp"
#include "lf/frieze.hpp"
#include "lf/polygon.hpp"
#include "lf/verify.hpp"

#include <json.hpp>

namespace lf {

using Json = nlohmann::json;

Json to_json(const QuadNum& x);
QuadNum quadnum_from_json(const Json& j);

Json to_json(const Dissection& d);
Dissection dissection_from_json(const Json& j);

Json to_json(const NoncrossingTree& t);
NoncrossingTree tree_from_json(const Json& j);

Json to_json(const FriezeGrid& grid);
FriezeGrid grid_from_json(const Json& j);

Json to_json(const ValidationReport& report);
Json to_json(const VerificationReport& report);
Json to_json(const SweepSummary& summary);

}  // namespace lf
