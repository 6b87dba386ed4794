#pragma once

#include "json.hpp"

#include "orr/moves.hpp"

namespace orr::io {

using nlohmann::json;

/// [["a", 1], ["b", 0], ...] sorted by vertex name.
json divisor_pairs(const Multigraph& g, const Divisor& d);
/// Accepts the pair form or an object {"a": 1, ...}; missing vertices are 0.
Divisor divisor_from_json(const Multigraph& g, const json& j);

/// One file-format token per edge: ">", "<" or "-".
json orientation_json(const PartialOrientation& o);
PartialOrientation orientation_from_json(const Multigraph& g, const json& j);

json vertex_set_json(const Multigraph& g, const VertexSet& s);

/// {"type": "EdgePivot", ...}; vertices by name, edges by index.
json move_json(const Multigraph& g, const Move& m);
Move move_from_json(const Multigraph& g, const json& j);

/// {"initial": hex, "final": hex, "moves": [...]}.
json certificate_json(const Multigraph& g, const MoveCertificate& c);
MoveCertificate certificate_from_json(const Multigraph& g, const json& j);

}  // namespace orr::io
