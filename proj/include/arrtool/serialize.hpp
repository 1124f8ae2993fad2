#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "arrtool/arrangement.hpp"
#include "arrtool/graph_manifold.hpp"
#include "arrtool/incidence.hpp"
#include "arrtool/presentation.hpp"

namespace arrtool {

using Json = nlohmann::ordered_json;

/// Reads a file and parses it with parse_arrangement. Throws ParseError.
Arrangement load_arrangement(const std::string& path);

/// Input echo plus computed points and classification.
Json to_json(const Arrangement& a);
Json to_json(const IncidenceGraph& g);
Json to_json(const OrderedIncidenceGraph& g);
Json to_json(const GraphManifoldDescriptor& d);
Json to_json(const GroupPresentation& p);
Json to_json(const AbelianGroupDescription& a);

/// Inverse of to_json(OrderedIncidenceGraph). Throws ParseError on
/// inconsistent documents.
OrderedIncidenceGraph ordered_graph_from_json(const Json& j);

}  // namespace arrtool
