#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "circlesys/coloring.hpp"
#include "circlesys/equivalence.hpp"
#include "circlesys/packing.hpp"
#include "circlesys/realization.hpp"

namespace circlesys {

using Json = nlohmann::json;

// Every document is an object {"type": ..., "version": 1, ...}. Floats are
// written in shortest round-trip form, so parse(dump(x)) reproduces x exactly.

Json to_json(const EmbeddedGraph& g);
Json to_json(const ILGraph& il);
Json to_json(const Packing& p);
Json to_json(const Realization& r);
Json to_json(const OrientedDual& d);
Json to_json(const VerifyReport& rep);
/// A graph together with a realization of it.
Json bundle_json(const EmbeddedGraph& g, const Realization& r);

EmbeddedGraph graph_from_json(const Json& j);
Packing packing_from_json(const Json& j);
Realization realization_from_json(const Json& j);
OrientedDual oriented_dual_from_json(const Json& j);

/// The "type" field, after checking the envelope. Throws ParseError.
std::string document_type(const Json& j);
/// Parses text into a document. Throws ParseError on malformed JSON.
Json parse_document(std::string_view text);

}  // namespace circlesys
