#pragma once

// JSON and planar-diagram (PD) code adapters for TangleDiagram.

#include <array>
#include <string>
#include <vector>

#include "json.hpp"
#include "skein/diagram.hpp"

namespace skein {

using Json = nlohmann::json;

/// {"width_in":n, "events":[["cup",i]|["cap",i]|["x+",i]|["x-",i],...],
///  "width_out":m, "orient":[bottom directions..., cup directions...],
///  "twists":{"<component>": count}}. "orient" and "twists" are optional.
Json diagramToJson(const TangleDiagram& d);
TangleDiagram diagramFromJson(const Json& j);

/// Parses JSON text, reporting syntax errors as ParseError with the byte
/// offset.
Json parseJsonText(const std::string& text);
TangleDiagram loadDiagram(const std::string& path);
void saveDiagram(const TangleDiagram& d, const std::string& path);

/// A PD crossing: edge labels counterclockwise, starting at the incoming
/// under-strand.
using PDCrossing = std::array<int, 4>;

/// Parses "[(a,b,c,d),...]", "PD[X[a,b,c,d],...]" or a JSON list of
/// quadruples.
std::vector<PDCrossing> parsePD(const std::string& text);
std::string formatPD(const std::vector<PDCrossing>& pd);

/// Converts a PD code to a closed oriented slice word by a greedy sweep.
/// Throws ContractViolation for codes that are not planar link diagrams.
TangleDiagram fromPD(const std::vector<PDCrossing>& pd);
/// PD code of a closed oriented diagram; every component must have a
/// crossing. Labels run 0.. along each component in traversal order.
std::vector<PDCrossing> toPD(const TangleDiagram& d);

}  // namespace skein
