#pragma once

#include <memory>

#include "json.hpp"
#include "sfc/complex.hpp"
#include "sfc/decomp.hpp"
#include "sfc/graph.hpp"
#include "sfc/homology.hpp"

namespace sfc {

// Graphs: {"vertices":[...],"edges":[[u,v],...]} with an optional "labels"
// object keyed by stringified vertex id. Edges serialize as pairs when the
// ids are the default ones and as {"id","u","v"} objects after surgery.
nlohmann::json graph_to_json(const LabelledGraph& g);
LabelledGraph graph_from_json(const nlohmann::json& j);

// {"vertices":[...],"darts":[{"id","s","t"},...]}
nlohmann::json multidigraph_to_json(const MultiDigraph& g);
MultiDigraph multidigraph_from_json(const nlohmann::json& j);

// {"ground":[...],"facets":[[...],...]}; [] is the void complex and [[]]
// the empty one.
nlohmann::json complex_to_json(const Complex& k);
Complex complex_from_json(const nlohmann::json& j);

// {"betti":{"-1":1,...},"torsion":{"0":[2,...],...}}; torsion entries are
// numbers when they fit and decimal strings otherwise.
nlohmann::json homology_to_json(const HomologyProfile& h);
HomologyProfile homology_from_json(const nlohmann::json& j);

// {"tag":"void"|"empty"|"simplex"} or
// {"tag":"split","vertex":v,"link":{...},"del":{...}}
nlohmann::json cert_to_json(const VdCert& c);
std::shared_ptr<const VdCert> cert_from_json(const nlohmann::json& j);

}  // namespace sfc
