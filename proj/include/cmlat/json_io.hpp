#ifndef CMLAT_JSON_IO_HPP
#define CMLAT_JSON_IO_HPP

#include <json.hpp>
#include <string>

#include "cmlat/graphlat.hpp"
#include "cmlat/labeling.hpp"
#include "cmlat/pd.hpp"

namespace cmlat {

using Json = nlohmann::json;

// {"vertices": N, "edges": [[i, j], ...]} with repeated pairs standing for
// multiplicity; a "schema" key is accepted and ignored on input.
WhiteGraph graph_from_json(const Json& j);
Json graph_to_json(const WhiteGraph& g);

// {"deleted": k, "matrix": [[...]]} for the form with vertex k removed.
Json goeritz_to_json(const WhiteGraph& g);

// A bare list of 4-tuples, or an object carrying it under "pd".
PDCode pd_from_json(const Json& j);

// Reads a whole file as either a white graph or a planar code, deciding by
// shape; planar codes are traced to their white graph.
WhiteGraph graph_from_file(const std::string& path, bool* nugatory = nullptr);

Json labeling_to_json(const VertexLabeling& lab);
Json spec_to_json(const ChangemakerLatticeSpec& spec);
Json ambient_to_json(const AmbientVector& x);

Json parse_json_file(const std::string& path);

}  // namespace cmlat

#endif
