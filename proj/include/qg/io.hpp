#pragma once

#include <map>
#include <string>

#include "json.hpp"
#include "qg/graph.hpp"

namespace qg {

using Json = nlohmann::ordered_json;

Json graph_to_json(const Quadgraph& g);
Quadgraph graph_from_json(const Json& j);  // re-traces strips to validate parameters

Json path_to_json(const Path& p);
Path path_from_json(const Json& j);

Json values_to_json(const std::map<Vid, Rat>& m);
std::map<Vid, Rat> values_from_json(const Json& j);

std::string field_csv(const Quadgraph& g, const std::map<Vid, Rat>& val,
                      const std::map<Vid, std::string>& provenance);
// vertex,x,y,v,u rows for sampled soliton fields
struct SolitonSample {
  Vid vertex;
  double x, y, v, u;
};
std::string soliton_csv(const std::vector<SolitonSample>& rows);

std::string dump_json(const Json& j);

}  // namespace qg
