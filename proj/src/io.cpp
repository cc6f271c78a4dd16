#include "qg/io.hpp"

#include <sstream>

namespace qg {

Json graph_to_json(const Quadgraph& g) {
  Json j;
  Json verts = Json::object();
  for (const auto& [v, info] : g.verts) {
    Json jv = Json::object();
    if (info.has_xy) jv["xy"] = {info.x, info.y};
    if (!info.z.empty()) jv["z"] = info.z;
    verts[std::to_string(v)] = jv;
  }
  j["vertices"] = verts;
  Json faces = Json::array();
  for (const Face& f : g.faces) faces.push_back({f.t[0], f.t[1], f.t[2], f.t[3]});
  j["faces"] = faces;
  Json params = Json::object();
  for (const auto& [s, a] : g.strip_params) params[std::to_string(s)] = rat_str(a);
  j["strip_params"] = params;
  return j;
}

Quadgraph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("faces"))
    throw Error(Err::BadInput, "graph json needs vertices and faces");
  std::map<Vid, VertexInfo> verts;
  for (const auto& [key, jv] : j.at("vertices").items()) {
    VertexInfo info;
    if (jv.contains("xy")) {
      info.has_xy = true;
      info.x = jv.at("xy").at(0).get<double>();
      info.y = jv.at("xy").at(1).get<double>();
    }
    if (jv.contains("z")) info.z = jv.at("z").get<std::vector<int>>();
    verts[std::stoi(key)] = info;
  }
  std::vector<Face> faces;
  for (const auto& jf : j.at("faces")) {
    if (jf.size() != 4) throw Error(Err::NonQuadFace, "face tuple must have four corners");
    faces.push_back({{jf.at(0).get<int>(), jf.at(1).get<int>(), jf.at(2).get<int>(),
                      jf.at(3).get<int>()}});
  }
  Quadgraph g = build_quadgraph(verts, faces);
  if (j.contains("strip_params")) {
    StripSet ss = trace_strips(g);
    for (const auto& [key, jp] : j.at("strip_params").items()) {
      int s = std::stoi(key);
      if (s < 0 || s >= (int)ss.strips.size())
        throw Error(Err::BadInput, "strip parameter key out of range: " + key);
      g.strip_params[s] = rat_parse(jp.get<std::string>());
    }
  }
  return g;
}

Json path_to_json(const Path& p) {
  Json j = Json::array();
  for (Vid v : p) j.push_back(v);
  return j;
}

Path path_from_json(const Json& j) {
  if (!j.is_array()) throw Error(Err::BadInput, "path json must be an array of vertex ids");
  Path p;
  for (const auto& jv : j) p.push_back(jv.get<int>());
  return p;
}

Json values_to_json(const std::map<Vid, Rat>& m) {
  Json j = Json::object();
  for (const auto& [v, x] : m) j[std::to_string(v)] = rat_str(x);
  return j;
}

std::map<Vid, Rat> values_from_json(const Json& j) {
  std::map<Vid, Rat> m;
  for (const auto& [key, jv] : j.items()) m[std::stoi(key)] = rat_parse(jv.get<std::string>());
  return m;
}

std::string field_csv(const Quadgraph& g, const std::map<Vid, Rat>& val,
                      const std::map<Vid, std::string>& provenance) {
  std::ostringstream out;
  out << "vertex,x,y,value,provenance\n";
  for (const auto& [v, info] : g.verts) {
    out << v << ',';
    if (info.has_xy)
      out << info.x << ',' << info.y;
    else
      out << ',';
    out << ',';
    auto it = val.find(v);
    if (it != val.end()) out << rat_str(it->second);
    out << ',';
    auto pt = provenance.find(v);
    if (pt != provenance.end()) out << pt->second;
    out << '\n';
  }
  return out.str();
}

std::string soliton_csv(const std::vector<SolitonSample>& rows) {
  std::ostringstream out;
  out << "vertex,x,y,v,u\n";
  out.precision(12);
  for (const SolitonSample& r : rows)
    out << r.vertex << ',' << r.x << ',' << r.y << ',' << r.v << ',' << r.u << '\n';
  return out.str();
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qg
