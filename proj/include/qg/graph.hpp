#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qg/error.hpp"
#include "qg/rational.hpp"

namespace qg {

using Vid = int;  // vertex id (sparse, stable across operations)
using Eid = int;  // edge index into Quadgraph::edges
using Fid = int;  // face index into Quadgraph::faces

struct VertexInfo {
  double x = 0, y = 0;  // drawing coordinates; advisory only
  bool has_xy = false;
  std::vector<int> z;   // lattice coordinates where the vertex has them
};

// One quadrilateral, stored as the cyclic corner tuple (t0,t1,t2,t3).
// Side edges are e_i = (t_i, t_{i+1 mod 4}); opposite pairs are
// pair0 = {e0,e2} and pair1 = {e1,e3}; diagonals {t0,t2} and {t1,t3}.
struct Face {
  std::array<Vid, 4> t;
};

struct Edge {
  Vid a, b;  // normalized a < b
};

// One face crossed by a strip: entered through `entry`, left through `exit`
// (the two edges of the same opposite pair). For the first face of an open
// strip `entry` is its boundary end edge, likewise `exit` for the last.
struct StripPass {
  Fid face;
  int pair;  // 0 or 1
  Eid entry;
  Eid exit;
};

struct Strip {
  std::vector<StripPass> passes;
  bool closed = false;
  // transversal edges in crossing order: every pass's entry, plus the final
  // exit when the strip is open. Each edge of the graph shows up in exactly
  // one strip's list, exactly once.
  std::vector<Eid> tedges;
  bool self_crossing = false;  // both pairs of some face belong to this strip
  bool self_tangent = false;   // some lateral (side) edge met twice

  std::vector<Eid> lateral_edges(const struct Quadgraph& g) const;
};

struct StripSet {
  std::vector<Strip> strips;                    // sorted by min transversal eid
  std::vector<int> edge_strip;                  // eid -> strip index
  std::vector<std::array<int, 2>> face_strips;  // fid -> strip per pair
  bool any_self_crossing = false;
};

struct Balance {
  long V = 0, E = 0, F = 0, Vb = 0;
  long required = 0;   // initial vertices a correct IVP needs: Vb/2 + 1
  bool identity = false;  // F == V - Vb/2 - 1
};

struct Quadgraph {
  std::map<Vid, VertexInfo> verts;
  std::vector<Face> faces;

  // parameter per strip, keyed by strip index in trace_strips(*this) order
  std::map<int, Rat> strip_params;

  // derived incidence data, filled by finalize()
  std::vector<Edge> edges;  // sorted by (a,b); index = Eid
  std::map<std::pair<Vid, Vid>, Eid> edge_ids;
  std::vector<std::array<Eid, 4>> face_edges;
  std::vector<std::array<Fid, 2>> edge_faces;  // -1 = none; [0] filled first

  bool empty() const { return faces.empty(); }

  Eid eid(Vid a, Vid b) const {
    if (a > b) std::swap(a, b);
    auto it = edge_ids.find({a, b});
    return it == edge_ids.end() ? -1 : it->second;
  }
  bool is_boundary_edge(Eid e) const { return edge_faces[e][1] < 0; }
  Fid other_face(Eid e, Fid f) const {
    return edge_faces[e][0] == f ? edge_faces[e][1] : edge_faces[e][0];
  }
  // position of edge e in face f's side list (0..3), -1 if absent
  int edge_pos_in_face(Fid f, Eid e) const {
    for (int i = 0; i < 4; i++)
      if (face_edges[f][i] == e) return i;
    return -1;
  }
};

// Validates and indexes: quad faces with 4 distinct corners, every edge in at
// most two faces, one connected component, disk topology (Euler characteristic
// 1, single boundary cycle, no pinch vertices), even boundary length.
Quadgraph build_quadgraph(std::map<Vid, VertexInfo> verts, std::vector<Face> faces);

// Re-derives incidence structure for already-validated face/vertex data.
void finalize(Quadgraph& g);

Balance vertex_balance(const Quadgraph& g);

// Deterministic strip decomposition. Every (face, pair) flag belongs to
// exactly one pass of one strip; strips are canonically oriented and sorted.
StripSet trace_strips(const Quadgraph& g);

// parameter of the strip transversal to edge e; throws MissingParam
Rat edge_param(const Quadgraph& g, const StripSet& ss, Eid e);

// Initial-data support: a path is a vertex sequence along existing edges.
using Path = std::vector<Vid>;

void check_path(const Quadgraph& g, const Path& p);         // edges exist
bool path_is_simple(const Path& p);                          // no repeat vertex

}  // namespace qg
