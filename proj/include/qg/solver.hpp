#pragma once

#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "qg/cauchy.hpp"
#include "qg/equations.hpp"
#include "qg/generators.hpp"
#include "qg/graph.hpp"

namespace qg {

struct PropagateResult {
  std::map<Vid, Rat> val;
  bool complete = false;
  bool used_cube = false;
  std::vector<Fid> unsolved_faces;
  std::vector<Vid> unknown_verts;
};

// greedy closure: any face with three known corners determines the fourth;
// when it stalls on a correct problem, finish through the cube immersion
PropagateResult propagate(const Quadgraph& g, const StripSet& ss, EqKind k, const Path& p,
                          const std::vector<Rat>& data, bool allow_cube = true,
                          bool verify = true, std::mt19937_64* order_rng = nullptr);

// same closure from an arbitrary set of known values (no cube fallback)
PropagateResult propagate_from_values(const Quadgraph& g, const StripSet& ss, EqKind k,
                                      std::map<Vid, Rat> known, bool verify = true,
                                      std::mt19937_64* order_rng = nullptr);

// --- strip surgery on solutions ---------------------------------------------

struct EraseMemo {
  std::map<Vid, VertexInfo> orig_verts;
  std::vector<Face> orig_faces;
  std::map<int, Rat> orig_params;
  int strip_id = -1;
  Rat alpha;                               // parameter of the erased strip
  std::vector<std::vector<Vid>> classes;   // vertex pairs/chains identified by the gluing
  std::map<Vid, Vid> rename;               // class member -> representative in the glued graph
  std::set<Vid> transformed;               // far-side vertices (carry the shifted field)
  std::vector<std::pair<Vid, Rat>> seeds;  // one original value per far-side piece
  Vid keep = -1;
  bool reconstructible = true;
};

struct EraseResult {
  Quadgraph g;
  std::map<Vid, Rat> sol;
  EraseMemo memo;
};

// remove a strip and glue its two borders; values on the far side of the cut
// become the shifted field (parameter = the strip's own), so the glued data
// still solve every remaining face
EraseResult erase_strip(const Quadgraph& g, const StripSet& ss, EqKind k,
                        const std::map<Vid, Rat>& sol, int strip_id, Vid keep = -1);

// exact inverse of erase_strip given its memo and the current glued solution
std::pair<Quadgraph, std::map<Vid, Rat>> insert_strip(EqKind k, const EraseMemo& memo,
                                                      const std::map<Vid, Rat>& glued_sol);

// --- defect experiments -------------------------------------------------------

struct DefectRun {
  Classification cls;
  PropagateResult defect, plain;
  std::vector<Vid> affected;  // surviving host vertices whose value changed
};

DefectRun defect_experiment(const DefectGraph& d, EqKind k, const Path& p,
                            const std::vector<Rat>& data);

// vertices of every strip that passes through the given faces
std::set<Vid> strips_through_region(const Quadgraph& g, const StripSet& ss,
                                    const std::vector<Fid>& faces);

}  // namespace qg
