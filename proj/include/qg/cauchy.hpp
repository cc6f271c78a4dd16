#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qg/equations.hpp"
#include "qg/graph.hpp"

namespace qg {

enum class Verdict { Correct, Overdetermined, Underdetermined, Both };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Correct: return "correct";
    case Verdict::Overdetermined: return "overdetermined";
    case Verdict::Underdetermined: return "underdetermined";
    case Verdict::Both: return "both";
  }
  return "?";
}

// crossings of the path with a strip: path edges that are transversal to it
int strip_path_index(const Strip& s, const Quadgraph& g, const Path& p);

struct Classification {
  Verdict verdict;
  std::vector<int> index;  // per strip
  std::vector<int> over_strips, under_strips;
};

// refuses on self-crossing strips (split them first)
Classification classify_ivp(const Quadgraph& g, const StripSet& ss, const Path& p);

// --- immersion into the N-cube ----------------------------------------------

struct CubeImmersion {
  int N = 0;                           // path length == strip count
  std::vector<int> strip_dir;          // strip index -> bit
  std::map<Vid, std::uint64_t> coord;  // vertex -> corner of {0,1}^N
  std::vector<std::uint64_t> prefixes; // masks along the path, size N+1
  std::vector<Rat> alpha;              // per bit
};

// needs a correct IVP on a simple path; each face spans exactly two bits
CubeImmersion hypercube_immersion(const Quadgraph& g, const StripSet& ss, const Path& p);

// solve the Cauchy problem through the cube: lazy corner evaluation, each value
// requested once, descending toward the staircase prefixes
std::map<Vid, Rat> solve_via_cube(const Quadgraph& g, const StripSet& ss, EqKind k,
                                  const Path& p, const std::vector<Rat>& data);
// raw corner evaluator (exposed for the path-independence checks)
Rat cube_corner_value(const CubeImmersion& imm, EqKind k, const std::vector<Rat>& data,
                      std::uint64_t mask, std::map<std::uint64_t, Rat>& memo);

// --- surgery on self-crossing strips ----------------------------------------

struct SplitEvent {
  Fid face;          // crossing face (index before this round's rewrite)
  Vid kept, removed; // identified diagonal, min id kept
  std::vector<Vid> dropped_isolated;
  int strips_before = 0, strips_after = 0;
};

struct SplitResult {
  Quadgraph g;
  std::vector<SplitEvent> events;
};

// repeatedly removes a crossing face and glues the forced diagonal; the flag
// selects the other diagonal instead. Needs an equation whose degenerate
// (a1 == a2) residual factors through the diagonals.
SplitResult split_self_intersecting_strips(const Quadgraph& g, EqKind k,
                                           bool other_diagonal = false);

}  // namespace qg
