#pragma once

#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "qg/graph.hpp"

namespace qg {

// w*h cells; vertex (m,n) with m in [0,w], n in [0,h]
inline Vid lattice_vid(int w, int m, int n) { return n * (w + 1) + m; }

Quadgraph gen_square_lattice(int w, int h);

// parameters per strip: col_params[i] -> strip crossing ((i,0),(i+1,0)),
// row_params[j] -> strip crossing ((0,j),(0,j+1))
void set_lattice_params(Quadgraph& g, const StripSet& ss, int w, int h,
                        const std::vector<Rat>& col_params,
                        const std::vector<Rat>& row_params);

// path along grid lines through the given lattice waypoints
Path lattice_path(int w, std::vector<std::pair<int, int>> waypoints);

// --- defects -------------------------------------------------------------

// replace the cells of [x0,x1]x[y0,y1] (lattice units) by custom faces
struct DefectSpec {
  int x0, y0, x1, y1;
  std::map<Vid, VertexInfo> new_verts;  // interior vertices, fresh ids
  std::vector<Face> new_faces;          // may reference host wall vertices
  std::vector<Rat> extra_params;        // for strips that inherit nothing
};

struct StripInheritance {
  int strip;
  std::optional<Rat> param;
  bool conflict = false;       // host candidates disagreed
  bool fresh = false;          // took an extra_param
  std::vector<Rat> candidates;
};

struct DefectGraph {
  Quadgraph g;
  int w = 0, h = 0;
  int rx0 = 0, ry0 = 0, rx1 = 0, ry1 = 0;
  std::vector<Rat> col_params, row_params;
  std::vector<StripInheritance> correspondence;
  std::vector<Fid> defect_faces;  // the replacement faces inside the rectangle
};

DefectGraph insert_defect(int w, int h, const std::vector<Rat>& col_params,
                          const std::vector<Rat>& row_params, const DefectSpec& spec);

// the undisturbed host lattice with the same parameters
Quadgraph plain_host(const DefectGraph& d);

struct WeakCheck {
  bool weak = true;
  int witness_strip = -1;
  std::string reason;
};

// weak = every strip meeting the defect rectangle walls crosses straight
// through: in on one wall, out on the opposite one (order may permute)
WeakCheck is_weak_defect(const DefectGraph& d, const StripSet& ss);

// --- Z^d subcomplexes ------------------------------------------------------

struct ZdSection {
  Quadgraph g;
  bool perturbed = false;  // offset was nudged off lattice points
  Rat offset_used;
  double offset_used_real = 0;
};

// keep a 2-face iff the affine form <normal,z>-offset takes both signs on its
// corners; exact rational normals
ZdSection gen_zd_plane_section(const std::vector<Rat>& normal, const Rat& offset, int R);
// same with floating normals (quasiperiodic sections)
ZdSection gen_zd_plane_section_real(const std::vector<double>& normal, double offset, int R);

// three quadrant sheets {(+,+,0),(+,0,+),(0,+,+)} in Z^3, coords in [0,R]
Quadgraph gen_zd_quadrants3(int R);
// six sheets {(+,-,0),(-,+,0),(+,0,-),(-,0,+),(0,+,-),(0,-,+)}
Quadgraph gen_zd_quadrants6(int R);

}  // namespace qg
