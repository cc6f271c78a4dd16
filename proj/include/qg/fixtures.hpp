#pragma once

#include <string>
#include <vector>

#include "qg/generators.hpp"
#include "qg/graph.hpp"
#include "qg/solitons.hpp"

namespace qg {

// small catalogue of hand-built complexes and parameter bundles used by the
// command line tool, the acceptance suite and the unit tests

Quadgraph fig4_graph();  // 7x4 lattice
Path fig4_path_a();      // west+south corner
Path fig4_path_b();      // staircase

DefectGraph fig5();  // one cell sheared into two faces; not weak
Path fig5_path_a();
Path fig5_path_b();

DefectGraph fig6();  // lens: one cell split into three faces, tangent strip
Path fig6_path_a();
Path fig6_path_b();

DefectGraph fig7();  // wall permutation defect, weak
Path fig7_path_a();
Path fig7_path_b();

Quadgraph fig8_graph();  // mixed cell sizes with a bending strip
Path fig8_path(char which);  // 'a' west+south, 'b' east+north, 'c' south+east

Quadgraph fig10_graph();  // teeth comb
Path fig10_path();        // full south row

Quadgraph fig11_graph();  // hook with a self-crossing strip
Path fig11_path();
Quadgraph fig11ext_graph();  // same with one face attached on the north edge

Quadgraph fig13_graph();  // hexagon-splitting patch with closed strips

DefectGraph diamond_defect();  // 2x2 block redrawn around a diamond, weak
Path diamond_path();

DefectGraph cube_defect();  // square-in-square cell with a closed ring strip
DefectGraph fig22();        // defect host for the wave experiments
Path fig22_path();

StraightKink fig9_kink();
MultiKink figbend_kink(int m_layers, int n_layers);
MultiKink fig16_kink(int R);
MultiKink quadrants_kink(int R, double xi);
TwoKink two_kink_demo();

ZdSection fig16_section(int R);  // plane normal (1,1,1), offset 1/2
ZdSection fig17_section(int R);  // real normal (1, sqrt 2, sqrt 3)

std::vector<std::string> fixture_names();

}  // namespace qg
