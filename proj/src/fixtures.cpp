#include "qg/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <utility>

namespace qg {

namespace {

VertexInfo at(double x, double y) {
  VertexInfo v;
  v.x = x;
  v.y = y;
  v.has_xy = true;
  return v;
}

VertexInfo at_z(int m, int n) {
  VertexInfo v = at(m, n);
  v.z = {m, n};
  return v;
}

// one distinct parameter per strip, small integers
void number_strips(Quadgraph& g) {
  StripSet ss = trace_strips(g);
  for (size_t i = 0; i < ss.strips.size(); i++) g.strip_params[(int)i] = rat((long)i + 2);
}

std::vector<Rat> rep(int n, long v) { return std::vector<Rat>((size_t)n, rat(v)); }

}  // namespace

// --- fig4: plain 7x4 lattice ------------------------------------------------

Quadgraph fig4_graph() {
  Quadgraph g = gen_square_lattice(7, 4);
  StripSet ss = trace_strips(g);
  std::vector<Rat> cols, rows;
  for (int i = 0; i < 7; i++) cols.push_back(rat(i + 2));
  for (int j = 0; j < 4; j++) rows.push_back(rat(j + 11));
  set_lattice_params(g, ss, 7, 4, cols, rows);
  return g;
}

Path fig4_path_a() { return lattice_path(7, {{0, 4}, {0, 0}, {7, 0}}); }

Path fig4_path_b() {
  return lattice_path(
      7, {{0, 4}, {0, 3}, {2, 3}, {2, 2}, {3, 2}, {3, 1}, {6, 1}, {6, 0}, {7, 0}});
}

// --- fig5: sheared cell, strips bend, not weak --------------------------------

DefectGraph fig5() {
  DefectSpec spec;
  spec.x0 = spec.y0 = 1;
  spec.x1 = spec.y1 = 2;
  const Vid w = 100;
  spec.new_verts[w] = at(1.5, 1.5);
  auto v = [](int m, int n) { return lattice_vid(3, m, n); };
  spec.new_faces.push_back({{v(1, 1), v(2, 1), w, v(1, 2)}});
  spec.new_faces.push_back({{v(2, 1), v(2, 2), v(1, 2), w}});
  return insert_defect(3, 3, rep(3, 3), rep(3, 1), spec);
}

Path fig5_path_a() { return lattice_path(3, {{0, 3}, {0, 0}, {3, 0}}); }
Path fig5_path_b() { return lattice_path(3, {{0, 0}, {3, 0}, {3, 3}}); }

// --- fig6: lens defect, self-tangent strip ------------------------------------

DefectGraph fig6() {
  DefectSpec spec;
  spec.x0 = spec.y0 = 1;
  spec.x1 = spec.y1 = 2;
  const Vid u = 100, w = 101;
  spec.new_verts[u] = at(1.35, 1.35);
  spec.new_verts[w] = at(1.65, 1.65);
  auto v = [](int m, int n) { return lattice_vid(3, m, n); };
  spec.new_faces.push_back({{v(1, 1), v(2, 1), u, v(1, 2)}});
  spec.new_faces.push_back({{v(2, 1), w, v(1, 2), u}});
  spec.new_faces.push_back({{v(2, 1), v(2, 2), v(1, 2), w}});
  return insert_defect(3, 3, rep(3, 3), rep(3, 1), spec);
}

Path fig6_path_a() { return fig5_path_a(); }
Path fig6_path_b() { return fig5_path_b(); }

// --- fig7: wall permutation defect ---------------------------------------------

DefectGraph fig7() {
  DefectSpec spec;
  spec.x0 = 1;
  spec.y0 = 1;
  spec.x1 = 4;
  spec.y1 = 2;
  const Vid p = 100, q = 101, r = 102, s = 103;
  spec.new_verts[p] = at(1.5, 1.65);
  spec.new_verts[q] = at(2.0, 1.65);
  spec.new_verts[r] = at(3.0, 1.35);
  spec.new_verts[s] = at(3.5, 1.35);
  auto v = [](int m, int n) { return lattice_vid(5, m, n); };
  const Vid A = v(1, 1), B = v(2, 1), C = v(3, 1), D = v(4, 1);
  const Vid E = v(1, 2), F = v(2, 2), G = v(3, 2), H = v(4, 2);
  spec.new_faces.push_back({{A, B, p, E}});
  spec.new_faces.push_back({{p, B, C, q}});
  spec.new_faces.push_back({{E, p, q, F}});
  spec.new_faces.push_back({{q, C, r, F}});
  spec.new_faces.push_back({{C, D, s, r}});
  spec.new_faces.push_back({{r, s, G, F}});
  spec.new_faces.push_back({{s, D, H, G}});
  return insert_defect(5, 3, rep(5, 3), rep(3, 1), spec);
}

Path fig7_path_a() { return lattice_path(5, {{0, 3}, {0, 0}, {5, 0}}); }
Path fig7_path_b() { return lattice_path(5, {{0, 0}, {5, 0}, {5, 3}}); }

// --- fig8: mixed cell sizes ------------------------------------------------------

namespace {

bool fig8_has(int x, int y) {
  if (x < 0 || x > 6 || y < 0 || y > 6) return false;
  if (y == 3 && x >= 4) return false;  // (4,3),(5,3),(6,3)
  if (x == 3 && y >= 4) return false;  // (3,4),(3,5),(3,6)
  return true;
}

Vid fig8_vid(int x, int y) { return y * 7 + x; }

}  // namespace

Quadgraph fig8_graph() {
  std::map<Vid, VertexInfo> vs;
  for (int y = 0; y <= 6; y++)
    for (int x = 0; x <= 6; x++)
      if (fig8_has(x, y)) vs[fig8_vid(x, y)] = at(x, y);

  // unit cells except where bigger faces sit
  const std::set<std::pair<int, int>> blocked = {
      {2, 3}, {3, 3}, {3, 2},          // the two sheared quads
      {4, 2}, {5, 2}, {4, 3}, {5, 3},  // the tall cells
      {2, 4}, {3, 4}, {2, 5}, {3, 5},  // the wide cells
  };
  std::vector<Face> fs;
  for (int y = 0; y < 6; y++)
    for (int x = 0; x < 6; x++) {
      if (blocked.count({x, y})) continue;
      if (!fig8_has(x, y) || !fig8_has(x + 1, y) || !fig8_has(x + 1, y + 1) ||
          !fig8_has(x, y + 1))
        continue;
      fs.push_back(
          {{fig8_vid(x, y), fig8_vid(x + 1, y), fig8_vid(x + 1, y + 1), fig8_vid(x, y + 1)}});
    }
  auto v = fig8_vid;
  fs.push_back({{v(2, 3), v(3, 3), v(4, 4), v(2, 4)}});
  fs.push_back({{v(3, 2), v(4, 2), v(4, 4), v(3, 3)}});
  fs.push_back({{v(4, 2), v(5, 2), v(5, 4), v(4, 4)}});
  fs.push_back({{v(5, 2), v(6, 2), v(6, 4), v(5, 4)}});
  fs.push_back({{v(2, 4), v(4, 4), v(4, 5), v(2, 5)}});
  fs.push_back({{v(2, 5), v(4, 5), v(4, 6), v(2, 6)}});

  Quadgraph g = build_quadgraph(std::move(vs), std::move(fs));
  number_strips(g);
  return g;
}

Path fig8_path(char which) {
  auto v = fig8_vid;
  Path west, south, east, north;
  for (int y = 6; y >= 0; y--) west.push_back(v(0, y));
  for (int x = 0; x <= 6; x++) south.push_back(v(x, 0));
  for (int y : {0, 1, 2, 4, 5, 6}) east.push_back(v(6, y));
  for (int x : {6, 5, 4, 2, 1, 0}) north.push_back(v(x, 6));
  auto join = [](Path a, const Path& b) {
    a.insert(a.end(), b.begin() + 1, b.end());
    return a;
  };
  switch (which) {
    case 'a':
      return join(west, south);
    case 'b':
      return join(east, north);
    case 'c': {
      Path r = south;
      r.insert(r.end(), east.begin() + 1, east.end());
      return r;
    }
    default:
      throw Error(Err::BadInput, "fig8 path must be a, b or c");
  }
}

// --- fig10: comb of teeth ----------------------------------------------------------

namespace {
Vid fig10_vid(int x, int y) { return x * 9 + y; }
}  // namespace

Quadgraph fig10_graph() {
  std::map<Vid, VertexInfo> vs;
  auto put = [&](int x, int y) { vs[fig10_vid(x, y)] = at(x, y); };
  for (int x : {0, 1, 2, 11, 12, 13})
    for (int y = 0; y <= 8; y += 2) put(x, y);
  for (int k = 0; k < 4; k++)
    for (int x : {3 + 2 * k, 4 + 2 * k}) {
      for (int y = 0; y <= 2 * k; y += 2) put(x, y);
      put(x, 1 + 2 * k);  // the tip of the tooth
    }

  std::vector<Face> fs;
  auto v = fig10_vid;
  auto cell = [&](int x0, int y0, int x1, int y1) {
    fs.push_back({{v(x0, y0), v(x1, y0), v(x1, y1), v(x0, y1)}});
  };
  // side blocks
  for (int x : {0, 1, 11, 12})
    for (int y = 0; y <= 6; y += 2) cell(x, y, x + 1, y + 2);
  // teeth
  for (int k = 0; k < 4; k++) {
    const int l = 3 + 2 * k, r = 4 + 2 * k, tip = 1 + 2 * k;
    fs.push_back({{v(2, 2 * k), v(l, 2 * k), v(l, tip), v(2, tip + 1)}});
    fs.push_back({{v(2, tip + 1), v(l, tip), v(r, tip), v(r + 1, tip + 1)}});
    fs.push_back({{v(r, 2 * k), v(r + 1, 2 * k), v(r + 1, tip + 1), v(r, tip)}});
    for (int y = 0; y < 2 * k; y += 2) cell(l, y, r, y + 2);  // channel below the tip
    fs.push_back({{v(l, 2 * k), v(r, 2 * k), v(r, tip), v(l, tip)}});
    for (int y = 0; y < 2 * k; y += 2) cell(r, y, r + 1, y + 2);  // right of the tooth
  }

  Quadgraph g = build_quadgraph(std::move(vs), std::move(fs));
  number_strips(g);
  return g;
}

Path fig10_path() {
  Path p;
  for (int x = 0; x <= 13; x++) p.push_back(fig10_vid(x, 0));
  return p;
}

// --- fig11: hook with self-crossing strip ---------------------------------------------

Quadgraph fig11_graph() {
  std::map<Vid, VertexInfo> vs;
  vs[1] = at(1, 1);
  vs[2] = at(2, 1);
  vs[3] = at(2, 2);
  vs[4] = at(1, 2);
  vs[5] = at(0, 2);
  vs[6] = at(0, 0);
  vs[7] = at(3, 0);
  vs[8] = at(3, 3);
  vs[9] = at(1, 3);
  vs[10] = at(0, 3);
  std::vector<Face> fs = {
      {{1, 2, 3, 4}}, {{6, 7, 2, 1}}, {{7, 8, 3, 2}},
      {{8, 9, 4, 3}}, {{9, 10, 5, 4}}, {{6, 1, 4, 5}},
  };
  Quadgraph g = build_quadgraph(std::move(vs), std::move(fs));
  StripSet ss = trace_strips(g);
  const long vals[] = {2, 5, 9};
  for (size_t i = 0; i < ss.strips.size(); i++)
    g.strip_params[(int)i] = rat(vals[i % 3]);
  return g;
}

Path fig11_path() { return {5, 4, 3, 2}; }

Quadgraph fig11ext_graph() {
  Quadgraph base = fig11_graph();
  std::map<Vid, VertexInfo> vs = base.verts;
  vs[11] = at(1, 4);
  vs[12] = at(0, 4);
  std::vector<Face> fs = base.faces;
  fs.push_back({{9, 10, 12, 11}});
  Quadgraph g = build_quadgraph(std::move(vs), std::move(fs));
  number_strips(g);
  return g;
}

// --- fig13: hexagons split into quads, closed strips ------------------------------------

Quadgraph fig13_graph() {
  using P = std::pair<int, int>;
  // hexagon corners, cyclic
  const P off[6] = {{4, -2}, {0, -4}, {-4, -2}, {-4, 2}, {0, 4}, {4, 2}};
  std::set<P> coords;
  std::vector<std::array<P, 13>> hexes;  // 6 corners, 6 midpoints, center
  for (int j = 0; j < 4; j++)
    for (int i = 0; i < 4; i++) {
      const int cx = 4 + 8 * i - 4 * j, cy = 4 + 6 * j;
      std::array<P, 13> h;
      h[12] = {cx, cy};
      for (int c = 0; c < 6; c++) h[c] = {cx + off[c].first, cy + off[c].second};
      for (int c = 0; c < 6; c++) {
        const P a = h[c], b = h[(c + 1) % 6];
        h[6 + c] = {(a.first + b.first) / 2, (a.second + b.second) / 2};
      }
      for (const P& p : h) coords.insert(p);
      hexes.push_back(h);
    }
  std::map<P, Vid> id;
  std::map<Vid, VertexInfo> vs;
  for (const P& p : coords) {
    const Vid n = (Vid)id.size();
    id[p] = n;
    vs[n] = at(p.first, p.second);
  }
  std::vector<Face> fs;
  for (const auto& h : hexes)
    for (int c = 0; c < 6; c++) {
      const P corner = h[c], next_mid = h[6 + c], prev_mid = h[6 + (c + 5) % 6];
      fs.push_back({{id[corner], id[next_mid], id[h[12]], id[prev_mid]}});
    }
  Quadgraph g = build_quadgraph(std::move(vs), std::move(fs));
  number_strips(g);
  return g;
}

// --- diamond: 2x2 block redrawn around a diamond -------------------------------------------

DefectGraph diamond_defect() {
  DefectSpec spec;
  spec.x0 = spec.y0 = 1;
  spec.x1 = spec.y1 = 3;
  const Vid dS = 100, dN = 101;
  spec.new_verts[dS] = at(2, 1.5);
  spec.new_verts[dN] = at(2, 2.5);
  auto v = [](int m, int n) { return lattice_vid(4, m, n); };
  spec.new_faces.push_back({{v(1, 1), v(2, 1), dS, v(1, 2)}});
  spec.new_faces.push_back({{v(2, 1), v(3, 1), v(3, 2), dS}});
  spec.new_faces.push_back({{v(1, 2), dN, v(2, 3), v(1, 3)}});
  spec.new_faces.push_back({{dN, v(3, 2), v(3, 3), v(2, 3)}});
  spec.new_faces.push_back({{v(1, 2), dS, v(3, 2), dN}});
  return insert_defect(4, 4, rep(4, 3), rep(4, 1), spec);
}

Path diamond_path() { return lattice_path(4, {{0, 4}, {0, 0}, {4, 0}}); }

// --- cube_defect: square-in-square cell with a ring strip -----------------------------------

DefectGraph cube_defect() {
  DefectSpec spec;
  spec.x0 = spec.y0 = 1;
  spec.x1 = spec.y1 = 2;
  const Vid iA = 100, iB = 101, iC = 102, iD = 103;
  spec.new_verts[iA] = at(1.25, 1.25);
  spec.new_verts[iB] = at(1.75, 1.25);
  spec.new_verts[iC] = at(1.75, 1.75);
  spec.new_verts[iD] = at(1.25, 1.75);
  auto v = [](int m, int n) { return lattice_vid(3, m, n); };
  const Vid A = v(1, 1), B = v(2, 1), C = v(2, 2), D = v(1, 2);
  spec.new_faces.push_back({{A, B, iB, iA}});
  spec.new_faces.push_back({{B, C, iC, iB}});
  spec.new_faces.push_back({{C, D, iD, iC}});
  spec.new_faces.push_back({{D, A, iA, iD}});
  spec.new_faces.push_back({{iA, iB, iC, iD}});
  spec.extra_params = {rat(7)};  // the closed ring inherits nothing
  return insert_defect(3, 3, rep(3, 3), rep(3, 1), spec);
}

// --- fig22: wave defect host -------------------------------------------------------------

DefectGraph fig22() {
  DefectSpec spec;
  spec.x0 = spec.y0 = 1;
  spec.x1 = 4;
  spec.y1 = 3;
  const Vid P1 = 100, P2 = 101, P3 = 102, P4 = 103;
  spec.new_verts[P1] = at(2.0, 1.5);
  spec.new_verts[P2] = at(3.0, 1.75);
  spec.new_verts[P3] = at(2.0, 2.25);
  spec.new_verts[P4] = at(3.0, 2.5);
  auto v = [](int m, int n) { return lattice_vid(5, m, n); };
  spec.new_faces.push_back({{v(1, 1), v(2, 1), P1, v(1, 2)}});
  spec.new_faces.push_back({{v(2, 1), v(3, 1), P2, P1}});
  spec.new_faces.push_back({{v(3, 1), v(4, 1), v(4, 2), P2}});
  spec.new_faces.push_back({{v(1, 2), P1, P2, P3}});
  spec.new_faces.push_back({{P3, P2, v(4, 2), P4}});
  spec.new_faces.push_back({{v(1, 2), P3, v(2, 3), v(1, 3)}});
  spec.new_faces.push_back({{P3, P4, v(3, 3), v(2, 3)}});
  spec.new_faces.push_back({{P4, v(4, 2), v(4, 3), v(3, 3)}});
  return insert_defect(5, 4, rep(5, 1), rep(4, 2), spec);
}

Path fig22_path() { return lattice_path(5, {{0, 4}, {0, 0}, {5, 0}}); }

// --- soliton parameter bundles ----------------------------------------------------------------

StraightKink fig9_kink() {
  StraightKink s;
  s.xi = -7.5;
  return s;
}

MultiKink figbend_kink(int m_layers, int n_layers) {
  MultiKink s;
  s.xi = -3;
  std::vector<double> ma, na;
  for (int m = 1; m <= m_layers; m++) ma.push_back(std::sqrt((double)m));
  for (int n = 1; n <= n_layers; n++) na.push_back(std::sqrt(2.0 * n));
  s.axes.push_back(make_axis_steps(ma, s.k, 0));
  s.axes.push_back(make_axis_steps(na, s.k, 0));
  return s;
}

MultiKink fig16_kink(int R) {
  MultiKink s;
  const double steps[3] = {0.5, 2.5, 3.0};
  for (double st : steps) s.axes.push_back(make_axis_const(st, s.k, -R - 1, R + 1));
  return s;
}

MultiKink quadrants_kink(int R, double xi) {
  MultiKink s;
  s.xi = xi;
  const double steps[3] = {1.0, 1.5, 2.0};
  for (double st : steps) s.axes.push_back(make_axis_const(st, s.k, -R - 1, R + 1));
  return s;
}

TwoKink two_kink_demo() {
  TwoKink s;
  s.phi1 = -1.0;
  s.phi2 = 0.4;
  return s;
}

ZdSection fig16_section(int R) {
  return gen_zd_plane_section({rat(1), rat(1), rat(1)}, rat(1, 2), R);
}

ZdSection fig17_section(int R) {
  return gen_zd_plane_section_real({1.0, std::sqrt(2.0), std::sqrt(3.0)}, 0.0, R);
}

std::vector<std::string> fixture_names() {
  return {"fig4",  "fig5",  "fig6",  "fig7",  "fig8",  "fig9",    "fig10",
          "fig11", "fig12", "fig13", "fig16", "fig17", "fig18",   "fig20",
          "fig22", "fig23", "figbend"};
}

}  // namespace qg
