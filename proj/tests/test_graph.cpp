#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>

#include "doctest.h"
#include "qg/fixtures.hpp"
#include "qg/generators.hpp"
#include "qg/graph.hpp"

using namespace qg;

namespace {

VertexInfo vi(double x, double y) {
  VertexInfo v;
  v.x = x;
  v.y = y;
  v.has_xy = true;
  return v;
}

Quadgraph one_face() {
  std::map<Vid, VertexInfo> vs = {{1, vi(0, 0)}, {2, vi(1, 0)}, {3, vi(1, 1)}, {4, vi(0, 1)}};
  return build_quadgraph(std::move(vs), {{{1, 2, 3, 4}}});
}

size_t tedge_total(const StripSet& ss) {
  size_t n = 0;
  for (const Strip& s : ss.strips) n += s.tedges.size();
  return n;
}

}  // namespace

TEST_CASE("single face census") {
  Quadgraph g = one_face();
  Balance b = vertex_balance(g);
  CHECK(b.V == 4);
  CHECK(b.E == 4);
  CHECK(b.F == 1);
  CHECK(b.Vb == 4);
  CHECK(b.required == 3);
  CHECK(b.identity);
  StripSet ss = trace_strips(g);
  CHECK(ss.strips.size() == 2);
  for (const Strip& s : ss.strips) {
    CHECK(!s.closed);
    CHECK(s.passes.size() == 1);
    CHECK(s.tedges.size() == 2);
  }
  CHECK(tedge_total(ss) == (size_t)b.E);
}

TEST_CASE("square lattice census") {
  Quadgraph g = gen_square_lattice(3, 3);
  Balance b = vertex_balance(g);
  CHECK(b.V == 16);
  CHECK(b.E == 24);
  CHECK(b.F == 9);
  CHECK(b.Vb == 12);
  CHECK(b.required == 7);
  CHECK(b.identity);
  StripSet ss = trace_strips(g);
  CHECK(ss.strips.size() == 6);
  CHECK(tedge_total(ss) == 24);
  CHECK(!ss.any_self_crossing);

  Quadgraph g2 = gen_square_lattice(2, 5);
  CHECK(trace_strips(g2).strips.size() == 7);
  CHECK(vertex_balance(g2).identity);
}

TEST_CASE("empty graph is allowed") {
  Quadgraph g = build_quadgraph({}, {});
  CHECK(g.empty());
  Balance b = vertex_balance(g);
  CHECK(b.V == 0);
  CHECK(b.E == 0);
  CHECK(b.F == 0);
  CHECK(trace_strips(g).strips.empty());
}

TEST_CASE("bad complexes are rejected") {
  std::map<Vid, VertexInfo> vs = {{1, vi(0, 0)}, {2, vi(1, 0)}, {3, vi(1, 1)}, {4, vi(0, 1)}};
  try {
    build_quadgraph(vs, {{{1, 2, 3, 3}}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Err::NonQuadFace);
  }

  // three faces around one edge
  std::map<Vid, VertexInfo> vs2 = vs;
  vs2[5] = vi(2, 0);
  vs2[6] = vi(2, 1);
  vs2[7] = vi(0, 2);
  vs2[8] = vi(1, 2);
  try {
    build_quadgraph(vs2, {{{1, 2, 3, 4}}, {{2, 5, 6, 3}}, {{2, 3, 8, 7}}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Err::NonManifoldEdge);
  }

  // two squares joined at a single vertex: boundary pinches
  std::map<Vid, VertexInfo> vs3 = {{1, vi(0, 0)}, {2, vi(1, 0)}, {3, vi(1, 1)}, {4, vi(0, 1)},
                                   {5, vi(2, 1)}, {6, vi(3, 1)}, {7, vi(3, 2)}};
  try {
    build_quadgraph(vs3, {{{1, 2, 3, 4}}, {{3, 5, 6, 7}}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == Err::NotSimplyConnected);
  }

  // separate components
  std::map<Vid, VertexInfo> vs4 = {{1, vi(0, 0)}, {2, vi(1, 0)}, {3, vi(1, 1)}, {4, vi(0, 1)},
                                   {5, vi(4, 0)}, {6, vi(5, 0)}, {7, vi(5, 1)}, {8, vi(4, 1)}};
  try {
    build_quadgraph(vs4, {{{1, 2, 3, 4}}, {{5, 6, 7, 8}}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code != Err::Internal);  // disconnected or stray vertex, never silent
  }
}

TEST_CASE("strip parameters") {
  Quadgraph g = gen_square_lattice(2, 2);
  StripSet ss = trace_strips(g);
  CHECK_THROWS_AS((void)edge_param(g, ss, 0), Error);
  set_lattice_params(g, ss, 2, 2, {rat(3), rat(4)}, {rat(5), rat(6)});
  // bottom edge of the first column crosses the first column strip
  Eid e = g.eid(lattice_vid(2, 0, 0), lattice_vid(2, 1, 0));
  CHECK(edge_param(g, ss, e) == rat(3));
  Eid er = g.eid(lattice_vid(2, 0, 0), lattice_vid(2, 0, 1));
  CHECK(edge_param(g, ss, er) == rat(5));
}

TEST_CASE("paths") {
  Quadgraph g = gen_square_lattice(2, 2);
  Path good = lattice_path(2, {{0, 2}, {0, 0}, {2, 0}});
  check_path(g, good);
  CHECK(path_is_simple(good));
  Path bad = {lattice_vid(2, 0, 0), lattice_vid(2, 1, 1)};
  CHECK_THROWS_AS(check_path(g, bad), Error);
  Path loop = {0, 1, 0};
  CHECK(!path_is_simple(loop));
}

TEST_CASE("fig8 census") {
  Quadgraph g = fig8_graph();
  Balance b = vertex_balance(g);
  CHECK(b.V == 43);
  CHECK(b.E == 73);
  CHECK(b.F == 31);
  CHECK(b.Vb == 22);
  CHECK(b.identity);
  StripSet ss = trace_strips(g);
  CHECK(ss.strips.size() == 11);
  CHECK(tedge_total(ss) == 73);
  CHECK(!ss.any_self_crossing);
}

TEST_CASE("fig10 census") {
  Quadgraph g = fig10_graph();
  Balance b = vertex_balance(g);
  CHECK(b.V == 58);
  CHECK(b.E == 101);
  CHECK(b.F == 44);
  CHECK(b.identity);
  StripSet ss = trace_strips(g);
  CHECK(ss.strips.size() == 13);
  CHECK(tedge_total(ss) == 101);
}

TEST_CASE("fig13 census and closed strips") {
  Quadgraph g = fig13_graph();
  Balance b = vertex_balance(g);
  CHECK(b.V == 127);
  CHECK(b.E == 222);
  CHECK(b.F == 96);
  CHECK(b.Vb == 60);
  CHECK(b.identity);
  StripSet ss = trace_strips(g);
  CHECK(tedge_total(ss) == 222);
  int closed = 0;
  for (const Strip& s : ss.strips)
    if (s.closed) {
      closed++;
      CHECK(s.passes.size() == 12);
      CHECK(s.tedges.size() == 12);
    }
  CHECK(closed == 4);
}

TEST_CASE("fig11 self-crossing strip") {
  Quadgraph g = fig11_graph();
  Balance b = vertex_balance(g);
  CHECK(b.V == 10);
  CHECK(b.E == 15);
  CHECK(b.F == 6);
  StripSet ss = trace_strips(g);
  CHECK(ss.strips.size() == 3);
  CHECK(ss.any_self_crossing);
  int crossing = -1;
  for (size_t i = 0; i < ss.strips.size(); i++)
    if (ss.strips[i].self_crossing) crossing = (int)i;
  REQUIRE(crossing >= 0);
  const Strip& s = ss.strips[crossing];
  CHECK(!s.closed);
  CHECK(s.passes.size() == 6);
  CHECK(s.tedges.size() == 7);
  // both pairs of the degenerate face belong to this strip
  int dbl = 0;
  for (Fid f = 0; f < (Fid)g.faces.size(); f++)
    if (ss.face_strips[f][0] == crossing && ss.face_strips[f][1] == crossing) {
      dbl++;
      CHECK(f == 4);
    }
  CHECK(dbl == 1);
}

TEST_CASE("fig11 extension has four strips") {
  Quadgraph g = fig11ext_graph();
  StripSet ss = trace_strips(g);
  CHECK(ss.strips.size() == 4);
  CHECK(ss.any_self_crossing);
}

TEST_CASE("canonical strip order is stable") {
  Quadgraph a = fig8_graph();
  Quadgraph b = fig8_graph();
  StripSet sa = trace_strips(a);
  StripSet sb = trace_strips(b);
  REQUIRE(sa.strips.size() == sb.strips.size());
  for (size_t i = 0; i < sa.strips.size(); i++) {
    CHECK(sa.strips[i].tedges == sb.strips[i].tedges);
    CHECK(sa.strips[i].closed == sb.strips[i].closed);
  }
  CHECK(sa.edge_strip == sb.edge_strip);
}
