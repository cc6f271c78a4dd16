#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "qg/fixtures.hpp"
#include "qg/lax.hpp"
#include "qg/solver.hpp"

using namespace qg;

namespace {

std::vector<Rat> rnd_data(const Path& p, RatRng& rng) {
  std::vector<Rat> d;
  for (size_t i = 0; i < p.size(); i++) d.push_back(rng.next());
  return d;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  Poly p{{rat(6), rat(-5), rat(1)}};  // (1-x)(6-... ) just a quadratic
  CHECK(poly_deg(p) == 2);
  CHECK(poly_eval(p, rat(2)) == rat(0));
  CHECK(poly_eval(p, rat(3)) == rat(0));
  bool exact = false;
  Poly q = poly_divide_linear(p, rat(2), exact);  // p = (2-x) q
  CHECK(exact);
  CHECK(poly_eq(poly_mul(Poly{{rat(2), rat(-1)}}, q), p));
  Poly bad{{rat(1), rat(1)}};
  poly_divide_linear(bad, rat(2), exact);
  CHECK(!exact);
  CHECK(poly_is_zero(poly_sub(p, p)));
  CHECK(poly_eq(poly_pow(poly_linear(rat(1)), 2), Poly{{rat(1), rat(-2), rat(1)}}));
}

TEST_CASE("edge matrix identities") {
  RatRng rng(17);
  for (int i = 0; i < 30; i++) {
    Rat vi = rng.next(), vj = rng.next(), a = rng.next();
    PolyMat2 L = lax_edge_matrix(vi, vj, a);
    CHECK(poly_eq(pm_det(L), poly_linear(a)));  // det = alpha - lambda
    PolyMat2 back = pm_mul(lax_edge_matrix(vj, vi, a), L);
    CHECK(pm_is_scalar(back, Poly{{-a, rat(1)}}));  // lambda - alpha
  }
}

TEST_CASE("path product multiplies later edges from the left") {
  Quadgraph g = gen_square_lattice(2, 1);
  StripSet ss = trace_strips(g);
  set_lattice_params(g, ss, 2, 1, {rat(5), rat(7)}, {rat(3)});
  std::map<Vid, Rat> sol = {{lattice_vid(2, 0, 0), rat(1)},
                            {lattice_vid(2, 1, 0), rat(4)},
                            {lattice_vid(2, 2, 0), rat(9)}};
  Path p = {lattice_vid(2, 0, 0), lattice_vid(2, 1, 0), lattice_vid(2, 2, 0)};
  PolyMat2 direct = path_product(g, ss, EqKind::DKdV, sol, p);
  PolyMat2 manual =
      pm_mul(lax_edge_matrix(rat(4), rat(9), rat(7)), lax_edge_matrix(rat(1), rat(4), rat(5)));
  CHECK(pm_eq(direct, manual));
}

TEST_CASE("closed walks collapse to the strip scalar") {
  Quadgraph g = gen_square_lattice(3, 3);
  StripSet ss = trace_strips(g);
  std::vector<Rat> cols = {rat(2), rat(3), rat(4)}, rows = {rat(5), rat(6), rat(7)};
  set_lattice_params(g, ss, 3, 3, cols, rows);
  Path p = lattice_path(3, {{0, 3}, {0, 0}, {3, 0}});
  RatRng rng(29);
  PropagateResult r = propagate(g, ss, EqKind::DKdV, p, rnd_data(p, rng));
  REQUIRE(r.complete);

  auto lv = [](int m, int n) { return lattice_vid(3, m, n); };
  Path cell = {lv(1, 1), lv(2, 1), lv(2, 2), lv(1, 2), lv(1, 1)};
  PolyMat2 M = path_product(g, ss, EqKind::DKdV, r.val, cell);
  Poly s = closed_walk_scalar(g, ss, cell);
  CHECK(poly_eq(s, poly_mul(Poly{{-cols[1], rat(1)}}, Poly{{-rows[1], rat(1)}})));
  CHECK(pm_is_scalar(M, s));

  Path ring = {lv(0, 0), lv(1, 0), lv(2, 0), lv(2, 1), lv(2, 2),
               lv(1, 2), lv(0, 2), lv(0, 1), lv(0, 0)};
  CHECK(pm_is_scalar(path_product(g, ss, EqKind::DKdV, r.val, ring),
                     closed_walk_scalar(g, ss, ring)));
}

TEST_CASE("refactorization recovers the opposite boundary") {
  // single cell, data 0/1/2, params 5/3; the missing corner is -2
  PolyMat2 M = pm_mul(lax_edge_matrix(rat(0), rat(1), rat(5)),
                      lax_edge_matrix(rat(2), rat(0), rat(3)));
  Refactor re = refactorize(M, rat(2), {rat(5), rat(3)});
  std::vector<Rat> expect = {rat(2), rat(-2), rat(1)};
  CHECK(re.values == expect);
}

TEST_CASE("refactorization failure modes") {
  Rat a = rat(5);
  // v-sequence 0,1,0 makes the two-edge product scalar: (lambda-a) I
  PolyMat2 M = pm_mul(lax_edge_matrix(rat(1), rat(0), a), lax_edge_matrix(rat(0), rat(1), a));
  CHECK(pm_is_scalar(M, Poly{{-a, rat(1)}}));
  bool vanished = false;
  try {
    refactorize(M, rat(0), {a, a});
  } catch (const Error& e) {
    vanished = true;
    CHECK(e.code == Err::RankDrop);  // matrix vanishes at the parameter
  }
  CHECK(vanished);

  bool nodrop = false;
  try {
    refactorize(M, rat(0), {rat(7), rat(7)});
  } catch (const Error& e) {
    nodrop = true;
    CHECK(e.code == Err::RankDrop);  // det stays nonzero off the spectrum
  }
  CHECK(nodrop);
}

TEST_CASE("weak defect transparency through the transition matrix") {
  RatRng rng(31);
  for (auto maker : {fig6, fig7, diamond_defect, cube_defect, fig22}) {
    DefectGraph d = maker();
    Path p1 = lattice_path(d.w, {{0, d.h}, {0, 0}, {d.w, 0}});
    WeakLaxReport rep = weak_defect_lax_check(d, EqKind::DKdV, rnd_data(p1, rng));
    CHECK(rep.matches_plain);
    CHECK(rep.recovered.size() == rep.p2.size());
  }

  DefectGraph d5 = fig5();
  Path p1 = lattice_path(d5.w, {{0, d5.h}, {0, 0}, {d5.w, 0}});
  bool refused = false;
  try {
    weak_defect_lax_check(d5, EqKind::DKdV, rnd_data(p1, rng));
  } catch (const Error& e) {
    refused = true;
    CHECK(e.code == Err::NotWeak);
  }
  CHECK(refused);
}
