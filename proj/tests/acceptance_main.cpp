// Acceptance gate for the whole library: ten behavioural criteria, one
// PASS/FAIL line each. Exit status = number of failed criteria.
#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qg/fixtures.hpp"
#include "qg/lax.hpp"
#include "qg/repro.hpp"
#include "qg/solitons.hpp"
#include "qg/solver.hpp"
#include "support/elimination.hpp"

using namespace qg;

namespace {

std::vector<std::string> g_notes;
bool g_ok = true;

#define REQ(cond, msg)                      \
  do {                                      \
    if (!(cond)) {                          \
      g_ok = false;                         \
      g_notes.push_back(msg);               \
      if (g_notes.size() > 8) return;       \
    }                                       \
  } while (0)

std::string fmt(const char* what, const Rat& got, const Rat& want) {
  std::ostringstream o;
  o << what << ": got " << rat_str(got) << ", want " << rat_str(want);
  return o.str();
}

std::vector<Rat> rnd_data(const Path& p, RatRng& rng) {
  std::vector<Rat> d;
  for (size_t i = 0; i < p.size(); i++) d.push_back(rng.next());
  return d;
}

bool residuals_zero(const Quadgraph& g, const StripSet& ss, EqKind k,
                    const std::map<Vid, Rat>& sol) {
  for (Fid f = 0; f < (Fid)g.faces.size(); f++)
    if (face_residual_sol(g, ss, k, sol, f) != 0) return false;
  return true;
}

Quadgraph lattice_with_params(int w, int h) {
  Quadgraph g = gen_square_lattice(w, h);
  StripSet ss = trace_strips(g);
  std::vector<Rat> cols, rows;
  for (int i = 0; i < w; i++) cols.push_back(rat(i + 2));
  for (int j = 0; j < h; j++) rows.push_back(rat(w + j + 2));
  set_lattice_params(g, ss, w, h, cols, rows);
  return g;
}

// --- 1: consistency around the cube ------------------------------------------

void c1_consistency() {
  RatRng rng(101);
  int done = 0, redraws = 0;
  while (done < 1000) {
    REQ(redraws < 200, "too many degenerate draws");
    Rat v = rng.next(), v1 = rng.next(), v2 = rng.next(), v3 = rng.next();
    Rat a1 = rng.next(), a2 = rng.next(), a3 = rng.next();
    try {
      Rat r0 = compute_v123(EqKind::DKdV, v, v1, v2, v3, a1, a2, a3, 0);
      Rat r1 = compute_v123(EqKind::DKdV, v, v1, v2, v3, a1, a2, a3, 1);
      Rat r2 = compute_v123(EqKind::DKdV, v, v1, v2, v3, a1, a2, a3, 2);
      Rat cf = dkdv_v123_closed(v1, v2, v3, a1, a2, a3);
      REQ(r0 == r1 && r1 == r2, "closure orders disagree");
      REQ(r0 == cf, fmt("closed form", cf, r0));
      for (int s = 1; s <= 10; s++) {
        try {
          Rat rs = compute_v123<Rat>(EqKind::DKdV, v + rat(s), v1, v2, v3, a1, a2, a3, 0);
          REQ(rs == r0, "corner moved with the base value");
        } catch (const Error&) {
          // shifted base hit a degenerate quad; the identity is about generic data
        }
      }
      done++;
    } catch (const Error&) {
      redraws++;
    }
  }

  REQ(compute_v123(EqKind::DKdV, rat(0), rat(1), rat(2), rat(4), rat(1), rat(2), rat(3), 0) ==
          rat(-2),
      "reference cube corner");
  REQ(dkdv_v123_closed(rat(1), rat(2), rat(4), rat(1), rat(2), rat(3)) == rat(-2),
      "reference closed form");

  REQ(check_3d_consistency(EqKind::DKdV), "lattice KdV must be consistent");
  REQ(check_3d_consistency(EqKind::Wave), "wave closure orders must agree");
  REQ(!check_3d_consistency(EqKind::NonConsistentDemo), "demo equation must fail");

  // the wave corner is not independent of the base value
  Rat w0 = compute_v123(EqKind::Wave, rat(0), rat(1), rat(2), rat(4), rat(1), rat(2), rat(3), 0);
  Rat w1 = compute_v123(EqKind::Wave, rat(1), rat(1), rat(2), rat(4), rat(1), rat(2), rat(3), 0);
  REQ(w0 - w1 == rat(2), "wave corner must shift with the base value");
}

// --- 2: classification --------------------------------------------------------

void c2_classifier() {
  Quadgraph g4 = fig4_graph();
  StripSet s4 = trace_strips(g4);
  REQ(classify_ivp(g4, s4, fig4_path_a()).verdict == Verdict::Correct, "corner path verdict");
  REQ(classify_ivp(g4, s4, fig4_path_b()).verdict == Verdict::Correct, "staircase verdict");

  Quadgraph g8 = fig8_graph();
  StripSet s8 = trace_strips(g8);
  REQ(classify_ivp(g8, s8, fig8_path('a')).verdict == Verdict::Overdetermined,
      "long path must overdetermine");
  REQ(classify_ivp(g8, s8, fig8_path('b')).verdict == Verdict::Underdetermined,
      "short path must underdetermine");
  REQ(classify_ivp(g8, s8, fig8_path('c')).verdict == Verdict::Correct,
      "balanced path must be correct");

  Quadgraph g10 = fig10_graph();
  StripSet s10 = trace_strips(g10);
  REQ(classify_ivp(g10, s10, fig10_path()).verdict == Verdict::Both,
      "comb path must be over- and underdetermined at once");

  // four disjoint closed strips: no connected path can cross each exactly once
  Quadgraph g13 = fig13_graph();
  StripSet s13 = trace_strips(g13);
  std::mt19937_64 eng(99);
  for (int i = 0; i < 20; i++) {
    Path walk = sample_walk(g13, eng, 25);
    REQ(classify_ivp(g13, s13, walk).verdict != Verdict::Correct,
        "a sampled path classified correct on the ring complex");
  }
}

// --- 3: exact propagation -----------------------------------------------------

void c3_solver() {
  RatRng rng(103);
  for (int w = 1; w <= 5; w++)
    for (int h = 1; h <= 5; h++) {
      Quadgraph g = lattice_with_params(w, h);
      StripSet ss = trace_strips(g);
      Path p = lattice_path(w, {{0, h}, {0, 0}, {w, 0}});
      PropagateResult r = propagate(g, ss, EqKind::DKdV, p, rnd_data(p, rng));
      REQ(r.complete, "corner problem did not close");
      REQ(residuals_zero(g, ss, EqKind::DKdV, r.val), "nonzero residual on a face");
    }

  // closure order must not matter
  Quadgraph g = lattice_with_params(4, 4);
  StripSet ss = trace_strips(g);
  Path p = lattice_path(4, {{0, 4}, {0, 0}, {4, 0}});
  std::vector<Rat> data = rnd_data(p, rng);
  PropagateResult ref = propagate(g, ss, EqKind::DKdV, p, data);
  for (int i = 0; i < 20; i++) {
    std::mt19937_64 order(7000 + i);
    PropagateResult r = propagate(g, ss, EqKind::DKdV, p, data, true, true, &order);
    REQ(r.complete && r.val == ref.val, "closure order changed the solution");
  }

  // independent symbolic elimination over Q(t)
  for (int size = 1; size <= 4; size++) {
    std::vector<Rat> cols, rows;
    for (int i = 0; i < size; i++) cols.push_back(rat(i + 2));
    for (int j = 0; j < size; j++) rows.push_back(rat(size + j + 2));
    Path sp = lattice_path(size, {{0, size}, {0, 0}, {size, 0}});
    std::vector<std::pair<Rat, Rat>> affine;
    for (size_t i = 0; i < sp.size(); i++) affine.push_back({rng.next(), rng.next()});
    Rat t0 = rng.next_nonzero();
    std::vector<Rat> d;
    for (auto& [a, b] : affine) d.push_back(a + b * t0);
    Quadgraph gl = gen_square_lattice(size, size);
    StripSet sl = trace_strips(gl);
    set_lattice_params(gl, sl, size, size, cols, rows);
    PropagateResult r = propagate(gl, sl, EqKind::DKdV, sp, d);
    REQ(r.complete, "oracle comparison lattice did not close");
    auto sym = qgtest::eliminate_dkdv_lattice(size, size, affine, cols, rows);
    for (const auto& [vid, fn] : sym)
      REQ(qgtest::rf_eval(fn, t0) == r.val.at(vid), "solver disagrees with elimination");
  }
}

// --- 4: hypercube immersion ---------------------------------------------------

void c4_hypercube() {
  Quadgraph g = fig4_graph();
  StripSet ss = trace_strips(g);
  Path p = fig4_path_a();
  CubeImmersion imm = hypercube_immersion(g, ss, p);
  REQ(imm.N == (int)ss.strips.size(), "bit count != strip count");
  REQ(imm.N == (int)p.size() - 1, "bit count != path length");
  REQ((int)imm.prefixes.size() == imm.N + 1, "prefix count");
  for (size_t i = 0; i < p.size(); i++)
    REQ(imm.prefixes[i] == imm.coord.at(p[i]), "prefixes must follow the path corners");
  REQ(imm.coord.at(p.front()) == 0, "path start must map to the origin corner");

  // independence of the spanning order: rebuild coordinates by random flood
  for (int seed = 0; seed < 10; seed++) {
    std::mt19937_64 eng(400 + seed);
    std::map<Vid, std::uint64_t> rec;
    rec[p.front()] = 0;
    std::vector<Vid> frontier = {p.front()};
    while (!frontier.empty()) {
      size_t pick = eng() % frontier.size();
      Vid v = frontier[pick];
      frontier.erase(frontier.begin() + pick);
      for (Eid e = 0; e < (Eid)g.edges.size(); e++) {
        if (g.edges[e].a != v && g.edges[e].b != v) continue;
        Vid u = g.edges[e].a == v ? g.edges[e].b : g.edges[e].a;
        std::uint64_t want = rec.at(v) ^ (1ull << imm.strip_dir[ss.edge_strip[e]]);
        auto [it, fresh] = rec.emplace(u, want);
        if (fresh)
          frontier.push_back(u);
        else
          REQ(it->second == want, "flood order changed a corner coordinate");
      }
    }
    REQ(rec == imm.coord, "random flood disagrees with the immersion");
  }

  // faces land on two-dimensional cube faces
  for (const Face& f : g.faces) {
    std::uint64_t c0 = imm.coord.at(f.t[0]), c1 = imm.coord.at(f.t[1]),
                  c2 = imm.coord.at(f.t[2]), c3 = imm.coord.at(f.t[3]);
    REQ((c0 ^ c1 ^ c2 ^ c3) == 0, "face corners do not close up");
    REQ(std::popcount(c0 ^ c1) == 1 && std::popcount(c1 ^ c2) == 1, "face edge spans != 1 bit");
    REQ((c0 ^ c1) != (c1 ^ c2), "face collapsed onto one bit");
  }

  // the cube route must reproduce direct propagation where greedy closure works
  RatRng rng(104);
  DefectGraph d7 = fig7();
  StripSet s7 = trace_strips(d7.g);
  Path pb = fig7_path_b();
  std::vector<Rat> data = rnd_data(pb, rng);
  PropagateResult direct = propagate(d7.g, s7, EqKind::DKdV, pb, data);
  std::map<Vid, Rat> cube = solve_via_cube(d7.g, s7, EqKind::DKdV, pb, data);
  REQ(direct.complete, "defect problem did not close");
  REQ(cube == direct.val, "cube solution differs from direct propagation");
}

// --- 5: transform and surgery -------------------------------------------------

void c5_backlund() {
  RatRng rng(105);
  Quadgraph g = lattice_with_params(4, 4);
  StripSet ss = trace_strips(g);
  Path p = lattice_path(4, {{0, 4}, {0, 0}, {4, 0}});
  std::vector<Rat> data = rnd_data(p, rng);
  PropagateResult r = propagate(g, ss, EqKind::DKdV, p, data);
  REQ(r.complete, "base solution did not close");

  Rat lambda = rat(1, 3), w0 = rat(1, 2);
  std::map<Vid, Rat> w = backlund_transform(g, ss, EqKind::DKdV, r.val, lambda, {{0, w0}});
  REQ(residuals_zero(g, ss, EqKind::DKdV, w), "transformed field violates a face");

  // chaining the transform along any monotone route gives the tree value
  Rat target = w.at(lattice_vid(4, 4, 4));
  for (int t = 0; t < 10; t++) {
    std::vector<int> moves = {0, 0, 0, 0, 1, 1, 1, 1};
    std::shuffle(moves.begin(), moves.end(), std::mt19937_64(500 + t));
    Path route = {lattice_vid(4, 0, 0)};
    int m = 0, n = 0;
    for (int mv : moves) {
      (mv == 0 ? m : n)++;
      route.push_back(lattice_vid(4, m, n));
    }
    Rat got = bt_value_along_path(g, ss, EqKind::DKdV, r.val, lambda, route, w0);
    REQ(got == target, fmt("route-chained transform", got, target));
  }

  std::map<Vid, Rat> back = backlund_inverse(g, ss, EqKind::DKdV, w, lambda, {{0, r.val.at(0)}});
  REQ(back == r.val, "inverse transform lost the original field");

  // erasing a strip and re-inserting it is the identity on solutions
  for (int strip : {0, 2, 5}) {
    EraseResult er = erase_strip(g, ss, EqKind::DKdV, r.val, strip);
    REQ(er.memo.reconstructible, "erase memo not reconstructible");
    StripSet gss = trace_strips(er.g);
    REQ(residuals_zero(er.g, gss, EqKind::DKdV, er.sol), "glued solution violates a face");
    auto [g2, sol2] = insert_strip(EqKind::DKdV, er.memo, er.sol);
    REQ(g2.faces.size() == g.faces.size(), "face count changed across the round trip");
    REQ(sol2 == r.val, "round trip changed the solution");
  }
}

// --- 6: transition matrices ---------------------------------------------------

void c6_lax() {
  RatRng rng(106);
  for (int i = 0; i < 50; i++) {
    Rat vi = rng.next(), vj = rng.next(), a = rng.next();
    PolyMat2 L = lax_edge_matrix(vi, vj, a);
    REQ(poly_eq(pm_det(L), poly_linear(a)), "det of the edge matrix");
    REQ(pm_is_scalar(pm_mul(lax_edge_matrix(vj, vi, a), L), Poly{{-a, rat(1)}}),
        "reversed edge is not the adjugate inverse");
  }

  Quadgraph g = lattice_with_params(5, 5);
  StripSet ss = trace_strips(g);
  Path p1 = lattice_path(5, {{0, 5}, {0, 0}, {5, 0}});
  PropagateResult r = propagate(g, ss, EqKind::DKdV, p1, rnd_data(p1, rng));
  REQ(r.complete, "host lattice did not close");

  // closed walks: product collapses to the predicted scalar polynomial
  std::mt19937_64 eng(606);
  auto monotone = [&](int x0, int y0, int x1, int y1) {
    std::vector<int> moves(x1 - x0, 0);
    moves.insert(moves.end(), y1 - y0, 1);
    std::shuffle(moves.begin(), moves.end(), eng);
    Path q = {lattice_vid(5, x0, y0)};
    int m = x0, n = y0;
    for (int mv : moves) {
      (mv == 0 ? m : n)++;
      q.push_back(lattice_vid(5, m, n));
    }
    return q;
  };
  for (int t = 0; t < 50; t++) {
    int x0 = (int)(eng() % 5), y0 = (int)(eng() % 5);
    int x1 = x0 + 1 + (int)(eng() % (5 - x0)), y1 = y0 + 1 + (int)(eng() % (5 - y0));
    Path up = monotone(x0, y0, x1, y1), down = monotone(x0, y0, x1, y1);
    Path walk = up;
    for (size_t i = down.size() - 1; i-- > 0;) walk.push_back(down[i]);
    PolyMat2 M = path_product(g, ss, EqKind::DKdV, r.val, walk);
    REQ(pm_is_scalar(M, closed_walk_scalar(g, ss, walk)), "closed walk product not scalar");
  }

  // refactoring the west+south product along north+east returns those values
  Path p2 = lattice_path(5, {{0, 5}, {5, 5}, {5, 0}});
  PolyMat2 M = path_product(g, ss, EqKind::DKdV, r.val, p1);
  std::vector<Rat> alphas;
  for (size_t i = 0; i + 1 < p2.size(); i++)
    alphas.push_back(edge_param(g, ss, g.eid(p2[i], p2[i + 1])));
  Refactor re = refactorize(M, r.val.at(p2[0]), alphas);
  REQ(re.values.size() == p2.size(), "refactorization length");
  for (size_t i = 0; i < p2.size(); i++)
    REQ(re.values[i] == r.val.at(p2[i]), "refactorization missed a boundary value");

  // engineered failure: a scalar product has no usable kernel
  Rat a = rat(5);
  PolyMat2 bad = pm_mul(lax_edge_matrix(rat(1), rat(0), a), lax_edge_matrix(rat(0), rat(1), a));
  bool caught = false;
  try {
    refactorize(bad, rat(0), {a, a});
  } catch (const Error& e) {
    caught = (e.code == Err::RankDrop);
  }
  REQ(caught, "vanishing matrix must be reported as a rank problem");
}

// --- 7: weak defects ----------------------------------------------------------

void c7_weak_defects() {
  RatRng rng(107);
  int runs = 0;
  for (int round = 0; round < 20; round++) {
    struct Case {
      DefectGraph d;
      Path p;
    };
    std::vector<Case> cases;
    cases.push_back({fig6(), fig6_path_a()});
    cases.push_back({fig6(), fig6_path_b()});
    cases.push_back({fig7(), fig7_path_a()});
    cases.push_back({fig7(), fig7_path_b()});
    cases.push_back({diamond_defect(), diamond_path()});
    for (Case& c : cases) {
      DefectRun run = defect_experiment(c.d, EqKind::DKdV, c.p, rnd_data(c.p, rng));
      REQ(run.defect.complete && run.plain.complete, "defect experiment did not close");
      REQ(run.affected.empty(), "a weak defect changed an outside value");
      runs++;
    }
  }
  REQ(runs >= 100, "not enough randomized runs");

  for (auto maker : {fig6, fig7, diamond_defect}) {
    DefectGraph d = maker();
    Path p1 = lattice_path(d.w, {{0, d.h}, {0, 0}, {d.w, 0}});
    WeakLaxReport rep = weak_defect_lax_check(d, EqKind::DKdV, rnd_data(p1, rng));
    REQ(rep.matches_plain, "transition-matrix check failed on a weak defect");
  }

  // the sheared defect is rejected, and really does leak
  DefectGraph d5 = fig5();
  Path p5 = fig5_path_a();
  bool refused = false;
  try {
    weak_defect_lax_check(d5, EqKind::DKdV, rnd_data(p5, rng));
  } catch (const Error& e) {
    refused = (e.code == Err::NotWeak);
  }
  REQ(refused, "non-weak defect must be refused");
  DefectRun leak = defect_experiment(d5, EqKind::DKdV, p5, rnd_data(p5, rng));
  REQ(!leak.affected.empty(), "the sheared defect should change outside values");
}

// --- 8: wave confinement ------------------------------------------------------

void c8_wave_confinement() {
  DefectGraph d = fig22();
  StripSet ss = trace_strips(d.g);
  Path p = fig22_path();
  std::set<Vid> region = strips_through_region(d.g, ss, d.defect_faces);

  // defect-free wave field in closed form
  RatRng rng(108);
  {
    Quadgraph host = plain_host(d);
    StripSet hss = trace_strips(host);
    PropagateResult r = propagate(host, hss, EqKind::Wave, p, rnd_data(p, rng));
    REQ(r.complete, "plain wave problem did not close");
    for (int m = 0; m <= d.w; m++)
      for (int n = 0; n <= d.h; n++)
        REQ(r.val.at(lattice_vid(d.w, m, n)) ==
                r.val.at(lattice_vid(d.w, m, 0)) + r.val.at(lattice_vid(d.w, 0, n)) -
                    r.val.at(lattice_vid(d.w, 0, 0)),
            "wave closed form");
  }

  // impulse responses stay inside the strips through the defect
  for (int m = 1; m <= 3; m++) {
    std::vector<Rat> data(p.size(), rat(0));
    for (size_t i = 0; i < p.size(); i++)
      if (p[i] == lattice_vid(d.w, m, 0)) data[i] = rat(1);
    DefectRun run = defect_experiment(d, EqKind::Wave, p, data);
    REQ(run.defect.complete, "impulse run did not close");
    REQ(!run.affected.empty(), "impulse response should differ behind the defect");
    for (Vid v : run.affected) REQ(region.count(v) > 0, "impulse leaked outside the strips");
  }

  for (int t = 0; t < 10; t++) {
    DefectRun run = defect_experiment(d, EqKind::Wave, p, rnd_data(p, rng));
    for (Vid v : run.affected) REQ(region.count(v) > 0, "random run leaked outside the strips");
  }
}

// --- 9: kink fields -----------------------------------------------------------

void c9_solitons() {
  REQ(kink_residual_max(fig9_kink(), 0, 50, 0, 50) < 1e-10, "single kink residual");
  REQ(multikink_lattice_residual_max(figbend_kink(30, 30), 0, 30, 0, 30) < 1e-9,
      "bended kink residual");
  REQ(multikink_graph_residual_max(fig16_kink(3), fig16_section(3).g) < 1e-9,
      "kink residual on the rational section");
  REQ(multikink_graph_residual_max(fig16_kink(3), fig17_section(3).g) < 1e-9,
      "kink residual on the irrational section");
  REQ(multikink_graph_residual_max(quadrants_kink(3, -3), gen_zd_quadrants3(3)) < 1e-9,
      "kink residual on three quadrant sheets");
  REQ(multikink_graph_residual_max(quadrants_kink(3, 0), gen_zd_quadrants6(3)) < 1e-9,
      "kink residual on six quadrant sheets");
  REQ(two_kink_residual_max(two_kink_demo(), -5, 6, -5, 6) < 1e-9, "two-kink residual");

  StraightKink s;
  s.p = 0.7;
  REQ(u_equation_residual_max(s, -10, 10, -10, 10) < 1e-8, "u-field equation residual");

  StraightKink base, up, dn;
  double h = 1e-5;
  up.x += h;
  dn.x -= h;
  double fd = (kink_v(up, 3, 2) - kink_v(dn, 3, 2)) / (2 * h);
  REQ(std::abs(fd - kink_dvdx(base, 3, 2)) < 1e-9, "analytic derivative vs finite differences");
}

// --- 10: vertex-face balance --------------------------------------------------

void c10_balance() {
  auto ok = [](const Quadgraph& g) {
    Balance b = vertex_balance(g);
    return b.identity && b.required == b.Vb / 2 + 1;
  };
  for (int w = 1; w <= 20; w++)
    for (int h = 1; h <= 20; h++)
      REQ(ok(gen_square_lattice(w, h)), "balance identity failed on a lattice");

  REQ(ok(fig4_graph()), "balance on the plain block");
  REQ(ok(fig5().g), "balance on the sheared defect");
  REQ(ok(fig6().g), "balance on the lens defect");
  REQ(ok(fig7().g), "balance on the double lens");
  REQ(ok(fig8_graph()), "balance on the L-shaped block");
  REQ(ok(fig10_graph()), "balance on the comb");
  REQ(ok(fig11_graph()), "balance on the crossing-strip hook");
  REQ(ok(fig11ext_graph()), "balance on the extended hook");
  REQ(ok(split_self_intersecting_strips(fig11_graph(), EqKind::DKdV).g),
      "balance after splitting");
  REQ(ok(fig13_graph()), "balance on the ring complex");
  REQ(ok(fig22().g), "balance on the wave defect");
  REQ(ok(diamond_defect().g), "balance on the diamond defect");
  REQ(ok(cube_defect().g), "balance on the ring defect");

  for (int R = 1; R <= 5; R++) {
    REQ(ok(fig16_section(R).g), "balance on a rational section");
    REQ(ok(fig17_section(R).g), "balance on an irrational section");
    REQ(ok(gen_zd_quadrants3(R)), "balance on three sheets");
    REQ(ok(gen_zd_quadrants6(R)), "balance on six sheets");
  }
}

int run(int num, const char* title, void (*fn)()) {
  g_notes.clear();
  g_ok = true;
  try {
    fn();
  } catch (const Error& e) {
    g_ok = false;
    g_notes.push_back(std::string("unexpected error: ") + e.what());
  } catch (const std::exception& e) {
    g_ok = false;
    g_notes.push_back(std::string("unexpected exception: ") + e.what());
  }
  std::cout << (g_ok ? "[PASS] " : "[FAIL] ") << num << ". " << title << "\n";
  for (const std::string& n : g_notes) std::cout << "         - " << n << "\n";
  return g_ok ? 0 : 1;
}

}  // namespace

int main() {
  int failed = 0;
  failed += run(1, "consistency around the cube", c1_consistency);
  failed += run(2, "initial value classification by strip indices", c2_classifier);
  failed += run(3, "exact propagation from correct data", c3_solver);
  failed += run(4, "hypercube immersion of correct problems", c4_hypercube);
  failed += run(5, "darboux transform and strip surgery", c5_backlund);
  failed += run(6, "transition matrices and refactorization", c6_lax);
  failed += run(7, "weak defects are invisible outside", c7_weak_defects);
  failed += run(8, "wave defects confine the response", c8_wave_confinement);
  failed += run(9, "kink fields solve the lattice equations", c9_solitons);
  failed += run(10, "vertex-face balance identity", c10_balance);
  if (failed == 0)
    std::cout << "all criteria passed\n";
  else
    std::cout << failed << " criteria failed\n";
  return failed;
}
