#include "qg/repro.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "qg/fixtures.hpp"
#include "qg/lax.hpp"
#include "qg/solitons.hpp"

namespace qg {

Json balance_json(const Balance& b) {
  Json j;
  j["V"] = b.V;
  j["E"] = b.E;
  j["F"] = b.F;
  j["boundary_vertices"] = b.Vb;
  j["required_data"] = b.required;
  j["identity"] = b.identity;
  return j;
}

Json classification_json(const Classification& c) {
  Json j;
  j["verdict"] = verdict_name(c.verdict);
  j["index"] = c.index;
  j["over_strips"] = c.over_strips;
  j["under_strips"] = c.under_strips;
  return j;
}

std::vector<Rat> seeded_path_data(const Path& p, RatRng& rng) {
  std::vector<Rat> d;
  d.reserve(p.size());
  for (size_t i = 0; i < p.size(); i++) d.push_back(rng.next());
  return d;
}

Path sample_walk(const Quadgraph& g, std::mt19937_64& eng, int steps) {
  std::vector<Vid> vids;
  for (const auto& kv : g.verts) vids.push_back(kv.first);
  std::map<Vid, std::vector<Vid>> adj;
  for (const Edge& e : g.edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::uniform_int_distribution<size_t> start(0, vids.size() - 1);
  Path p = {vids[start(eng)]};
  for (int i = 0; i < steps; i++) {
    const auto& nb = adj[p.back()];
    std::uniform_int_distribution<size_t> pick(0, nb.size() - 1);
    Vid next = nb[pick(eng)];
    if (p.size() >= 2 && next == p[p.size() - 2] && nb.size() > 1) {
      next = nb[pick(eng)];  // discourage immediate backtracking
      if (next == p[p.size() - 2]) continue;
    }
    p.push_back(next);
  }
  return p;
}

namespace {

bool residuals_zero(const Quadgraph& g, const StripSet& ss, EqKind k,
                    const std::map<Vid, Rat>& sol) {
  for (Fid f = 0; f < (Fid)g.faces.size(); f++)
    if (face_residual_sol(g, ss, k, sol, f) != 0) return false;
  return true;
}

Json classify_or_error(const Quadgraph& g, const StripSet& ss, const Path& p) {
  try {
    return classification_json(classify_ivp(g, ss, p));
  } catch (const Error& e) {
    Json j;
    j["error"] = err_name(e.code);
    return j;
  }
}

Json solve_summary(const Quadgraph& g, const StripSet& ss, EqKind k, const Path& p,
                   RatRng& rng) {
  Json j;
  PropagateResult r = propagate(g, ss, k, p, seeded_path_data(p, rng));
  j["complete"] = r.complete;
  j["used_cube"] = r.used_cube;
  j["residuals_zero"] = r.complete && residuals_zero(g, ss, k, r.val);
  return j;
}

Json census(const Quadgraph& g, const StripSet& ss) {
  Json j;
  j["balance"] = balance_json(vertex_balance(g));
  j["strips"] = (int)ss.strips.size();
  int closed = 0, self_crossing = 0, self_tangent = 0;
  for (const Strip& s : ss.strips) {
    closed += s.closed;
    self_crossing += s.self_crossing;
    self_tangent += s.self_tangent;
  }
  j["closed_strips"] = closed;
  j["self_crossing_strips"] = self_crossing;
  j["self_tangent_strips"] = self_tangent;
  return j;
}

Json vids_json(const std::vector<Vid>& v) {
  Json j = Json::array();
  for (Vid x : v) j.push_back(x);
  return j;
}

Json wave_delta(const DefectGraph& d, const Path& p, Vid unit_at) {
  std::vector<Rat> data(p.size(), rat(0));
  for (size_t i = 0; i < p.size(); i++)
    if (p[i] == unit_at) data[i] = rat(1);
  DefectRun run = defect_experiment(d, EqKind::Wave, p, data);
  StripSet ss = trace_strips(d.g);
  std::set<Vid> region = strips_through_region(d.g, ss, d.defect_faces);
  Json j;
  j["affected"] = vids_json(run.affected);
  bool inside = true;
  for (Vid v : run.affected) inside = inside && region.count(v) > 0;
  j["confined_to_region"] = inside;
  j["region_size"] = (int)region.size();
  return j;
}

}  // namespace

Json repro_report(const std::string& name, std::uint64_t seed) {
  RatRng rng(seed);
  Json j;
  j["fixture"] = name;
  j["seed"] = seed;

  if (name == "fig4") {
    Quadgraph g = fig4_graph();
    StripSet ss = trace_strips(g);
    j["census"] = census(g, ss);
    j["corner_path"] = classify_or_error(g, ss, fig4_path_a());
    j["staircase_path"] = classify_or_error(g, ss, fig4_path_b());
    j["solve_corner"] = solve_summary(g, ss, EqKind::DKdV, fig4_path_a(), rng);
    j["solve_staircase"] = solve_summary(g, ss, EqKind::DKdV, fig4_path_b(), rng);
  } else if (name == "fig5") {
    DefectGraph d = fig5();
    StripSet ss = trace_strips(d.g);
    j["census"] = census(d.g, ss);
    WeakCheck wc = is_weak_defect(d, ss);
    j["weak"] = wc.weak;
    j["weak_witness_strip"] = wc.witness_strip;
    j["west_south"] = classify_or_error(d.g, ss, fig5_path_a());
    j["south_east"] = classify_or_error(d.g, ss, fig5_path_b());
    j["solve_west_south"] = solve_summary(d.g, ss, EqKind::DKdV, fig5_path_a(), rng);
    try {
      weak_defect_lax_check(d, EqKind::DKdV, seeded_path_data(fig5_path_a(), rng));
      j["lax_check"] = "accepted";
    } catch (const Error& e) {
      j["lax_check"] = err_name(e.code);
    }
  } else if (name == "fig6") {
    DefectGraph d = fig6();
    StripSet ss = trace_strips(d.g);
    j["census"] = census(d.g, ss);
    j["weak"] = is_weak_defect(d, ss).weak;
    j["west_south"] = classify_or_error(d.g, ss, fig6_path_a());
    j["south_east"] = classify_or_error(d.g, ss, fig6_path_b());
    j["solve_west_south"] = solve_summary(d.g, ss, EqKind::DKdV, fig6_path_a(), rng);
    j["solve_south_east"] = solve_summary(d.g, ss, EqKind::DKdV, fig6_path_b(), rng);
    // the two lens vertices copy the opposite cell corners
    PropagateResult r =
        propagate(d.g, ss, EqKind::DKdV, fig6_path_a(), seeded_path_data(fig6_path_a(), rng));
    j["lens_copies_ne"] = r.val.at(100) == r.val.at(lattice_vid(3, 2, 2));
    j["lens_copies_sw"] = r.val.at(101) == r.val.at(lattice_vid(3, 1, 1));
  } else if (name == "fig7") {
    DefectGraph d = fig7();
    StripSet ss = trace_strips(d.g);
    j["census"] = census(d.g, ss);
    j["weak"] = is_weak_defect(d, ss).weak;
    j["west_south"] = classify_or_error(d.g, ss, fig7_path_a());
    j["south_east"] = classify_or_error(d.g, ss, fig7_path_b());
    j["solve_west_south"] = solve_summary(d.g, ss, EqKind::DKdV, fig7_path_a(), rng);
    j["solve_south_east"] = solve_summary(d.g, ss, EqKind::DKdV, fig7_path_b(), rng);
  } else if (name == "fig8") {
    Quadgraph g = fig8_graph();
    StripSet ss = trace_strips(g);
    j["census"] = census(g, ss);
    j["west_south"] = classify_or_error(g, ss, fig8_path('a'));
    j["east_north"] = classify_or_error(g, ss, fig8_path('b'));
    j["south_east"] = classify_or_error(g, ss, fig8_path('c'));
    j["solve_south_east"] = solve_summary(g, ss, EqKind::DKdV, fig8_path('c'), rng);
  } else if (name == "fig9") {
    StraightKink s = fig9_kink();
    j["residual_50x50"] = kink_residual_max(s, 0, 50, 0, 50);
    StraightKink frozen;  // xi = 0 reference point values
    j["v_10"] = kink_v(frozen, 1, 0);
    j["v_01"] = kink_v(frozen, 0, 1);
    j["v_11"] = kink_v(frozen, 1, 1);
    TwoKink t = two_kink_demo();
    j["two_kink_residual_11x11"] = two_kink_residual_max(t, -5, 6, -5, 6);
    j["u_residual_20x20"] = u_equation_residual_max(frozen, -10, 10, -10, 10);
    StraightKink hi = frozen, lo = frozen;
    const double h = 1e-5;
    hi.x += h;
    lo.x -= h;
    double fd = (kink_v(hi, 3, 2) - kink_v(lo, 3, 2)) / (2 * h);
    j["dvdx_fd_error"] = std::abs(fd - kink_dvdx(frozen, 3, 2));
  } else if (name == "fig10") {
    Quadgraph g = fig10_graph();
    StripSet ss = trace_strips(g);
    j["census"] = census(g, ss);
    j["south_row"] = classify_or_error(g, ss, fig10_path());
  } else if (name == "fig11") {
    Quadgraph g = fig11_graph();
    StripSet ss = trace_strips(g);
    j["census"] = census(g, ss);
    j["hook_path"] = classify_or_error(g, ss, fig11_path());
    SplitResult sr = split_self_intersecting_strips(g, EqKind::DKdV);
    Json ev = Json::array();
    for (const SplitEvent& e : sr.events) {
      Json je;
      je["face"] = e.face;
      je["kept"] = e.kept;
      je["removed"] = e.removed;
      je["dropped_isolated"] = vids_json(e.dropped_isolated);
      je["strips_before"] = e.strips_before;
      je["strips_after"] = e.strips_after;
      ev.push_back(je);
    }
    j["split_events"] = ev;
    StripSet ss2 = trace_strips(sr.g);
    j["after_split"] = census(sr.g, ss2);
    j["after_split_path"] = classify_or_error(sr.g, ss2, fig11_path());
  } else if (name == "fig12") {
    SplitResult sr = split_self_intersecting_strips(fig11_graph(), EqKind::DKdV);
    StripSet ss = trace_strips(sr.g);
    j["census"] = census(sr.g, ss);
    j["hook_path"] = classify_or_error(sr.g, ss, fig11_path());
    j["solve_hook"] = solve_summary(sr.g, ss, EqKind::DKdV, fig11_path(), rng);
  } else if (name == "fig13") {
    Quadgraph g = fig13_graph();
    StripSet ss = trace_strips(g);
    j["census"] = census(g, ss);
    int correct = 0;
    Json verdicts = Json::array();
    for (int i = 0; i < 20; i++) {
      Path p = sample_walk(g, rng.eng, 25);
      Classification c = classify_ivp(g, ss, p);
      verdicts.push_back(verdict_name(c.verdict));
      correct += c.verdict == Verdict::Correct;
    }
    j["sampled_verdicts"] = verdicts;
    j["none_correct"] = correct == 0;
  } else if (name == "fig16" || name == "fig17") {
    ZdSection sec = name == "fig16" ? fig16_section(3) : fig17_section(3);
    StripSet ss = trace_strips(sec.g);
    j["census"] = census(sec.g, ss);
    j["perturbed"] = sec.perturbed;
    MultiKink mk = fig16_kink(3);
    j["kink_residual"] = multikink_graph_residual_max(mk, sec.g);
  } else if (name == "fig18" || name == "fig20") {
    Quadgraph g = name == "fig18" ? gen_zd_quadrants3(3) : gen_zd_quadrants6(3);
    StripSet ss = trace_strips(g);
    j["census"] = census(g, ss);
    MultiKink mk = quadrants_kink(3, name == "fig18" ? -3.0 : 0.0);
    j["kink_residual"] = multikink_graph_residual_max(mk, g);
  } else if (name == "fig22" || name == "fig23") {
    DefectGraph d = fig22();
    StripSet ss = trace_strips(d.g);
    j["census"] = census(d.g, ss);
    j["weak"] = is_weak_defect(d, ss).weak;
    j["classification"] = classify_or_error(d.g, ss, fig22_path());
    j["delta_1"] = wave_delta(d, fig22_path(), lattice_vid(5, 1, 0));
    j["delta_2"] = wave_delta(d, fig22_path(), lattice_vid(5, 2, 0));
    j["delta_3"] = wave_delta(d, fig22_path(), lattice_vid(5, 3, 0));
  } else if (name == "figbend") {
    MultiKink mk = figbend_kink(30, 30);
    j["kink_residual_30x30"] = multikink_lattice_residual_max(mk, 0, 30, 0, 30);
  } else {
    throw Error(Err::BadInput, "unknown fixture: " + name);
  }
  return j;
}

}  // namespace qg
