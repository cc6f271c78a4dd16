#include "qg/solver.hpp"

#include <algorithm>
#include <cassert>

namespace qg {

namespace {

// face tuple t -> equation roles (v, v1, v2, v12) = (t0, t1, t3, t2)
constexpr int kRoleOfSlot[4] = {0, 1, 3, 2};

void greedy_closure(const Quadgraph& g, const StripSet& ss, EqKind k,
                    std::map<Vid, Rat>& known, std::mt19937_64* order_rng) {
  for (;;) {
    std::vector<Fid> ready;
    for (size_t f = 0; f < g.faces.size(); ++f) {
      int miss = 0;
      for (Vid t : g.faces[f].t)
        if (!known.count(t)) miss++;
      if (miss == 1) ready.push_back((Fid)f);
    }
    if (ready.empty()) return;
    Fid f = ready[0];
    if (order_rng) f = ready[(*order_rng)() % ready.size()];
    const Face& F = g.faces[f];
    int slot = -1;
    std::array<Rat, 4> role_vals{};
    for (int i = 0; i < 4; ++i) {
      if (!known.count(F.t[i]))
        slot = i;
      else
        role_vals[kRoleOfSlot[i]] = known.at(F.t[i]);
    }
    Rat a1 = edge_param(g, ss, g.face_edges[f][0]);
    Rat a2 = edge_param(g, ss, g.face_edges[f][1]);
    Solved<Rat> s = solve_corner<Rat>(k, kRoleOfSlot[slot], role_vals, a1, a2);
    if (!s.ok) throw Error(Err::Singular, "degenerate corner equation", (int)f);
    known.emplace(F.t[slot], s.value);
  }
}

void finish_result(const Quadgraph& g, const StripSet& ss, EqKind k, bool verify,
                   PropagateResult& r) {
  for (const auto& [v, info] : g.verts) {
    (void)info;
    if (!r.val.count(v)) r.unknown_verts.push_back(v);
  }
  for (size_t f = 0; f < g.faces.size(); ++f) {
    bool full = true;
    for (Vid t : g.faces[f].t)
      if (!r.val.count(t)) full = false;
    if (!full)
      r.unsolved_faces.push_back((Fid)f);
    else if (verify && face_residual_sol(g, ss, k, r.val, (Fid)f) != 0)
      throw Error(Err::BadInput, "initial data contradict a face equation", (int)f);
  }
  r.complete = r.unknown_verts.empty();
}

}  // namespace

PropagateResult propagate_from_values(const Quadgraph& g, const StripSet& ss, EqKind k,
                                      std::map<Vid, Rat> known, bool verify,
                                      std::mt19937_64* order_rng) {
  for (const auto& [v, x] : known) {
    (void)x;
    if (!g.verts.count(v)) throw Error(Err::BadInput, "seed value at unknown vertex");
  }
  greedy_closure(g, ss, k, known, order_rng);
  PropagateResult r;
  r.val = std::move(known);
  finish_result(g, ss, k, verify, r);
  return r;
}

PropagateResult propagate(const Quadgraph& g, const StripSet& ss, EqKind k, const Path& p,
                          const std::vector<Rat>& data, bool allow_cube, bool verify,
                          std::mt19937_64* order_rng) {
  check_path(g, p);
  if (data.size() != p.size()) throw Error(Err::BadInput, "data size does not match path");
  std::map<Vid, Rat> known;
  for (size_t i = 0; i < p.size(); ++i) {
    auto [it, fresh] = known.emplace(p[i], data[i]);
    if (!fresh && it->second != data[i])
      throw Error(Err::BadInput, "conflicting data at a repeated path vertex");
  }
  greedy_closure(g, ss, k, known, order_rng);

  PropagateResult r;
  r.val = std::move(known);
  if (r.val.size() < g.verts.size() && allow_cube && path_is_simple(p)) {
    Classification c = classify_ivp(g, ss, p);
    if (c.verdict == Verdict::Correct) {
      std::map<Vid, Rat> cube = solve_via_cube(g, ss, k, p, data);
      for (const auto& [v, x] : cube) {
        auto [it, fresh] = r.val.emplace(v, x);
        if (!fresh && it->second != x)
          throw Error(Err::Internal, "cube value disagrees with direct closure");
      }
      r.used_cube = true;
    }
  }
  finish_result(g, ss, k, verify, r);
  return r;
}

// --- erase / insert ------------------------------------------------------------

namespace {

struct UnionFind {
  std::map<int, int> up;
  int find(int x) {
    if (!up.count(x)) up[x] = x;
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  void unite(int a, int b) { up[find(a)] = find(b); }
};

// side labels for the borders of one strip: 0/1, tedge endpoints split across
std::map<Vid, int> strip_sides(const Quadgraph& g, const Strip& s) {
  std::map<Vid, int> side;
  auto put = [&](Vid v, int sd) {
    auto [it, fresh] = side.emplace(v, sd);
    if (!fresh && it->second != sd)
      throw Error(Err::Internal, "strip borders are not two-sided");
  };
  for (const StripPass& ps : s.passes) {
    const Face& F = g.faces[ps.face];
    int i = g.edge_pos_in_face(ps.face, ps.entry);
    put(F.t[i], 0);
    put(F.t[(i + 3) % 4], 0);
    put(F.t[(i + 1) % 4], 1);
    put(F.t[(i + 2) % 4], 1);
  }
  return side;
}

}  // namespace

EraseResult erase_strip(const Quadgraph& g, const StripSet& ss, EqKind k,
                        const std::map<Vid, Rat>& sol, int strip_id, Vid keep) {
  if (strip_id < 0 || strip_id >= (int)ss.strips.size())
    throw Error(Err::BadInput, "no such strip");
  const Strip& C = ss.strips[strip_id];
  if (C.self_crossing)
    throw Error(Err::SelfIntersectingStrip, "cannot erase a self-crossing strip", -1, strip_id);
  for (const auto& [v, info] : g.verts) {
    (void)info;
    if (!sol.count(v)) throw Error(Err::BadInput, "solution does not cover the graph");
  }

  EraseResult res;
  EraseMemo& memo = res.memo;
  memo.orig_verts = g.verts;
  memo.orig_faces = g.faces;
  memo.orig_params = g.strip_params;
  memo.strip_id = strip_id;
  memo.alpha = edge_param(g, ss, C.tedges[0]);

  std::set<Fid> cfaces;
  for (const StripPass& ps : C.passes) cfaces.insert(ps.face);
  std::map<Vid, int> side = strip_sides(g, C);

  // identification classes along the cut
  {
    UnionFind uf;
    for (Eid e : C.tedges) uf.unite(g.edges[e].a, g.edges[e].b);
    std::map<int, std::vector<Vid>> by_rep;
    for (const auto& [v, r] : uf.up) by_rep[uf.find(v)].push_back(v);
    for (auto& [r, members] : by_rep) {
      (void)r;
      std::sort(members.begin(), members.end());
      memo.classes.push_back(members);
    }
  }
  std::sort(memo.classes.begin(), memo.classes.end());

  std::vector<Fid> rf;
  for (size_t f = 0; f < g.faces.size(); ++f)
    if (!cfaces.count((Fid)f)) rf.push_back((Fid)f);

  std::set<Vid> rf_verts;
  for (Fid f : rf)
    for (Vid t : g.faces[f].t) rf_verts.insert(t);

  if (rf.empty()) {
    // the strip was the whole complex; terminal state, not invertible from here
    memo.reconstructible = false;
    memo.keep = -1;
    return res;
  }

  // far side = the side not holding the kept component
  memo.keep = (keep == -1) ? *rf_verts.begin() : keep;
  if (!rf_verts.count(memo.keep)) throw Error(Err::BadInput, "keep vertex vanishes with the strip");

  UnionFind comps;
  for (Fid f : rf) comps.find(f);
  for (size_t e = 0; e < g.edges.size(); ++e) {
    const auto& fl = g.edge_faces[e];
    if (fl[1] >= 0 && !cfaces.count(fl[0]) && !cfaces.count(fl[1])) comps.unite(fl[0], fl[1]);
  }
  int keep_comp = -1;
  for (Fid f : rf)
    if (keep_comp == -1)
      for (Vid t : g.faces[f].t)
        if (t == memo.keep) keep_comp = comps.find(f);
  int kept_side = -1;
  for (Fid f : rf) {
    if (comps.find(f) != keep_comp) continue;
    for (Vid t : g.faces[f].t) {
      auto it = side.find(t);
      if (it == side.end()) continue;
      if (kept_side == -1) kept_side = it->second;
      if (kept_side != it->second)
        throw Error(Err::Internal, "kept component touches both strip borders");
    }
  }
  if (kept_side == -1) throw Error(Err::Internal, "kept component does not border the strip");
  int far_side = 1 - kept_side;

  // far region: the far border plus every component living on that side
  memo.transformed.clear();
  for (const auto& [v, sd] : side)
    if (sd == far_side) memo.transformed.insert(v);
  {
    std::map<int, int> comp_side;  // component rep -> side
    for (Fid f : rf) {
      int rep = comps.find(f);
      for (Vid t : g.faces[f].t) {
        auto it = side.find(t);
        if (it == side.end()) continue;
        auto [jt, fresh] = comp_side.emplace(rep, it->second);
        if (!fresh && jt->second != it->second)
          throw Error(Err::Internal, "component touches both strip borders");
      }
    }
    for (Fid f : rf) {
      auto it = comp_side.find(comps.find(f));
      if (it == comp_side.end()) throw Error(Err::Internal, "component away from the strip");
      if (it->second == far_side)
        for (Vid t : g.faces[f].t) memo.transformed.insert(t);
    }
  }

  // shifted field on the far region, seeded across every rung of the cut
  std::vector<std::pair<Vid, Rat>> bt_seeds;
  {
    std::map<Vid, Rat> chosen;
    for (Eid e : C.tedges) {
      Vid a = g.edges[e].a, b = g.edges[e].b;
      if (side.at(a) == far_side) std::swap(a, b);
      auto [it, fresh] = chosen.emplace(b, sol.at(a));
      if (!fresh && it->second != sol.at(a))
        throw Error(Err::Internal, "border values fail the tangency coincidence");
    }
    bt_seeds.assign(chosen.begin(), chosen.end());
  }
  std::map<Vid, Rat> shifted =
      backlund_transform(g, ss, k, sol, memo.alpha, bt_seeds, &memo.transformed);

  // one original value per connected piece of the far region, for re-insertion
  {
    UnionFind tuf;
    for (Vid v : memo.transformed) tuf.find(v);
    for (const Edge& e : g.edges)
      if (memo.transformed.count(e.a) && memo.transformed.count(e.b)) tuf.unite(e.a, e.b);
    std::map<int, Vid> low;
    for (Vid v : memo.transformed) {
      int r = tuf.find(v);
      auto [it, fresh] = low.emplace(r, v);
      if (!fresh) it->second = std::min(it->second, v);
    }
    for (const auto& [r, v] : low) {
      (void)r;
      memo.seeds.emplace_back(v, sol.at(v));
    }
  }

  // glue: rename class members to their lowest surviving id
  for (const auto& cls : memo.classes) {
    Vid rep = -1;
    for (Vid v : cls)
      if (rf_verts.count(v) && (rep == -1 || v < rep)) rep = v;
    if (rep == -1) {
      // every member vanished with the strip; nothing in the glued graph
      // remembers this class, so the erase cannot be undone from the memo
      memo.reconstructible = false;
      continue;
    }
    for (Vid v : cls) memo.rename[v] = rep;
  }

  auto target = [&](Vid v) {
    auto it = memo.rename.find(v);
    return it == memo.rename.end() ? v : it->second;
  };

  std::vector<Face> nfaces;
  for (Fid f : rf) {
    Face nf = g.faces[f];
    for (Vid& t : nf.t) t = target(t);
    nfaces.push_back(nf);
  }
  std::set<Vid> used;
  for (const Face& f : nfaces)
    for (Vid t : f.t) used.insert(t);
  std::map<Vid, VertexInfo> nverts;
  for (Vid v : used) nverts[v] = g.verts.at(v);

  for (Vid v : rf_verts) {
    Rat x = memo.transformed.count(v) ? shifted.at(v) : sol.at(v);
    auto [it, fresh] = res.sol.emplace(target(v), x);
    if (!fresh && it->second != x)
      throw Error(Err::Internal, "glued values disagree inside a class");
  }

  res.g = build_quadgraph(nverts, nfaces);
  StripSet nss = trace_strips(res.g);
  if (!g.strip_params.empty()) {
    std::map<Eid, Rat> votes;
    for (size_t i = 0; i < ss.strips.size(); ++i) {
      if ((int)i == strip_id) continue;
      auto pit = g.strip_params.find((int)i);
      if (pit == g.strip_params.end()) continue;
      for (Eid e : ss.strips[i].tedges) {
        Vid a = target(g.edges[e].a), b = target(g.edges[e].b);
        if (a == b) continue;
        Eid ne = res.g.eid(a, b);
        if (ne < 0) continue;
        auto [it, fresh] = votes.emplace(ne, pit->second);
        if (!fresh && it->second != pit->second)
          throw Error(Err::Internal, "conflicting parameters on a glued edge");
      }
    }
    for (size_t i = 0; i < nss.strips.size(); ++i) {
      const Rat* got = nullptr;
      for (Eid e : nss.strips[i].tedges) {
        auto it = votes.find(e);
        if (it == votes.end()) continue;
        if (got && *got != it->second)
          throw Error(Err::Internal, "glued strip inherited disagreeing parameters", -1, (int)i);
        got = &it->second;
      }
      if (!got) throw Error(Err::Internal, "glued strip inherited no parameter", -1, (int)i);
      res.g.strip_params[(int)i] = *got;
    }
  }
  for (size_t f = 0; f < res.g.faces.size(); ++f)
    if (face_residual_sol(res.g, nss, k, res.sol, (Fid)f) != 0)
      throw Error(Err::Internal, "glued solution violates a face equation", (int)f);
  return res;
}

std::pair<Quadgraph, std::map<Vid, Rat>> insert_strip(EqKind k, const EraseMemo& memo,
                                                      const std::map<Vid, Rat>& glued_sol) {
  if (!memo.reconstructible)
    throw Error(Err::BadInput, "erase memo does not determine the original complex");
  Quadgraph g = build_quadgraph(memo.orig_verts, memo.orig_faces);
  g.strip_params = memo.orig_params;
  StripSet ss = trace_strips(g);

  auto target = [&](Vid v) {
    auto it = memo.rename.find(v);
    return it == memo.rename.end() ? v : it->second;
  };

  // shifted field on the far region, read off the glued solution
  std::map<Vid, Rat> shifted;
  for (Vid v : memo.transformed) {
    auto it = glued_sol.find(target(v));
    if (it == glued_sol.end()) throw Error(Err::BadInput, "glued solution misses a needed value");
    shifted[v] = it->second;
  }
  std::map<Vid, Rat> far =
      backlund_inverse(g, ss, k, shifted, memo.alpha, memo.seeds, &memo.transformed);

  std::map<Vid, Rat> val;
  for (const auto& [v, info] : g.verts) {
    (void)info;
    if (memo.transformed.count(v)) {
      val[v] = far.at(v);
    } else {
      auto it = glued_sol.find(target(v));
      if (it == glued_sol.end()) throw Error(Err::BadInput, "glued solution misses a kept value");
      val[v] = it->second;
    }
  }
  for (size_t f = 0; f < g.faces.size(); ++f)
    if (face_residual_sol(g, ss, k, val, (Fid)f) != 0)
      throw Error(Err::Internal, "re-inserted strip violates a face equation", (int)f);
  return {std::move(g), std::move(val)};
}

// --- defect experiments ---------------------------------------------------------

DefectRun defect_experiment(const DefectGraph& d, EqKind k, const Path& p,
                            const std::vector<Rat>& data) {
  DefectRun run;
  StripSet dss = trace_strips(d.g);
  run.cls = classify_ivp(d.g, dss, p);
  run.defect = propagate(d.g, dss, k, p, data);

  Quadgraph host = plain_host(d);
  StripSet hss = trace_strips(host);
  run.plain = propagate(host, hss, k, p, data);

  for (const auto& [v, x] : run.plain.val) {
    auto it = run.defect.val.find(v);
    if (it != run.defect.val.end() && d.g.verts.count(v) && it->second != x)
      run.affected.push_back(v);
  }
  return run;
}

std::set<Vid> strips_through_region(const Quadgraph& g, const StripSet& ss,
                                    const std::vector<Fid>& faces) {
  std::set<int> hit;
  for (Fid f : faces)
    for (int s : ss.face_strips.at(f)) hit.insert(s);
  std::set<Vid> region;
  for (int s : hit)
    for (const StripPass& ps : ss.strips[s].passes)
      for (Vid t : g.faces[ps.face].t) region.insert(t);
  return region;
}

}  // namespace qg
