#include "qg/cauchy.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <deque>
#include <functional>
#include <set>

namespace qg {

int strip_path_index(const Strip& s, const Quadgraph& g, const Path& p) {
  std::map<Eid, int> pmult;
  for (size_t i = 0; i + 1 < p.size(); ++i) pmult[g.eid(p[i], p[i + 1])]++;
  int idx = 0;
  for (Eid e : s.tedges) {
    auto it = pmult.find(e);
    if (it != pmult.end()) idx += it->second;
  }
  return idx;
}

Classification classify_ivp(const Quadgraph& g, const StripSet& ss, const Path& p) {
  check_path(g, p);
  for (size_t i = 0; i < ss.strips.size(); ++i)
    if (ss.strips[i].self_crossing)
      throw Error(Err::SelfIntersectingStrip,
                  "strip " + std::to_string(i) + " crosses itself; split it first", -1, (int)i);
  Classification c;
  c.index.reserve(ss.strips.size());
  for (size_t i = 0; i < ss.strips.size(); ++i) {
    int idx = strip_path_index(ss.strips[i], g, p);
    c.index.push_back(idx);
    if (idx == 0) c.under_strips.push_back((int)i);
    if (idx >= 2) c.over_strips.push_back((int)i);
  }
  bool over = !c.over_strips.empty(), under = !c.under_strips.empty();
  c.verdict = over ? (under ? Verdict::Both : Verdict::Overdetermined)
                   : (under ? Verdict::Underdetermined : Verdict::Correct);
  return c;
}

CubeImmersion hypercube_immersion(const Quadgraph& g, const StripSet& ss, const Path& p) {
  if (!path_is_simple(p)) throw Error(Err::BadPath, "cube immersion needs a simple path");
  Classification c = classify_ivp(g, ss, p);
  if (c.verdict != Verdict::Correct)
    throw Error(Err::BadInput, "cube immersion needs a correct initial value problem");
  CubeImmersion imm;
  imm.N = (int)p.size() - 1;
  if (imm.N > 64) throw Error(Err::BadInput, "path longer than 64 edges");
  if ((size_t)imm.N != ss.strips.size())
    throw Error(Err::Internal, "strip count does not match path length");

  imm.strip_dir.assign(ss.strips.size(), -1);
  for (int i = 0; i < imm.N; ++i) {
    int s = ss.edge_strip.at(g.eid(p[i], p[i + 1]));
    if (imm.strip_dir[s] != -1) throw Error(Err::Internal, "strip crossed twice by a correct path");
    imm.strip_dir[s] = i;
  }
  for (int d : imm.strip_dir)
    if (d == -1) throw Error(Err::Internal, "strip not crossed by a correct path");

  imm.alpha.resize(imm.N);
  for (size_t s = 0; s < ss.strips.size(); ++s)
    imm.alpha[imm.strip_dir[s]] = edge_param(g, ss, ss.strips[s].tedges[0]);

  // breadth-first labelling: crossing a strip toggles its bit
  std::deque<Vid> q{p[0]};
  imm.coord[p[0]] = 0;
  while (!q.empty()) {
    Vid v = q.front();
    q.pop_front();
    std::uint64_t m = imm.coord.at(v);
    for (const auto& [w, info] : g.verts) {
      (void)info;
      Eid ve = g.eid(v, w);
      if (ve < 0) continue;
      std::uint64_t nm = m ^ (1ull << imm.strip_dir[ss.edge_strip.at(ve)]);
      auto [jt, fresh] = imm.coord.emplace(w, nm);
      if (fresh)
        q.push_back(w);
      else if (jt->second != nm)
        throw Error(Err::Internal, "inconsistent cube coordinates");
    }
  }
  if (imm.coord.size() != g.verts.size()) throw Error(Err::Internal, "cube labelling missed vertices");

  imm.prefixes.resize(imm.N + 1);
  for (int t = 0; t <= imm.N; ++t) {
    imm.prefixes[t] = (t == 64) ? ~0ull : ((1ull << t) - 1);
    if (imm.coord.at(p[t]) != imm.prefixes[t])
      throw Error(Err::Internal, "path does not map to the staircase of prefixes");
  }

  // every face must span exactly two cube directions
  for (const Face& f : g.faces) {
    std::uint64_t m0 = imm.coord.at(f.t[0]), m1 = imm.coord.at(f.t[1]),
                  m2 = imm.coord.at(f.t[2]), m3 = imm.coord.at(f.t[3]);
    std::uint64_t da = m0 ^ m1, db = m1 ^ m2;
    if (std::popcount(da) != 1 || std::popcount(db) != 1 || da == db ||
        (m2 ^ m3) != da || (m3 ^ m0) != db)
      throw Error(Err::Internal, "face does not map to a cube two-face");
  }
  return imm;
}

Rat cube_corner_value(const CubeImmersion& imm, EqKind k, const std::vector<Rat>& data,
                      std::uint64_t mask, std::map<std::uint64_t, Rat>& memo) {
  (void)data;
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  int card = std::popcount(mask);
  std::uint64_t pref = imm.prefixes[card];
  std::uint64_t extra = mask & ~pref;    // bits above the staircase
  std::uint64_t missing = pref & ~mask;  // staircase bits not taken
  if (extra == 0 || missing == 0) throw Error(Err::Internal, "cube mask off the lazy schedule");
  int a = std::countr_zero(extra);
  int b = std::countr_zero(missing);
  std::uint64_t base = mask ^ (1ull << a);
  Rat v = cube_corner_value(imm, k, data, base, memo);
  Rat v2 = cube_corner_value(imm, k, data, base | (1ull << b), memo);
  Rat v12 = cube_corner_value(imm, k, data, mask | (1ull << b), memo);
  Solved<Rat> s = solve_corner<Rat>(k, 1, {v, Rat(0), v2, v12}, imm.alpha[a], imm.alpha[b]);
  if (!s.ok) throw Error(Err::Singular, "degenerate corner while descending the cube");
  memo.emplace(mask, s.value);
  return memo.at(mask);
}

std::map<Vid, Rat> solve_via_cube(const Quadgraph& g, const StripSet& ss, EqKind k,
                                  const Path& p, const std::vector<Rat>& data) {
  if (data.size() != p.size()) throw Error(Err::BadInput, "data size does not match path");
  CubeImmersion imm = hypercube_immersion(g, ss, p);
  std::map<std::uint64_t, Rat> memo;
  for (size_t t = 0; t < p.size(); ++t) memo[imm.prefixes[t]] = data[t];
  std::map<Vid, Rat> val;
  for (const auto& [v, m] : imm.coord) val[v] = cube_corner_value(imm, k, data, m, memo);
  for (size_t f = 0; f < g.faces.size(); ++f)
    if (face_residual_sol(g, ss, k, val, (Fid)f) != 0)
      throw Error(Err::Internal, "cube solution violates a face equation", (int)f);
  return val;
}

// --- splitting ---------------------------------------------------------------

SplitResult split_self_intersecting_strips(const Quadgraph& g0, EqKind k, bool other_diagonal) {
  if (!equation_info(k).has_splitting)
    throw Error(Err::NoSplittingProperty, "equation admits no diagonal splitting");

  SplitResult res;
  std::map<Vid, VertexInfo> verts = g0.verts;
  std::vector<Face> faces = g0.faces;
  std::map<int, Rat> params = g0.strip_params;

  for (;;) {
    Quadgraph g = build_quadgraph(verts, faces);
    g.strip_params = params;
    StripSet ss = trace_strips(g);

    int si = -1;
    for (size_t i = 0; i < ss.strips.size(); ++i)
      if (ss.strips[i].self_crossing) { si = (int)i; break; }
    if (si == -1) {
      res.g = std::move(g);
      return res;
    }

    const Strip& s = ss.strips[si];
    int pi = -1, pj = -1;
    {
      std::map<Fid, int> first;
      for (size_t t = 0; t < s.passes.size(); ++t) {
        auto [it, fresh] = first.emplace(s.passes[t].face, (int)t);
        if (!fresh) { pi = it->second; pj = (int)t; break; }
      }
    }
    if (pj == -1) throw Error(Err::Internal, "self-crossing strip without a repeated face");

    Fid fc = s.passes[pi].face;
    const Face& F = g.faces[fc];
    Edge e1 = g.edges[s.passes[pi].exit];
    Edge e2 = g.edges[s.passes[pj].entry];
    Vid corner = -1;
    for (Vid va : {e1.a, e1.b})
      for (Vid vb : {e2.a, e2.b})
        if (va == vb) corner = va;
    if (corner == -1) throw Error(Err::Internal, "crossing pass edges share no corner");
    Vid x = (e1.a == corner) ? e1.b : e1.a;
    Vid y = (e2.a == corner) ? e2.b : e2.a;
    Vid w = -1;
    for (Vid t : F.t)
      if (t != corner && t != x && t != y) w = t;

    // param transfer source: every old edge carrying its strip's parameter
    std::map<Eid, Rat> old_edge_param;
    if (!params.empty())
      for (size_t i = 0; i < ss.strips.size(); ++i) {
        auto it = params.find((int)i);
        if (it == params.end()) continue;
        for (Eid e : ss.strips[i].tedges) old_edge_param.emplace(e, it->second);
      }

    struct Attempt {
      std::map<Vid, VertexInfo> nverts;
      std::vector<Face> nfaces;
      Quadgraph ng;
      StripSet nss;
      std::map<int, Rat> nparams;
      std::vector<Vid> dropped;
    };
    auto attempt = [&](Vid kept, Vid removed, Attempt& out) -> bool {
      out = Attempt{};
      std::set<Vid> used;
      for (size_t f = 0; f < faces.size(); ++f) {
        if ((Fid)f == fc) continue;
        Face nf = faces[f];
        for (Vid& t : nf.t)
          if (t == removed) t = kept;
        out.nfaces.push_back(nf);
        for (Vid t : nf.t) used.insert(t);
      }
      for (const auto& [v, info] : verts)
        if (used.count(v)) out.nverts[v] = info;
      for (const auto& [v, info] : verts) {
        (void)info;
        if (!used.count(v) && v != removed) out.dropped.push_back(v);
      }
      try {
        out.ng = build_quadgraph(out.nverts, out.nfaces);
      } catch (const Error&) {
        return false;  // this identification pinches or disconnects the complex
      }
      out.nss = trace_strips(out.ng);
      if (!old_edge_param.empty()) {
        std::map<Eid, Rat> votes;
        for (const auto& [e, prm] : old_edge_param) {
          Vid a = g.edges[e].a, b = g.edges[e].b;
          if (a == removed) a = kept;
          if (b == removed) b = kept;
          if (a == b) continue;
          Eid ne = out.ng.eid(a, b);
          if (ne < 0) continue;
          auto [jt, fresh] = votes.emplace(ne, prm);
          if (!fresh && jt->second != prm)
            throw Error(Err::Internal, "conflicting parameters on a merged edge");
        }
        for (size_t i = 0; i < out.nss.strips.size(); ++i) {
          const Rat* got = nullptr;
          for (Eid e : out.nss.strips[i].tedges) {
            auto it = votes.find(e);
            if (it == votes.end()) continue;
            if (got && *got != it->second)
              throw Error(Err::Internal, "strip inherited disagreeing parameters", -1, (int)i);
            got = &it->second;
          }
          if (!got) throw Error(Err::Internal, "strip inherited no parameter", -1, (int)i);
          out.nparams[(int)i] = *got;
        }
      }
      return true;
    };

    // the degenerate equation lets us identify either diagonal; prefer the
    // requested one, fall back to the other when the first would not leave a
    // valid quad-graph (e.g. the collapse pinches the merged corner)
    std::array<std::pair<Vid, Vid>, 2> diags = {{{x, y}, {corner, w}}};
    if (other_diagonal) std::swap(diags[0], diags[1]);
    Attempt at;
    Vid kept = -1, removed = -1;
    bool ok = false;
    for (auto [p, q] : diags) {
      kept = std::min(p, q);
      removed = std::max(p, q);
      if (attempt(kept, removed, at)) {
        ok = true;
        break;
      }
    }
    if (!ok)
      throw Error(Err::BadInput, "neither diagonal identification leaves a valid quad-graph",
                  (int)fc);

    SplitEvent ev;
    ev.face = fc;
    ev.kept = kept;
    ev.removed = removed;
    ev.strips_before = (int)ss.strips.size();
    ev.strips_after = (int)at.nss.strips.size();
    ev.dropped_isolated = at.dropped;
    res.events.push_back(ev);
    verts = std::move(at.nverts);
    faces = std::move(at.nfaces);
    params = std::move(at.nparams);
  }
}

}  // namespace qg
