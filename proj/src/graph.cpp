#include "qg/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace qg {

void finalize(Quadgraph& g) {
  g.edges.clear();
  g.edge_ids.clear();
  g.face_edges.assign(g.faces.size(), {-1, -1, -1, -1});
  g.edge_faces.clear();

  std::set<std::pair<Vid, Vid>> pairs;
  for (const Face& f : g.faces)
    for (int i = 0; i < 4; i++) {
      Vid a = f.t[i], b = f.t[(i + 1) % 4];
      if (a > b) std::swap(a, b);
      pairs.insert({a, b});
    }
  g.edges.reserve(pairs.size());
  for (auto& p : pairs) {
    g.edge_ids[p] = (Eid)g.edges.size();
    g.edges.push_back({p.first, p.second});
  }
  g.edge_faces.assign(g.edges.size(), {-1, -1});
  for (Fid fi = 0; fi < (Fid)g.faces.size(); fi++) {
    const Face& f = g.faces[fi];
    for (int i = 0; i < 4; i++) {
      Eid e = g.eid(f.t[i], f.t[(i + 1) % 4]);
      g.face_edges[fi][i] = e;
      if (g.edge_faces[e][0] < 0)
        g.edge_faces[e][0] = fi;
      else if (g.edge_faces[e][1] < 0)
        g.edge_faces[e][1] = fi;
      else
        throw Error(Err::NonManifoldEdge,
                    "edge (" + std::to_string(g.edges[e].a) + "," +
                        std::to_string(g.edges[e].b) + ") in more than two faces");
    }
  }
}

Quadgraph build_quadgraph(std::map<Vid, VertexInfo> verts, std::vector<Face> faces) {
  Quadgraph g;
  g.verts = std::move(verts);
  g.faces = std::move(faces);

  for (Fid fi = 0; fi < (Fid)g.faces.size(); fi++) {
    const auto& t = g.faces[fi].t;
    for (int i = 0; i < 4; i++) {
      if (!g.verts.count(t[i]))
        throw Error(Err::BadInput, "face uses unknown vertex " + std::to_string(t[i]), fi);
      for (int j = i + 1; j < 4; j++)
        if (t[i] == t[j])
          throw Error(Err::NonQuadFace, "face " + std::to_string(fi) + " repeats vertex " +
                                            std::to_string(t[i]), fi);
    }
  }
  // every vertex must be used; callers drop isolated ones themselves
  {
    std::set<Vid> used;
    for (const Face& f : g.faces) used.insert(f.t.begin(), f.t.end());
    for (auto& [v, info] : g.verts)
      if (!used.count(v))
        throw Error(Err::BadInput, "vertex " + std::to_string(v) + " not in any face");
  }

  finalize(g);
  if (g.faces.empty()) return g;  // empty complex is a legal terminal state

  // one face-connected component
  {
    std::vector<char> seen(g.faces.size(), 0);
    std::queue<Fid> q;
    q.push(0);
    seen[0] = 1;
    size_t n = 1;
    while (!q.empty()) {
      Fid f = q.front();
      q.pop();
      for (Eid e : g.face_edges[f]) {
        Fid o = g.other_face(e, f);
        if (o >= 0 && !seen[o]) {
          seen[o] = 1;
          n++;
          q.push(o);
        }
      }
    }
    if (n != g.faces.size())
      throw Error(Err::NotSimplyConnected, "face complex is disconnected");
  }

  // boundary must be a single cycle without pinch points
  std::map<Vid, int> bdeg;
  long nb = 0;
  for (Eid e = 0; e < (Eid)g.edges.size(); e++)
    if (g.is_boundary_edge(e)) {
      nb++;
      bdeg[g.edges[e].a]++;
      bdeg[g.edges[e].b]++;
    }
  for (auto& [v, d] : bdeg)
    if (d != 2)
      throw Error(Err::NotSimplyConnected,
                  "pinch at vertex " + std::to_string(v) + " (boundary degree " +
                      std::to_string(d) + ")");
  if (nb > 0) {
    // walk one boundary cycle and check it covers all boundary edges
    std::map<Vid, std::vector<Eid>> at;
    for (Eid e = 0; e < (Eid)g.edges.size(); e++)
      if (g.is_boundary_edge(e)) {
        at[g.edges[e].a].push_back(e);
        at[g.edges[e].b].push_back(e);
      }
    Eid e0 = -1;
    for (Eid e = 0; e < (Eid)g.edges.size(); e++)
      if (g.is_boundary_edge(e)) {
        e0 = e;
        break;
      }
    long covered = 1;
    Eid cur = e0;
    Vid v = g.edges[e0].b;
    while (true) {
      auto& es = at[v];
      Eid nxt = es[0] == cur ? es[1] : es[0];
      if (nxt == e0) break;
      covered++;
      v = g.edges[nxt].a == v ? g.edges[nxt].b : g.edges[nxt].a;
      cur = nxt;
    }
    if (covered != nb)
      throw Error(Err::NotSimplyConnected, "boundary is not a single cycle");
  }
  if (nb % 2 != 0) throw Error(Err::OddBoundary, "boundary length " + std::to_string(nb));

  long V = (long)g.verts.size(), E = (long)g.edges.size(), F = (long)g.faces.size();
  if (V - E + F != 1)
    throw Error(Err::NotSimplyConnected,
                "Euler characteristic " + std::to_string(V - E + F) + " != 1");
  return g;
}

Balance vertex_balance(const Quadgraph& g) {
  Balance b;
  b.V = (long)g.verts.size();
  b.E = (long)g.edges.size();
  b.F = (long)g.faces.size();
  for (Eid e = 0; e < (Eid)g.edges.size(); e++)
    if (g.is_boundary_edge(e)) b.Vb++;
  b.required = b.Vb / 2 + 1;
  b.identity = (b.F == b.V - b.Vb / 2 - 1);
  return b;
}

std::vector<Eid> Strip::lateral_edges(const Quadgraph& g) const {
  std::vector<Eid> out;
  for (const StripPass& p : passes) {
    out.push_back(g.face_edges[p.face][1 - p.pair]);
    out.push_back(g.face_edges[p.face][1 - p.pair + 2]);
  }
  return out;
}

namespace {

// one step across `exit` out of face `f`; false when exit is a boundary edge
bool step(const Quadgraph& g, Fid f, Eid exit, StripPass& next) {
  Fid nf = g.other_face(exit, f);
  if (nf < 0) return false;
  int pos = g.edge_pos_in_face(nf, exit);
  next.face = nf;
  next.pair = pos % 2;
  next.entry = exit;
  next.exit = g.face_edges[nf][(pos + 2) % 4];
  return true;
}

std::vector<Eid> tedges_of(const std::vector<StripPass>& ps, bool closed) {
  std::vector<Eid> t;
  for (const auto& p : ps) t.push_back(p.entry);
  if (!closed) t.push_back(ps.back().exit);
  return t;
}

std::vector<StripPass> reversed(const std::vector<StripPass>& ps) {
  std::vector<StripPass> r(ps.rbegin(), ps.rend());
  for (auto& p : r) std::swap(p.entry, p.exit);
  return r;
}

}  // namespace

StripSet trace_strips(const Quadgraph& g) {
  StripSet ss;
  ss.face_strips.assign(g.faces.size(), {-1, -1});
  ss.edge_strip.assign(g.edges.size(), -1);
  std::vector<std::array<char, 2>> done(g.faces.size(), {0, 0});

  for (Fid f0 = 0; f0 < (Fid)g.faces.size(); f0++)
    for (int p0 = 0; p0 < 2; p0++) {
      if (done[f0][p0]) continue;

      StripPass start{f0, p0, g.face_edges[f0][p0], g.face_edges[f0][p0 + 2]};
      std::vector<StripPass> fwd{start};
      bool closed = false;
      for (;;) {
        StripPass nxt;
        if (!step(g, fwd.back().face, fwd.back().exit, nxt)) break;
        if (nxt.face == f0 && nxt.pair == p0) {
          closed = true;
          break;
        }
        fwd.push_back(nxt);
      }
      std::vector<StripPass> all;
      if (!closed) {
        // extend backwards through the start entry
        std::vector<StripPass> bwd;
        Fid cf = f0;
        Eid out = start.entry;
        for (;;) {
          StripPass prv;
          if (!step(g, cf, out, prv)) break;
          bwd.push_back(prv);  // oriented against the strip; fix below
          cf = prv.face;
          out = prv.exit;
        }
        all = reversed(bwd);
        all.insert(all.end(), fwd.begin(), fwd.end());
      } else {
        all = fwd;
      }

      Strip s;
      s.closed = closed;
      s.passes = all;
      // canonical orientation: smallest transversal edge first
      if (!closed) {
        auto t = tedges_of(s.passes, false);
        if (t.back() < t.front()) s.passes = reversed(s.passes);
      } else {
        auto t = tedges_of(s.passes, true);
        int k = (int)(std::min_element(t.begin(), t.end()) - t.begin());
        std::rotate(s.passes.begin(), s.passes.begin() + k, s.passes.end());
        auto fwd_t = tedges_of(s.passes, true);
        // reversing a min-first closed strip keeps the min edge first: the
        // last pass exits through it, so after the swap it re-enters there
        auto rev = reversed(s.passes);
        auto rev_t = tedges_of(rev, true);
        if (rev_t < fwd_t) s.passes = rev;
      }
      s.tedges = tedges_of(s.passes, s.closed);

      std::map<Fid, int> seen_face;
      for (const auto& ps : s.passes) {
        done[ps.face][ps.pair] = 1;
        if (++seen_face[ps.face] > 1) s.self_crossing = true;
      }
      std::map<Eid, int> lat;
      for (Eid e : s.lateral_edges(g))
        if (++lat[e] > 1) s.self_tangent = true;
      ss.strips.push_back(std::move(s));
    }

  std::sort(ss.strips.begin(), ss.strips.end(),
            [](const Strip& a, const Strip& b) { return a.tedges[0] < b.tedges[0]; });

  for (int si = 0; si < (int)ss.strips.size(); si++) {
    const Strip& s = ss.strips[si];
    for (const auto& p : s.passes) ss.face_strips[p.face][p.pair] = si;
    for (Eid e : s.tedges) {
      if (ss.edge_strip[e] >= 0 && ss.edge_strip[e] != si)
        throw Error(Err::Internal, "edge claimed by two strips", -1, si);
      ss.edge_strip[e] = si;
    }
    if (s.self_crossing) ss.any_self_crossing = true;
  }
  for (Eid e = 0; e < (Eid)g.edges.size(); e++)
    if (ss.edge_strip[e] < 0) throw Error(Err::Internal, "edge missed by strip trace");
  return ss;
}

Rat edge_param(const Quadgraph& g, const StripSet& ss, Eid e) {
  int s = ss.edge_strip[e];
  auto it = g.strip_params.find(s);
  if (it == g.strip_params.end())
    throw Error(Err::MissingParam, "no parameter for strip " + std::to_string(s), -1, s);
  return it->second;
}

void check_path(const Quadgraph& g, const Path& p) {
  if (p.size() < 2) throw Error(Err::BadPath, "path needs at least one edge");
  for (size_t i = 0; i + 1 < p.size(); i++)
    if (g.eid(p[i], p[i + 1]) < 0)
      throw Error(Err::BadPath, "no edge (" + std::to_string(p[i]) + "," +
                                    std::to_string(p[i + 1]) + ")");
}

bool path_is_simple(const Path& p) {
  std::set<Vid> s(p.begin(), p.end());
  return s.size() == p.size();
}

}  // namespace qg
