#include "qg/generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>
#include <tuple>
#include <type_traits>

namespace qg {

Quadgraph gen_square_lattice(int w, int h) {
  if (w < 1 || h < 1) throw Error(Err::BadInput, "lattice needs w,h >= 1");
  std::map<Vid, VertexInfo> vs;
  for (int n = 0; n <= h; n++)
    for (int m = 0; m <= w; m++) {
      VertexInfo vi;
      vi.x = m;
      vi.y = n;
      vi.has_xy = true;
      vi.z = {m, n};
      vs[lattice_vid(w, m, n)] = vi;
    }
  std::vector<Face> fs;
  for (int n = 0; n < h; n++)
    for (int m = 0; m < w; m++)
      fs.push_back({{lattice_vid(w, m, n), lattice_vid(w, m + 1, n),
                     lattice_vid(w, m + 1, n + 1), lattice_vid(w, m, n + 1)}});
  return build_quadgraph(std::move(vs), std::move(fs));
}

void set_lattice_params(Quadgraph& g, const StripSet& ss, int w, int h,
                        const std::vector<Rat>& col_params,
                        const std::vector<Rat>& row_params) {
  if ((int)col_params.size() != w || (int)row_params.size() != h)
    throw Error(Err::BadInput, "param count mismatch");
  g.strip_params.clear();
  for (int m = 0; m < w; m++) {
    Eid e = g.eid(lattice_vid(w, m, 0), lattice_vid(w, m + 1, 0));
    g.strip_params[ss.edge_strip[e]] = col_params[m];
  }
  for (int n = 0; n < h; n++) {
    Eid e = g.eid(lattice_vid(w, 0, n), lattice_vid(w, 0, n + 1));
    g.strip_params[ss.edge_strip[e]] = row_params[n];
  }
  if ((int)g.strip_params.size() != w + h)
    throw Error(Err::Internal, "lattice strip count != w+h");
}

Path lattice_path(int w, std::vector<std::pair<int, int>> pts) {
  Path p;
  for (size_t i = 0; i + 1 < pts.size(); i++) {
    auto [x0, y0] = pts[i];
    auto [x1, y1] = pts[i + 1];
    if (x0 != x1 && y0 != y1) throw Error(Err::BadInput, "waypoints not axis-aligned");
    int dx = (x1 > x0) - (x1 < x0), dy = (y1 > y0) - (y1 < y0);
    int x = x0, y = y0;
    while (x != x1 || y != y1) {
      p.push_back(lattice_vid(w, x, y));
      x += dx;
      y += dy;
    }
  }
  p.push_back(lattice_vid(w, pts.back().first, pts.back().second));
  return p;
}

// --- defects ---------------------------------------------------------------

DefectGraph insert_defect(int w, int h, const std::vector<Rat>& col_params,
                          const std::vector<Rat>& row_params, const DefectSpec& spec) {
  if (spec.x0 >= spec.x1 || spec.y0 >= spec.y1 || spec.x0 < 0 || spec.y0 < 0 ||
      spec.x1 > w || spec.y1 > h)
    throw Error(Err::BadInput, "bad defect rectangle");
  DefectGraph d;
  d.w = w;
  d.h = h;
  d.rx0 = spec.x0;
  d.ry0 = spec.y0;
  d.rx1 = spec.x1;
  d.ry1 = spec.y1;
  d.col_params = col_params;
  d.row_params = row_params;

  std::map<Vid, VertexInfo> vs;
  for (int n = 0; n <= h; n++)
    for (int m = 0; m <= w; m++) {
      bool inside = m > spec.x0 && m < spec.x1 && n > spec.y0 && n < spec.y1;
      if (inside) continue;
      VertexInfo vi;
      vi.x = m;
      vi.y = n;
      vi.has_xy = true;
      vi.z = {m, n};
      vs[lattice_vid(w, m, n)] = vi;
    }
  for (auto& [id, vi] : spec.new_verts) {
    if (vs.count(id)) throw Error(Err::BadInput, "defect vertex id collides with host");
    vs[id] = vi;
  }
  std::vector<Face> fs;
  for (int n = 0; n < h; n++)
    for (int m = 0; m < w; m++) {
      if (m >= spec.x0 && m < spec.x1 && n >= spec.y0 && n < spec.y1) continue;
      fs.push_back({{lattice_vid(w, m, n), lattice_vid(w, m + 1, n),
                     lattice_vid(w, m + 1, n + 1), lattice_vid(w, m, n + 1)}});
    }
  for (const Face& f : spec.new_faces) {
    d.defect_faces.push_back((Fid)fs.size());
    fs.push_back(f);
  }
  d.g = build_quadgraph(std::move(vs), std::move(fs));

  // parameter inheritance per strip, host edges vote
  StripSet ss = trace_strips(d.g);
  size_t next_extra = 0;
  for (int si = 0; si < (int)ss.strips.size(); si++) {
    StripInheritance si_rec;
    si_rec.strip = si;
    for (Eid e : ss.strips[si].tedges) {
      const Edge& ed = d.g.edges[e];
      const auto& za = d.g.verts.at(ed.a).z;
      const auto& zb = d.g.verts.at(ed.b).z;
      if (za.size() != 2 || zb.size() != 2) continue;  // touches a defect vertex
      if (za[1] == zb[1] && std::abs(za[0] - zb[0]) == 1)
        si_rec.candidates.push_back(col_params[std::min(za[0], zb[0])]);
      else if (za[0] == zb[0] && std::abs(za[1] - zb[1]) == 1)
        si_rec.candidates.push_back(row_params[std::min(za[1], zb[1])]);
    }
    if (si_rec.candidates.empty()) {
      if (next_extra >= spec.extra_params.size())
        throw Error(Err::MissingParam, "defect strip with no inherited parameter", -1, si);
      si_rec.param = spec.extra_params[next_extra++];
      si_rec.fresh = true;
    } else {
      bool agree = std::all_of(si_rec.candidates.begin(), si_rec.candidates.end(),
                               [&](const Rat& r) { return r == si_rec.candidates[0]; });
      if (agree) {
        si_rec.param = si_rec.candidates[0];
      } else {
        si_rec.conflict = true;
        // lowest boundary end edge wins
        const Strip& s = ss.strips[si];
        Eid pick = s.closed ? s.tedges[0] : std::min(s.tedges.front(), s.tedges.back());
        const Edge& ed = d.g.edges[pick];
        const auto& za = d.g.verts.at(ed.a).z;
        const auto& zb = d.g.verts.at(ed.b).z;
        if (za[1] == zb[1])
          si_rec.param = col_params[std::min(za[0], zb[0])];
        else
          si_rec.param = row_params[std::min(za[1], zb[1])];
      }
    }
    d.g.strip_params[si] = *si_rec.param;
    d.correspondence.push_back(std::move(si_rec));
  }
  if (next_extra != spec.extra_params.size())
    throw Error(Err::BadInput, "unused extra defect parameters");
  return d;
}

Quadgraph plain_host(const DefectGraph& d) {
  Quadgraph g = gen_square_lattice(d.w, d.h);
  StripSet ss = trace_strips(g);
  set_lattice_params(g, ss, d.w, d.h, d.col_params, d.row_params);
  return g;
}

namespace {

// wall id: 0=left 1=right 2=bottom 3=top, -1 = not a wall edge
int wall_of(const DefectGraph& d, const Edge& ed, const Quadgraph& g) {
  const auto& za = g.verts.at(ed.a).z;
  const auto& zb = g.verts.at(ed.b).z;
  if (za.size() != 2 || zb.size() != 2) return -1;
  if (za[0] == zb[0] && std::abs(za[1] - zb[1]) == 1) {  // vertical
    int y = std::min(za[1], zb[1]);
    if (y < d.ry0 || y >= d.ry1) return -1;
    if (za[0] == d.rx0) return 0;
    if (za[0] == d.rx1) return 1;
  } else if (za[1] == zb[1] && std::abs(za[0] - zb[0]) == 1) {  // horizontal
    int x = std::min(za[0], zb[0]);
    if (x < d.rx0 || x >= d.rx1) return -1;
    if (za[1] == d.ry0) return 2;
    if (za[1] == d.ry1) return 3;
  }
  return -1;
}

}  // namespace

WeakCheck is_weak_defect(const DefectGraph& d, const StripSet& ss) {
  WeakCheck out;
  for (int si = 0; si < (int)ss.strips.size(); si++) {
    std::vector<int> walls;
    for (Eid e : ss.strips[si].tedges) {
      int wl = wall_of(d, d.g.edges[e], d.g);
      if (wl >= 0) walls.push_back(wl);
    }
    bool ok;
    if (walls.empty())
      ok = true;
    else if (walls.size() == 2)
      ok = (walls[0] ^ walls[1]) == 1;  // L<->R or B<->T
    else
      ok = false;
    if (!ok) {
      out.weak = false;
      out.witness_strip = si;
      out.reason = "strip " + std::to_string(si) + " meets defect walls";
      for (int wl : walls) out.reason += std::string(" ") + "LRBT"[wl];
      return out;
    }
  }
  return out;
}

// --- Z^d -------------------------------------------------------------------

namespace {

struct CoordIdx {
  std::map<std::vector<int>, Vid> id;
  Vid get(const std::vector<int>& z) {
    auto it = id.find(z);
    if (it != id.end()) return it->second;
    Vid v = (Vid)id.size();
    id.emplace(z, v);
    return v;
  }
};

// advisory drawing coords: project onto a plane orthogonal-ish to `axis`
void set_xy_projection(std::map<Vid, VertexInfo>& vs, const std::vector<double>& axis) {
  size_t d = axis.size();
  std::vector<double> u(d, 0), v(d, 0);
  if (d == 2) {
    u = {1, 0};
    v = {0, 1};
  } else {
    // Gram-Schmidt of two coordinate directions against the axis
    double n2 = 0;
    for (double a : axis) n2 += a * a;
    if (n2 == 0) n2 = 1;
    std::vector<double> seeds[2] = {std::vector<double>(d, 0), std::vector<double>(d, 0)};
    seeds[0][0] = 1;
    seeds[1][1] = 1;
    std::vector<std::vector<double>> basis;
    for (auto& s : seeds) {
      double pa = 0;
      for (size_t i = 0; i < d; i++) pa += s[i] * axis[i];
      for (size_t i = 0; i < d; i++) s[i] -= pa / n2 * axis[i];
      for (auto& b : basis) {
        double pb = 0, bb = 0;
        for (size_t i = 0; i < d; i++) pb += s[i] * b[i], bb += b[i] * b[i];
        for (size_t i = 0; i < d; i++) s[i] -= pb / bb * b[i];
      }
      double sn = 0;
      for (double x : s) sn += x * x;
      sn = std::sqrt(sn);
      if (sn > 1e-12)
        for (auto& x : s) x /= sn;
      basis.push_back(s);
    }
    u = basis[0];
    v = basis[1];
  }
  for (auto& [id, vi] : vs) {
    vi.x = vi.y = 0;
    for (size_t i = 0; i < d && i < vi.z.size(); i++) {
      vi.x += u[i] * vi.z[i];
      vi.y += v[i] * vi.z[i];
    }
    vi.has_xy = true;
  }
}

}  // namespace

template <class Num>
static ZdSection zd_section_core(const std::vector<Num>& normal, Num offset, int R) {
  size_t d = normal.size();
  if (d < 2) throw Error(Err::BadInput, "need dimension >= 2");
  bool all_zero = true;
  for (const Num& c : normal)
    if (!(c == Num(0))) all_zero = false;
  if (all_zero) throw Error(Err::DegenerateNormal, "zero normal");

  // enumerate the box once
  std::vector<std::vector<int>> box;
  {
    std::vector<int> z(d, -R);
    for (;;) {
      box.push_back(z);
      size_t i = 0;
      while (i < d && ++z[i] > R) z[i++] = -R;
      if (i == d) break;
    }
  }
  auto val = [&](const std::vector<int>& z, const Num& off) {
    Num s = -off;
    for (size_t i = 0; i < d; i++) s += normal[i] * Num(z[i]);
    return s;
  };
  auto near_zero = [&](const Num& s) {
    if constexpr (std::is_same_v<Num, double>)
      return std::abs(s) < 1e-9;
    else
      return s == Num(0);
  };
  auto nabs = [](const Num& x) { return x < Num(0) ? Num(-x) : Num(x); };

  // candidate 2-faces: base point plus two axis directions, all corners in the box
  struct Cand {
    const std::vector<int>* z;
    size_t i, j;
  };
  std::vector<Cand> cands;
  for (auto& z : box)
    for (size_t i = 0; i < d; i++) {
      if (z[i] + 1 > R) continue;
      for (size_t j = i + 1; j < d; j++) {
        if (z[j] + 1 > R) continue;
        cands.push_back({&z, i, j});
      }
    }
  Num totabs(0);
  for (const Num& c : normal) totabs += nabs(c);
  // a face survives iff the plane crosses its dual cell: the face center must sit
  // closer to the plane than half the total weight of the axes the face does not
  // span.  (testing corner signs instead keeps two parallel layers and pinches
  // every edge the plane crosses.)  in d=2 the dual cell is a point, so there the
  // corner-sign test is the right one.
  auto margin2 = [&](const Cand& cd, const Num& o) {
    // 2*(distance of face center from plane); compare against the missing weight
    return Num(Num(2) * val(*cd.z, o) + normal[cd.i] + normal[cd.j]);
  };
  auto missing2 = [&](const Cand& cd) { return Num(totabs - nabs(normal[cd.i]) - nabs(normal[cd.j])); };

  ZdSection out;
  Num off = offset;
  // nudge the offset while a lattice point sits exactly on the plane or the plane
  // grazes a dual-cell boundary (either way the selection would be ambiguous)
  for (int tries = 0; tries < 8; tries++) {
    bool hit = false;
    Num minnz(0);
    bool have_min = false;
    auto feed = [&](const Num& a) {
      if (near_zero(a)) {
        hit = true;
      } else if (!have_min || a < minnz) {
        minnz = a;
        have_min = true;
      }
    };
    for (auto& z : box) feed(nabs(val(z, off)));
    if (d >= 3)
      for (auto& cd : cands) feed(Num(nabs(Num(missing2(cd) - nabs(margin2(cd, off)))) / Num(2)));
    if (!hit) break;
    out.perturbed = true;
    Num eps = Num(1) / Num(1000);
    if (have_min) {
      Num half = minnz / Num(2);
      if (half < eps) eps = half;
    }
    off = off + eps;
  }

  std::map<Vid, VertexInfo> vs;
  std::vector<Face> fs;
  CoordIdx idx;
  auto corner_vid = [&](std::vector<int> z) {
    Vid v = idx.get(z);
    if (!vs.count(v)) {
      VertexInfo vi;
      vi.z = z;
      vs[v] = vi;
    }
    return v;
  };
  for (auto& cd : cands) {
    const auto& z = *cd.z;
    std::vector<int> c1 = z, c2 = z, c3 = z;
    c1[cd.i]++;
    c2[cd.i]++;
    c2[cd.j]++;
    c3[cd.j]++;
    bool keep;
    if (d >= 3) {
      keep = nabs(margin2(cd, off)) < missing2(cd);
    } else {
      Num s0 = val(z, off), s1 = val(c1, off), s2 = val(c2, off), s3 = val(c3, off);
      bool neg = s0 < Num(0) || s1 < Num(0) || s2 < Num(0) || s3 < Num(0);
      bool pos = s0 > Num(0) || s1 > Num(0) || s2 > Num(0) || s3 > Num(0);
      keep = neg && pos;
    }
    if (keep) fs.push_back({{corner_vid(z), corner_vid(c1), corner_vid(c2), corner_vid(c3)}});
  }
  // ids were handed out in discovery order; remap to lex order of coords
  {
    std::map<Vid, Vid> remap;
    Vid k = 0;
    for (auto& [z, v] : idx.id) remap[v] = k++;
    std::map<Vid, VertexInfo> vs2;
    for (auto& [v, vi] : vs) vs2[remap[v]] = vi;
    for (auto& f : fs)
      for (auto& v : f.t) v = remap[v];
    vs = std::move(vs2);
  }
  std::vector<double> axis(d);
  for (size_t i = 0; i < d; i++) {
    if constexpr (std::is_same_v<Num, double>)
      axis[i] = normal[i];
    else
      axis[i] = normal[i].get_d();
  }
  set_xy_projection(vs, axis);
  out.g = build_quadgraph(std::move(vs), std::move(fs));
  if constexpr (std::is_same_v<Num, double>)
    out.offset_used_real = off;
  else
    out.offset_used = off;
  return out;
}

ZdSection gen_zd_plane_section(const std::vector<Rat>& normal, const Rat& offset, int R) {
  return zd_section_core<Rat>(normal, offset, R);
}

ZdSection gen_zd_plane_section_real(const std::vector<double>& normal, double offset, int R) {
  return zd_section_core<double>(normal, offset, R);
}

static Quadgraph quadrants_build(
    int R, const std::vector<std::tuple<int, int, int, int>>& sheets) {
  // sheet = (dir_i, dir_j, sign_i, sign_j); third coordinate is 0
  CoordIdx idx;
  std::map<Vid, VertexInfo> vs;
  std::vector<Face> fs;
  auto corner_vid = [&](std::vector<int> z) {
    Vid v = idx.get(z);
    if (!vs.count(v)) {
      VertexInfo vi;
      vi.z = z;
      vs[v] = vi;
    }
    return v;
  };
  for (auto [di, dj, si, sj] : sheets) {
    for (int a = 0; a < R; a++)
      for (int b = 0; b < R; b++) {
        // face corners span [a,a+1]x[b,b+1] scaled by the signs
        auto mk = [&](int ai, int bj) {
          std::vector<int> z(3, 0);
          z[di] = si * ai;
          z[dj] = sj * bj;
          return z;
        };
        fs.push_back({{corner_vid(mk(a, b)), corner_vid(mk(a + 1, b)),
                       corner_vid(mk(a + 1, b + 1)), corner_vid(mk(a, b + 1))}});
      }
  }
  std::map<Vid, Vid> remap;
  Vid k = 0;
  for (auto& [z, v] : idx.id) remap[v] = k++;
  std::map<Vid, VertexInfo> vs2;
  for (auto& [v, vi] : vs) vs2[remap[v]] = vi;
  for (auto& f : fs)
    for (auto& v : f.t) v = remap[v];
  set_xy_projection(vs2, {1, 1, 1});
  return build_quadgraph(std::move(vs2), std::move(fs));
}

Quadgraph gen_zd_quadrants3(int R) {
  return quadrants_build(R, {{0, 1, 1, 1}, {0, 2, 1, 1}, {1, 2, 1, 1}});
}

Quadgraph gen_zd_quadrants6(int R) {
  return quadrants_build(R, {{0, 1, 1, -1},
                             {0, 1, -1, 1},
                             {0, 2, 1, -1},
                             {0, 2, -1, 1},
                             {1, 2, 1, -1},
                             {1, 2, -1, 1}});
}

}  // namespace qg
