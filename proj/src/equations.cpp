#include "qg/equations.hpp"

#include <algorithm>
#include <queue>

namespace qg {

static const EquationInfo kEquations[] = {
    {EqKind::DKdV, "dkdv", -1, +1, true, true},
    {EqKind::Wave, "wave", +1, -1, false, true},
    {EqKind::NonConsistentDemo, "nonconsistent-demo", 0, 0, false, false},
};

const EquationInfo& equation_info(EqKind k) {
  for (const auto& e : kEquations)
    if (e.kind == k) return e;
  throw Error(Err::BadInput, "unknown equation kind");
}

EqKind equation_by_name(const std::string& name) {
  for (const auto& e : kEquations)
    if (name == e.name) return e.kind;
  throw Error(Err::BadInput, "unknown equation: " + name);
}

Rat face_residual_sol(const Quadgraph& g, const StripSet& ss, EqKind k,
                      const std::map<Vid, Rat>& sol, Fid f) {
  const auto& t = g.faces[f].t;
  Rat a1 = edge_param(g, ss, g.face_edges[f][0]);
  Rat a2 = edge_param(g, ss, g.face_edges[f][1]);
  return face_residual<Rat>(k, {sol.at(t[0]), sol.at(t[1]), sol.at(t[2]), sol.at(t[3])}, a1,
                            a2);
}

std::pair<int, int> check_d4_symmetry(EqKind k, std::uint64_t seed) {
  RatRng rng(seed);
  int eps = 0, sigma = 0;
  for (int trial = 0; trial < 12; trial++) {
    Rat v = rng.next(), v1 = rng.next(), v2 = rng.next(), v12 = rng.next();
    Rat a1 = rng.next(), a2 = rng.next();
    Rat q = eq_eval<Rat>(k, v, v1, v2, v12, a1, a2);
    Rat qe = eq_eval<Rat>(k, v, v2, v1, v12, a2, a1);
    Rat qs = eq_eval<Rat>(k, v1, v, v12, v2, a1, a2);
    auto fit = [](int& sign, const Rat& lhs, const Rat& rhs) {
      if (lhs == rhs) {
        if (sign == 0) sign = +1;
        return sign == +1;
      }
      if (lhs == -rhs) {
        if (sign == 0) sign = -1;
        return sign == -1;
      }
      return false;
    };
    if (!fit(eps, qe, q) || !fit(sigma, qs, q))
      throw Error(Err::BadInput, "equation is not D4 symmetric");
  }
  return {eps, sigma};
}

bool check_3d_consistency(EqKind k, int samples, std::uint64_t seed) {
  RatRng rng(seed);
  int done = 0, attempts = 0;
  while (done < samples) {
    if (++attempts > samples * 100)
      throw Error(Err::Internal, "could not draw nondegenerate consistency samples");
    Rat v = rng.next(99, 9), v1 = rng.next(99, 9), v2 = rng.next(99, 9), v3 = rng.next(99, 9);
    Rat a1 = rng.next(99, 9), a2 = rng.next(99, 9), a3 = rng.next(99, 9);
    try {
      Rat r0 = compute_v123<Rat>(k, v, v1, v2, v3, a1, a2, a3, 0);
      Rat r1 = compute_v123<Rat>(k, v, v1, v2, v3, a1, a2, a3, 1);
      Rat r2 = compute_v123<Rat>(k, v, v1, v2, v3, a1, a2, a3, 2);
      if (r0 != r1 || r1 != r2) return false;
      done++;
    } catch (const Error& e) {
      if (e.code != Err::Singular) throw;  // degenerate draw, try again
    }
  }
  return true;
}

void validate_equation(EqKind k) {
  const EquationInfo& info = equation_info(k);
  RatRng rng(23);

  // affine in each corner: second difference vanishes
  for (int role = 0; role < 4; role++)
    for (int trial = 0; trial < 4; trial++) {
      std::array<Rat, 4> t{rng.next(), rng.next(), rng.next(), rng.next()};
      Rat a1 = rng.next(), a2 = rng.next();
      auto at = [&](long x) {
        auto u = t;
        u[role] = rat(x);
        return eq_eval<Rat>(k, u[0], u[1], u[2], u[3], a1, a2);
      };
      if (at(0) - 2 * at(1) + at(2) != 0)
        throw Error(Err::BadInput, "equation is not affine in corner " + std::to_string(role));
    }

  if (info.eps != 0) {
    auto [eps, sigma] = check_d4_symmetry(k);
    if (eps != info.eps || sigma != info.sigma)
      throw Error(Err::Internal, "registered D4 signs are wrong");
  }

  // splitting: at a1 == a2 the residual must vanish identically on v12 == v
  // and on v1 == v2
  bool splits = true;
  for (int trial = 0; trial < 8 && splits; trial++) {
    Rat a = rng.next(), w = rng.next(), x = rng.next(), y = rng.next();
    if (eq_eval<Rat>(k, w, x, y, w, a, a) != 0) splits = false;   // v12 == v
    if (eq_eval<Rat>(k, w, x, x, y, a, a) != 0) splits = false;   // v1 == v2
  }
  if (splits != info.has_splitting)
    throw Error(Err::Internal, "registered splitting flag is wrong");

  if (check_3d_consistency(k) != info.consistent3d)
    throw Error(Err::Internal, "registered consistency flag is wrong");
}

namespace {

// one transform step across edge (i known -> j): unknown w_j in
// Q(v_i, v_j, w_i, w_j; a_ij, lambda) = 0
Rat bt_step(const Quadgraph& g, const StripSet& ss, EqKind k, const std::map<Vid, Rat>& sol,
            const Rat& lambda, Vid i, Vid j, const Rat& wi) {
  Rat a = edge_param(g, ss, g.eid(i, j));
  Solved<Rat> s = solve_corner<Rat>(k, 3, {sol.at(i), sol.at(j), wi, Rat(0)}, a, lambda);
  if (!s.ok)
    throw Error(Err::Singular, "transform step degenerate on edge (" + std::to_string(i) +
                                   "," + std::to_string(j) + ")");
  return s.value;
}

}  // namespace

std::map<Vid, Rat> backlund_transform(const Quadgraph& g, const StripSet& ss, EqKind k,
                                      const std::map<Vid, Rat>& sol, const Rat& lambda,
                                      const std::vector<std::pair<Vid, Rat>>& seeds,
                                      const std::set<Vid>* restrict_to) {
  auto inside = [&](Vid v) { return !restrict_to || restrict_to->count(v); };

  std::map<Vid, std::vector<Vid>> adj;
  for (const Edge& e : g.edges)
    if (inside(e.a) && inside(e.b)) {
      adj[e.a].push_back(e.b);
      adj[e.b].push_back(e.a);
    }

  std::map<Vid, Rat> w;
  std::queue<Vid> q;
  for (auto& [v, val] : seeds) {
    if (!inside(v)) throw Error(Err::BadInput, "seed outside restricted region");
    w[v] = val;
    q.push(v);
  }
  while (!q.empty()) {
    Vid i = q.front();
    q.pop();
    for (Vid j : adj[i])
      if (!w.count(j)) {
        w[j] = bt_step(g, ss, k, sol, lambda, i, j, w.at(i));
        q.push(j);
      }
  }
  for (auto& [v, info] : g.verts)
    if (inside(v) && !w.count(v) && adj.count(v))
      throw Error(Err::BadInput, "transform did not reach vertex " + std::to_string(v));

  // every edge relation must close up, not only the tree ones
  for (const Edge& e : g.edges)
    if (inside(e.a) && inside(e.b)) {
      Rat a = edge_param(g, ss, g.eid(e.a, e.b));
      if (eq_eval<Rat>(k, sol.at(e.a), sol.at(e.b), w.at(e.a), w.at(e.b), a, lambda) != 0)
        throw Error(Err::PathDependent, "transform inconsistent on edge (" +
                                            std::to_string(e.a) + "," + std::to_string(e.b) +
                                            ")");
    }
  // and the transformed field must still solve the face equations
  for (Fid f = 0; f < (Fid)g.faces.size(); f++) {
    const auto& t = g.faces[f].t;
    if (!(inside(t[0]) && inside(t[1]) && inside(t[2]) && inside(t[3]))) continue;
    Rat a1 = edge_param(g, ss, g.face_edges[f][0]);
    Rat a2 = edge_param(g, ss, g.face_edges[f][1]);
    if (face_residual<Rat>(k, {w.at(t[0]), w.at(t[1]), w.at(t[2]), w.at(t[3])}, a1, a2) != 0)
      throw Error(Err::PathDependent, "transformed field breaks face " + std::to_string(f), f);
  }
  return w;
}

Rat bt_value_along_path(const Quadgraph& g, const StripSet& ss, EqKind k,
                        const std::map<Vid, Rat>& sol, const Rat& lambda, const Path& path,
                        const Rat& seed_value) {
  check_path(g, path);
  Rat w = seed_value;
  for (size_t i = 0; i + 1 < path.size(); i++)
    w = bt_step(g, ss, k, sol, lambda, path[i], path[i + 1], w);
  return w;
}

std::map<Vid, Rat> backlund_inverse(const Quadgraph& g, const StripSet& ss, EqKind k,
                                    const std::map<Vid, Rat>& transformed, const Rat& lambda,
                                    const std::vector<std::pair<Vid, Rat>>& seeds,
                                    const std::set<Vid>* restrict_to) {
  auto inside = [&](Vid v) { return !restrict_to || restrict_to->count(v); };
  std::map<Vid, std::vector<Vid>> adj;
  for (const Edge& e : g.edges)
    if (inside(e.a) && inside(e.b)) {
      adj[e.a].push_back(e.b);
      adj[e.b].push_back(e.a);
    }
  std::map<Vid, Rat> v;
  std::queue<Vid> q;
  for (auto& [s, val] : seeds) {
    v[s] = val;
    q.push(s);
  }
  while (!q.empty()) {
    Vid i = q.front();
    q.pop();
    for (Vid j : adj[i])
      if (!v.count(j)) {
        Rat a = edge_param(g, ss, g.eid(i, j));
        Solved<Rat> s =
            solve_corner<Rat>(k, 1, {v.at(i), Rat(0), transformed.at(i), transformed.at(j)},
                              a, lambda);
        if (!s.ok)
          throw Error(Err::Singular, "inverse transform degenerate on edge (" +
                                         std::to_string(i) + "," + std::to_string(j) + ")");
        v[j] = s.value;
        q.push(j);
      }
  }
  for (const Edge& e : g.edges)
    if (inside(e.a) && inside(e.b)) {
      Rat a = edge_param(g, ss, g.eid(e.a, e.b));
      if (eq_eval<Rat>(k, v.at(e.a), v.at(e.b), transformed.at(e.a), transformed.at(e.b), a,
                       lambda) != 0)
        throw Error(Err::PathDependent, "inverse transform inconsistent on edge (" +
                                            std::to_string(e.a) + "," +
                                            std::to_string(e.b) + ")");
    }
  return v;
}

}  // namespace qg
