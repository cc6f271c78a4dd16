#include "qg/lax.hpp"

#include <algorithm>

#include "qg/cauchy.hpp"
#include "qg/solver.hpp"

namespace qg {

namespace {
void trim(Poly& p) {
  while (!p.c.empty() && p.c.back() == 0) p.c.pop_back();
}
}  // namespace

Poly poly_const(const Rat& a) {
  Poly p{{a}};
  trim(p);
  return p;
}

Poly poly_linear(const Rat& a) { return Poly{{a, Rat(-1)}}; }

int poly_deg(const Poly& p) { return (int)p.c.size() - 1; }

bool poly_is_zero(const Poly& p) { return p.c.empty(); }

bool poly_eq(const Poly& a, const Poly& b) { return a.c == b.c; }

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  trim(r);
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  trim(r);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.c.empty() || b.c.empty()) return {};
  Poly r;
  r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  trim(r);
  return r;
}

Poly poly_pow(const Poly& a, int n) {
  Poly r = poly_const(Rat(1));
  for (int i = 0; i < n; ++i) r = poly_mul(r, a);
  return r;
}

Rat poly_eval(const Poly& p, const Rat& x) {
  Rat r(0);
  for (size_t i = p.c.size(); i-- > 0;) r = r * x + p.c[i];
  return r;
}

Poly poly_divide_linear(const Poly& p, const Rat& a, bool& exact) {
  if (p.c.empty()) {
    exact = true;
    return {};
  }
  size_t n = p.c.size() - 1;  // degree
  Poly q;
  if (n == 0) {
    exact = (p.c[0] == 0);
    return {};
  }
  q.c.assign(n, Rat(0));
  q.c[n - 1] = -p.c[n];
  for (size_t i = n - 1; i >= 1; --i) q.c[i - 1] = a * q.c[i] - p.c[i];
  exact = (a * q.c[0] - p.c[0] == 0);
  trim(q);
  return q;
}

PolyMat2 pm_identity() {
  PolyMat2 m;
  m.e[0][0] = poly_const(Rat(1));
  m.e[1][1] = poly_const(Rat(1));
  return m;
}

PolyMat2 pm_mul(const PolyMat2& a, const PolyMat2& b) {
  PolyMat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.e[i][j] = poly_add(poly_mul(a.e[i][0], b.e[0][j]), poly_mul(a.e[i][1], b.e[1][j]));
  return r;
}

PolyMat2 pm_adj(const PolyMat2& m) {
  PolyMat2 r;
  r.e[0][0] = m.e[1][1];
  r.e[1][1] = m.e[0][0];
  r.e[0][1] = poly_sub({}, m.e[0][1]);
  r.e[1][0] = poly_sub({}, m.e[1][0]);
  return r;
}

Poly pm_det(const PolyMat2& m) {
  return poly_sub(poly_mul(m.e[0][0], m.e[1][1]), poly_mul(m.e[0][1], m.e[1][0]));
}

RatMat2 pm_eval(const PolyMat2& m, const Rat& x) {
  RatMat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = poly_eval(m.e[i][j], x);
  return r;
}

bool pm_eq(const PolyMat2& a, const PolyMat2& b) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!poly_eq(a.e[i][j], b.e[i][j])) return false;
  return true;
}

bool pm_is_scalar(const PolyMat2& m, const Poly& s) {
  return poly_eq(m.e[0][0], s) && poly_eq(m.e[1][1], s) && poly_is_zero(m.e[0][1]) &&
         poly_is_zero(m.e[1][0]);
}

PolyMat2 lax_edge_matrix(const Rat& vi, const Rat& vj, const Rat& alpha) {
  PolyMat2 m;
  m.e[0][0] = poly_const(-vi);
  m.e[0][1] = Poly{{vi * vj + alpha, Rat(-1)}};
  trim(m.e[0][1]);
  m.e[1][0] = poly_const(Rat(-1));
  m.e[1][1] = poly_const(vj);
  return m;
}

PolyMat2 path_product(const Quadgraph& g, const StripSet& ss, EqKind k,
                      const std::map<Vid, Rat>& sol, const Path& p) {
  if (k != EqKind::DKdV)
    throw Error(Err::BadInput, "transition matrices are wired for the lattice KdV only");
  check_path(g, p);
  PolyMat2 m = pm_identity();
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    Rat a = edge_param(g, ss, g.eid(p[i], p[i + 1]));
    m = pm_mul(lax_edge_matrix(sol.at(p[i]), sol.at(p[i + 1]), a), m);
  }
  return m;
}

Poly closed_walk_scalar(const Quadgraph& g, const StripSet& ss, const Path& walk) {
  if (walk.size() < 2 || walk.front() != walk.back())
    throw Error(Err::BadPath, "walk is not closed");
  Poly r = poly_const(Rat(1));
  for (size_t s = 0; s < ss.strips.size(); ++s) {
    int ind = strip_path_index(ss.strips[s], g, walk);
    if (ind % 2)
      throw Error(Err::Internal, "closed walk crosses a strip an odd number of times");
    if (ind == 0) continue;
    Rat a = edge_param(g, ss, ss.strips[s].tedges[0]);
    r = poly_mul(r, poly_pow(Poly{{-a, Rat(1)}}, ind / 2));  // (lambda - alpha)^(ind/2)
  }
  return r;
}

Refactor refactorize(PolyMat2 m, const Rat& v_start, const std::vector<Rat>& alphas) {
  Refactor out;
  out.values.push_back(v_start);
  Rat prev = v_start;
  for (size_t step = 0; step < alphas.size(); ++step) {
    const Rat& a = alphas[step];
    RatMat2 num = pm_eval(m, a);
    bool all_zero = num[0][0] == 0 && num[0][1] == 0 && num[1][0] == 0 && num[1][1] == 0;
    if (all_zero)
      throw Error(Err::RankDrop, "matrix vanishes at parameter step " + std::to_string(step));
    Rat det = num[0][0] * num[1][1] - num[0][1] * num[1][0];
    if (det != 0)
      throw Error(Err::RankDrop, "no rank drop at parameter step " + std::to_string(step));
    int row = (num[0][0] != 0 || num[0][1] != 0) ? 0 : 1;
    Rat kx = num[row][1], ky = -num[row][0];
    // the other row must annihilate the kernel vector too
    if (num[1 - row][0] * kx + num[1 - row][1] * ky != 0)
      throw Error(Err::Internal, "rank-one matrix with inconsistent rows");
    if (ky == 0)
      throw Error(Err::Singular, "kernel direction at infinity at step " + std::to_string(step));
    Rat next = kx / ky;
    PolyMat2 peeled = pm_mul(m, pm_adj(lax_edge_matrix(prev, next, a)));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        bool exact = false;
        peeled.e[i][j] = poly_divide_linear(peeled.e[i][j], a, exact);
        if (!exact)
          throw Error(Err::NonDivisible, "factor does not divide out at step " + std::to_string(step));
      }
    m = peeled;
    prev = next;
    out.values.push_back(next);
  }
  if (!pm_is_scalar(m, poly_const(Rat(1))))
    throw Error(Err::NonDivisible, "product not exhausted after the last factor");
  return out;
}

WeakLaxReport weak_defect_lax_check(const DefectGraph& d, EqKind k,
                                    const std::vector<Rat>& data) {
  StripSet dss = trace_strips(d.g);
  WeakCheck wc = is_weak_defect(d, dss);
  if (!wc.weak)
    throw Error(Err::NotWeak, "defect is not weak: " + wc.reason, -1, wc.witness_strip);

  Path p1 = lattice_path(d.w, {{0, d.h}, {0, 0}, {d.w, 0}});
  Path p2 = lattice_path(d.w, {{0, d.h}, {d.w, d.h}, {d.w, 0}});

  Quadgraph host = plain_host(d);
  StripSet hss = trace_strips(host);
  PropagateResult plain = propagate(host, hss, k, p1, data);
  if (!plain.complete) throw Error(Err::Internal, "plain lattice did not close");

  PolyMat2 m = path_product(host, hss, k, plain.val, p1);
  std::vector<Rat> alphas;
  for (size_t i = 0; i + 1 < p2.size(); ++i)
    alphas.push_back(edge_param(d.g, dss, d.g.eid(p2[i], p2[i + 1])));

  WeakLaxReport rep;
  rep.p2 = p2;
  rep.recovered = refactorize(m, plain.val.at(p2[0]), alphas).values;
  for (Vid v : p2) rep.plain_on_p2.push_back(plain.val.at(v));
  rep.matches_plain = (rep.recovered == rep.plain_on_p2);
  return rep;
}

}  // namespace qg
