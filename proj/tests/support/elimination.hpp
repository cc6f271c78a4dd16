#pragma once

// Test-only cross-check: eliminate the interior of a small lattice symbolically.
// Initial data are affine in one indeterminate t; values become rational
// functions of t with exact coefficients, reduced by polynomial gcd at every
// step. Evaluating the result at a concrete t must reproduce the production
// solver run on the concrete data. Deliberately written against its own tiny
// rational-function arithmetic so it shares no code with the library.

#include <map>
#include <utility>
#include <vector>

#include "qg/generators.hpp"
#include "qg/rational.hpp"

namespace qgtest {

using qg::Rat;

struct TPoly {
  std::vector<Rat> c;  // ascending powers of t

  static TPoly zero() { return {}; }
  static TPoly constant(const Rat& a) {
    TPoly p;
    if (a != 0) p.c = {a};
    return p;
  }
  static TPoly affine(const Rat& a, const Rat& b) {  // a + b t
    TPoly p;
    p.c = {a, b};
    p.trim();
    return p;
  }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int deg() const { return (int)c.size() - 1; }
};

inline TPoly tp_add(const TPoly& a, const TPoly& b) {
  TPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < a.c.size(); i++) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); i++) r.c[i] += b.c[i];
  r.trim();
  return r;
}

inline TPoly tp_neg(const TPoly& a) {
  TPoly r = a;
  for (Rat& x : r.c) x = -x;
  return r;
}

inline TPoly tp_sub(const TPoly& a, const TPoly& b) { return tp_add(a, tp_neg(b)); }

inline TPoly tp_mul(const TPoly& a, const TPoly& b) {
  if (a.is_zero() || b.is_zero()) return TPoly::zero();
  TPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c.size(); i++)
    for (size_t j = 0; j < b.c.size(); j++) r.c[i + j] += a.c[i] * b.c[j];
  r.trim();
  return r;
}

// remainder of a by b (b nonzero)
inline TPoly tp_rem(TPoly a, const TPoly& b) {
  while (!a.is_zero() && a.deg() >= b.deg()) {
    Rat q = a.c.back() / b.c.back();
    int shift = a.deg() - b.deg();
    for (size_t i = 0; i < b.c.size(); i++) a.c[i + shift] -= q * b.c[i];
    a.trim();
  }
  return a;
}

inline TPoly tp_divexact(TPoly a, const TPoly& b) {
  TPoly q;
  if (a.is_zero()) return q;
  q.c.assign(a.deg() - b.deg() + 1, Rat(0));
  while (!a.is_zero() && a.deg() >= b.deg()) {
    Rat k = a.c.back() / b.c.back();
    int shift = a.deg() - b.deg();
    q.c[shift] = k;
    for (size_t i = 0; i < b.c.size(); i++) a.c[i + shift] -= k * b.c[i];
    a.trim();
  }
  return q;  // callers only divide by exact factors
}

inline TPoly tp_gcd(TPoly a, TPoly b) {
  while (!b.is_zero()) {
    TPoly r = tp_rem(a, b);
    a = b;
    b = r;
  }
  if (!a.is_zero()) {  // monic
    Rat lead = a.c.back();
    for (Rat& x : a.c) x /= lead;
  }
  return a;
}

inline Rat tp_eval(const TPoly& p, const Rat& t) {
  Rat r(0);
  for (size_t i = p.c.size(); i-- > 0;) r = r * t + p.c[i];
  return r;
}

struct TRatFn {
  TPoly n, d;  // d monic, nonzero

  static TRatFn from(const TPoly& num) {
    TRatFn f;
    f.n = num;
    f.d = TPoly::constant(Rat(1));
    return f;
  }
  void reduce() {
    if (n.is_zero()) {
      d = TPoly::constant(Rat(1));
      return;
    }
    TPoly g = tp_gcd(n, d);
    if (g.deg() > 0) {
      n = tp_divexact(n, g);
      d = tp_divexact(d, g);
    }
    Rat lead = d.c.back();
    if (lead != 1) {
      for (Rat& x : d.c) x /= lead;
      for (Rat& x : n.c) x /= lead;
    }
  }
};

inline TRatFn rf_add(const TRatFn& a, const TRatFn& b) {
  TRatFn r;
  r.n = tp_add(tp_mul(a.n, b.d), tp_mul(b.n, a.d));
  r.d = tp_mul(a.d, b.d);
  r.reduce();
  return r;
}

inline TRatFn rf_sub(const TRatFn& a, const TRatFn& b) {
  TRatFn r;
  r.n = tp_sub(tp_mul(a.n, b.d), tp_mul(b.n, a.d));
  r.d = tp_mul(a.d, b.d);
  r.reduce();
  return r;
}

inline TRatFn rf_div(const TRatFn& a, const TRatFn& b) {
  TRatFn r;
  r.n = tp_mul(a.n, b.d);
  r.d = tp_mul(a.d, b.n);
  r.reduce();
  return r;
}

inline Rat rf_eval(const TRatFn& f, const Rat& t) { return tp_eval(f.n, t) / tp_eval(f.d, t); }

// symbolic data along the west+south corner path of a w x h lattice, in path
// order (north end of the west column first)
inline std::map<qg::Vid, TRatFn> eliminate_dkdv_lattice(
    int w, int h, const std::vector<std::pair<Rat, Rat>>& data_affine,
    const std::vector<Rat>& cols, const std::vector<Rat>& rows) {
  std::map<qg::Vid, TRatFn> val;
  qg::Path p = qg::lattice_path(w, {{0, h}, {0, 0}, {w, 0}});
  for (size_t i = 0; i < p.size(); i++)
    val[p[i]] = TRatFn::from(TPoly::affine(data_affine[i].first, data_affine[i].second));
  for (int n = 1; n <= h; n++)
    for (int m = 1; m <= w; m++) {
      // v12 = v + (a - b) / (v1 - v2) on the cell with SW corner (m-1, n-1)
      const TRatFn& v = val.at(qg::lattice_vid(w, m - 1, n - 1));
      const TRatFn& v1 = val.at(qg::lattice_vid(w, m, n - 1));
      const TRatFn& v2 = val.at(qg::lattice_vid(w, m - 1, n));
      TRatFn gap = TRatFn::from(TPoly::constant(cols[m - 1] - rows[n - 1]));
      val[qg::lattice_vid(w, m, n)] = rf_add(v, rf_div(gap, rf_sub(v1, v2)));
    }
  return val;
}

}  // namespace qgtest
