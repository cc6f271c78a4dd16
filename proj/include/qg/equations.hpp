#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qg/graph.hpp"

namespace qg {

enum class EqKind {
  DKdV,              // (v12 - v)(v1 - v2) = a1 - a2
  Wave,              // v12 - v1 - v2 + v = 0
  NonConsistentDemo  // deliberately broken: fails 3D consistency
};

struct EquationInfo {
  EqKind kind;
  const char* name;
  int eps, sigma;      // D4 signs: arg swap / reflection
  bool has_splitting;  // Q at a1==a2 vanishes on both diagonal coincidences
  bool consistent3d;
};

const EquationInfo& equation_info(EqKind k);
EqKind equation_by_name(const std::string& name);

// affine in each of the four corner values
template <class T>
T eq_eval(EqKind k, const T& v, const T& v1, const T& v2, const T& v12, const T& a1,
          const T& a2) {
  switch (k) {
    case EqKind::DKdV:
      return (v12 - v) * (v1 - v2) - (a1 - a2);
    case EqKind::Wave:
      return v12 - v1 - v2 + v;
    case EqKind::NonConsistentDemo:
      return (v12 - v) * (v1 - v2) - (a1 - a2) + v1 * v2;
  }
  return T(0);
}

// residual of a stored face tuple (t0,t1,t2,t3): corner roles are
// (v,v1,v2,v12) = (t0,t1,t3,t2), a1 = param across (t0,t1), a2 across (t1,t2)
template <class T>
T face_residual(EqKind k, const std::array<T, 4>& t, const T& a1, const T& a2) {
  return eq_eval<T>(k, t[0], t[1], t[3], t[2], a1, a2);
}

Rat face_residual_sol(const Quadgraph& g, const StripSet& ss, EqKind k,
                      const std::map<Vid, Rat>& sol, Fid f);

template <class T>
struct Solved {
  bool ok;
  T value;
};

// solve the single unknown corner; roles 0..3 = v,v1,v2,v12. Exploits Q being
// affine in each argument: x = -Q(0) / (Q(1) - Q(0)).
template <class T>
Solved<T> solve_corner(EqKind k, int role, std::array<T, 4> vals, const T& a1, const T& a2) {
  vals[role] = T(0);
  T b = eq_eval<T>(k, vals[0], vals[1], vals[2], vals[3], a1, a2);
  vals[role] = T(1);
  T a = eq_eval<T>(k, vals[0], vals[1], vals[2], vals[3], a1, a2) - b;
  if (a == T(0)) return {false, T(0)};
  return {true, -b / a};
}

// corner value across a cube: v123 via one of the three closure orders
template <class T>
T compute_v123(EqKind k, const T& v, const T& v1, const T& v2, const T& v3, const T& a1,
               const T& a2, const T& a3, int order) {
  auto shift = [&](const T& base, const T& x, const T& y, const T& ax, const T& ay) {
    Solved<T> s = solve_corner<T>(k, 3, {base, x, y, T(0)}, ax, ay);
    if (!s.ok) throw Error(Err::Singular, "degenerate elementary quad");
    return s.value;
  };
  T v12 = shift(v, v1, v2, a1, a2);
  T v13 = shift(v, v1, v3, a1, a3);
  T v23 = shift(v, v2, v3, a2, a3);
  switch (order) {
    case 0:
      return shift(v1, v12, v13, a2, a3);
    case 1:
      return shift(v2, v12, v23, a1, a3);
    case 2:
      return shift(v3, v13, v23, a1, a2);
  }
  throw Error(Err::BadInput, "order must be 0,1,2");
}

// closed form for the consistent cube corner; independent of v
template <class T>
T dkdv_v123_closed(const T& v1, const T& v2, const T& v3, const T& a1, const T& a2,
                   const T& a3) {
  T num = (a1 - a2) * v1 * v2 + (a3 - a1) * v3 * v1 + (a2 - a3) * v2 * v3;
  T den = (a3 - a2) * v1 + (a1 - a3) * v2 + (a2 - a1) * v3;
  if (den == T(0)) throw Error(Err::Singular, "closed-form denominator vanished");
  return num / den;
}

// sampled-identity checks (exact rationals)
std::pair<int, int> check_d4_symmetry(EqKind k, std::uint64_t seed = 7);
bool check_3d_consistency(EqKind k, int samples = 40, std::uint64_t seed = 11);
// affine corners + D4 + splitting + consistency flags all as registered
void validate_equation(EqKind k);

// Darboux-style transformation with spectral parameter lambda: the new field
// solves Q on every edge Q(v_i, v_j, w_i, w_j; a_ij, lambda) = 0. Solved on a
// BFS tree from the seeds, then every edge and face is re-verified
// (PathDependent when the equation is not 3D consistent).
std::map<Vid, Rat> backlund_transform(const Quadgraph& g, const StripSet& ss, EqKind k,
                                      const std::map<Vid, Rat>& sol, const Rat& lambda,
                                      const std::vector<std::pair<Vid, Rat>>& seeds,
                                      const std::set<Vid>* restrict_to = nullptr);

// value at path end when the transform is chained edge by edge along `path`
Rat bt_value_along_path(const Quadgraph& g, const StripSet& ss, EqKind k,
                        const std::map<Vid, Rat>& sol, const Rat& lambda, const Path& path,
                        const Rat& seed_value);

// recover the pre-image: given the transformed field everywhere and the
// original value at the seeds, solve Q(v_i, v_j, w_i, w_j) for v edge by edge
std::map<Vid, Rat> backlund_inverse(const Quadgraph& g, const StripSet& ss, EqKind k,
                                    const std::map<Vid, Rat>& transformed, const Rat& lambda,
                                    const std::vector<std::pair<Vid, Rat>>& seeds,
                                    const std::set<Vid>* restrict_to = nullptr);

}  // namespace qg
