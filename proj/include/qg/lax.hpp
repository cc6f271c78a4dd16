#pragma once

#include <array>
#include <string>
#include <vector>

#include "qg/equations.hpp"
#include "qg/generators.hpp"
#include "qg/graph.hpp"

namespace qg {

// dense univariate polynomial in the spectral variable, ascending coefficients
struct Poly {
  std::vector<Rat> c;
};

Poly poly_const(const Rat& a);
Poly poly_linear(const Rat& a);  // a - lambda
int poly_deg(const Poly& p);     // -1 for zero
bool poly_is_zero(const Poly& p);
bool poly_eq(const Poly& a, const Poly& b);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_pow(const Poly& a, int n);
Rat poly_eval(const Poly& p, const Rat& x);
// p = (a - lambda) q + r; returns q, sets exact = (r == 0)
Poly poly_divide_linear(const Poly& p, const Rat& a, bool& exact);

struct PolyMat2 {
  Poly e[2][2];
};
using RatMat2 = std::array<std::array<Rat, 2>, 2>;

PolyMat2 pm_identity();
PolyMat2 pm_mul(const PolyMat2& a, const PolyMat2& b);
PolyMat2 pm_adj(const PolyMat2& m);
Poly pm_det(const PolyMat2& m);
RatMat2 pm_eval(const PolyMat2& m, const Rat& x);
bool pm_eq(const PolyMat2& a, const PolyMat2& b);
bool pm_is_scalar(const PolyMat2& m, const Poly& s);

// transition matrix attached to the directed edge i -> j
PolyMat2 lax_edge_matrix(const Rat& vi, const Rat& vj, const Rat& alpha);

// ordered product along a path, later edges multiply from the left
PolyMat2 path_product(const Quadgraph& g, const StripSet& ss, EqKind k,
                      const std::map<Vid, Rat>& sol, const Path& p);

// expected scalar for a closed walk: prod over strips of (lambda - alpha)^(ind/2)
Poly closed_walk_scalar(const Quadgraph& g, const StripSet& ss, const Path& walk);

// peel transition matrices off a product, recovering boundary values:
// at each parameter the matrix must drop rank, its kernel (x, y) gives the
// next value x/y, and the matching factor must divide out exactly
struct Refactor {
  std::vector<Rat> values;
};
Refactor refactorize(PolyMat2 m, const Rat& v_start, const std::vector<Rat>& alphas);

// transparency check for a weak defect: transport the plain solution along the
// west+south boundary, then refactor along the defect's north+east parameter
// sequence and compare with the plain values there
struct WeakLaxReport {
  Path p2;
  std::vector<Rat> recovered;
  std::vector<Rat> plain_on_p2;
  bool matches_plain = false;
};
WeakLaxReport weak_defect_lax_check(const DefectGraph& d, EqKind k,
                                    const std::vector<Rat>& data);

}  // namespace qg
