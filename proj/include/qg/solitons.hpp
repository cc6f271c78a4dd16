#pragma once

#include <vector>

#include "qg/graph.hpp"

namespace qg {

// phase increment for one step; real only when the step clears |k|
double kink_mu(double step, double k);

// travelling kink on the homogeneous lattice
struct StraightKink {
  double a = 1, b = 2, k = 0.3, p = 0, q = 0, x = 0, xi = 0;
};
double kink_v(const StraightKink& s, double m, double n);
double kink_u(const StraightKink& s, double m, double n);  // u = -2 dv/dx
double kink_dvdx(const StraightKink& s, double m, double n);

// cumulative offsets/phases along one lattice axis with variable steps
struct AxisSchedule {
  int lo = 0;              // first layer carrying a value
  std::vector<double> a;   // offsets, a[0] anchored to 0 at layer lo
  std::vector<double> nu;  // matching phases
  double offset(int layer) const;
  double phase(int layer) const;
  double step(int layer) const;                 // a(layer+1) - a(layer)
  double alpha(int layer, double delta) const;  // step^2 - delta
};
AxisSchedule make_axis_const(double step, double k, int lo, int hi);
AxisSchedule make_axis_steps(const std::vector<double>& steps, double k, int lo);

struct MultiKink {
  std::vector<AxisSchedule> axes;
  double k = 0.3, p = 0, q = 0, x = 0, xi = 0, delta = 0;
};
double multikink_v(const MultiKink& s, const std::vector<int>& z);
double multikink_u(const MultiKink& s, const std::vector<int>& z);

// two interacting kinks; needs k2 > k1 > 0, the fast phase rides the coth branch
struct TwoKink {
  double a = 1, b = 2, k1 = 0.3, k2 = 0.7, p = 0, q = 0, x = 0, phi1 = 0, phi2 = 0;
};
double two_kink_v(const TwoKink& s, double m, double n);

// residual scans over faces [m0,m1) x [n0,n1); absolute values
double kink_residual_max(const StraightKink& s, int m0, int m1, int n0, int n1);
double two_kink_residual_max(const TwoKink& s, int m0, int m1, int n0, int n1);
double multikink_lattice_residual_max(const MultiKink& s, int m0, int m1, int n0, int n1);
// faces read their directions and layers off the vertices' integer coordinates
double multikink_graph_residual_max(const MultiKink& s, const Quadgraph& g);
// quartic equation for the u-field, relative to the term magnitudes
double u_equation_residual_max(const StraightKink& s, int m0, int m1, int n0, int n1);

}  // namespace qg
