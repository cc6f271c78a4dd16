#include "qg/solitons.hpp"

#include <cmath>
#include <cstdlib>

#include "qg/error.hpp"

namespace qg {

double kink_mu(double step, double k) {
  if (!(std::fabs(step) > std::fabs(k)))
    throw Error(Err::RealityViolation, "step magnitude must exceed |k| for a real phase");
  return 0.5 * std::log((step + k) / (step - k));
}

double kink_v(const StraightKink& s, double m, double n) {
  double mu = kink_mu(s.a, s.k), nu = kink_mu(s.b, s.k);
  return s.a * m + s.b * n + s.p * s.x + s.q -
         s.k * std::tanh(s.k * s.x + mu * m + nu * n + s.xi);
}

double kink_dvdx(const StraightKink& s, double m, double n) {
  double mu = kink_mu(s.a, s.k), nu = kink_mu(s.b, s.k);
  double th = s.k * s.x + mu * m + nu * n + s.xi;
  double sech = 1.0 / std::cosh(th);
  return s.p - s.k * s.k * sech * sech;
}

double kink_u(const StraightKink& s, double m, double n) { return -2.0 * kink_dvdx(s, m, n); }

double AxisSchedule::offset(int layer) const {
  int pos = layer - lo;
  if (pos < 0 || pos >= (int)a.size()) throw Error(Err::BadInput, "layer outside axis schedule");
  return a[pos];
}

double AxisSchedule::phase(int layer) const {
  int pos = layer - lo;
  if (pos < 0 || pos >= (int)nu.size()) throw Error(Err::BadInput, "layer outside axis schedule");
  return nu[pos];
}

double AxisSchedule::step(int layer) const { return offset(layer + 1) - offset(layer); }

double AxisSchedule::alpha(int layer, double delta) const {
  double st = step(layer);
  return st * st - delta;
}

AxisSchedule make_axis_const(double step, double k, int lo, int hi) {
  AxisSchedule ax;
  ax.lo = lo;
  double mu = kink_mu(step, k);
  for (int i = lo; i <= hi; ++i) {
    ax.a.push_back(step * i);
    ax.nu.push_back(mu * i);
  }
  return ax;
}

AxisSchedule make_axis_steps(const std::vector<double>& steps, double k, int lo) {
  AxisSchedule ax;
  ax.lo = lo;
  ax.a.push_back(0);
  ax.nu.push_back(0);
  for (double st : steps) {
    ax.a.push_back(ax.a.back() + st);
    ax.nu.push_back(ax.nu.back() + kink_mu(st, k));
  }
  return ax;
}

double multikink_v(const MultiKink& s, const std::vector<int>& z) {
  if (z.size() != s.axes.size()) throw Error(Err::BadInput, "point dimension mismatch");
  double off = s.p * s.x + s.q, th = s.k * s.x + s.xi;
  for (size_t i = 0; i < z.size(); ++i) {
    off += s.axes[i].offset(z[i]);
    th += s.axes[i].phase(z[i]);
  }
  return off - s.k * std::tanh(th);
}

double multikink_u(const MultiKink& s, const std::vector<int>& z) {
  double th = s.k * s.x + s.xi;
  for (size_t i = 0; i < z.size(); ++i) th += s.axes[i].phase(z[i]);
  double sech = 1.0 / std::cosh(th);
  return -2.0 * (s.p - s.k * s.k * sech * sech);
}

double two_kink_v(const TwoKink& s, double m, double n) {
  if (!(s.k2 > s.k1 && s.k1 > 0))
    throw Error(Err::SingularDenominator, "two-kink needs k2 > k1 > 0");
  double mu1 = kink_mu(s.a, s.k1), nu1 = kink_mu(s.b, s.k1);
  double mu2 = kink_mu(s.a, s.k2), nu2 = kink_mu(s.b, s.k2);
  double th1 = s.k1 * s.x + mu1 * m + nu1 * n + s.phi1;
  double th2 = s.k2 * s.x + mu2 * m + nu2 * n + s.phi2;
  // coth branch: |denominator| >= k2 - k1 > 0, the pole at th2 = 0 cancels
  double den = s.k2 / std::tanh(th2) - s.k1 * std::tanh(th1);
  if (den == 0) throw Error(Err::SingularDenominator, "two-kink denominator vanished");
  double v0 = s.a * m + s.b * n + s.p * s.x + s.q;
  return v0 - (s.k2 * s.k2 - s.k1 * s.k1) / den;
}

namespace {
double face_residual(double v, double v1, double v2, double v12, double al, double be) {
  return (v12 - v) * (v1 - v2) - (al - be);
}
}  // namespace

double kink_residual_max(const StraightKink& s, int m0, int m1, int n0, int n1) {
  double al = s.a * s.a, be = s.b * s.b;
  double worst = 0;
  for (int m = m0; m < m1; ++m)
    for (int n = n0; n < n1; ++n)
      worst = std::max(worst, std::fabs(face_residual(kink_v(s, m, n), kink_v(s, m + 1, n),
                                                      kink_v(s, m, n + 1), kink_v(s, m + 1, n + 1),
                                                      al, be)));
  return worst;
}

double two_kink_residual_max(const TwoKink& s, int m0, int m1, int n0, int n1) {
  double al = s.a * s.a, be = s.b * s.b;
  double worst = 0;
  for (int m = m0; m < m1; ++m)
    for (int n = n0; n < n1; ++n)
      worst = std::max(worst, std::fabs(face_residual(
                                  two_kink_v(s, m, n), two_kink_v(s, m + 1, n),
                                  two_kink_v(s, m, n + 1), two_kink_v(s, m + 1, n + 1), al, be)));
  return worst;
}

double multikink_lattice_residual_max(const MultiKink& s, int m0, int m1, int n0, int n1) {
  if (s.axes.size() != 2) throw Error(Err::BadInput, "lattice scan needs two axes");
  double worst = 0;
  for (int m = m0; m < m1; ++m)
    for (int n = n0; n < n1; ++n) {
      double al = s.axes[0].alpha(m, s.delta), be = s.axes[1].alpha(n, s.delta);
      worst = std::max(worst,
                       std::fabs(face_residual(multikink_v(s, {m, n}), multikink_v(s, {m + 1, n}),
                                               multikink_v(s, {m, n + 1}),
                                               multikink_v(s, {m + 1, n + 1}), al, be)));
    }
  return worst;
}

double multikink_graph_residual_max(const MultiKink& s, const Quadgraph& g) {
  auto coords = [&](Vid v) -> const std::vector<int>& {
    const VertexInfo& info = g.verts.at(v);
    if (info.z.size() != s.axes.size())
      throw Error(Err::BadInput, "vertex carries no usable integer coordinates");
    return info.z;
  };
  auto dir_of = [&](const std::vector<int>& za, const std::vector<int>& zb) {
    int dir = -1;
    for (size_t i = 0; i < za.size(); ++i) {
      int d = zb[i] - za[i];
      if (d == 0) continue;
      if (std::abs(d) != 1 || dir != -1)
        throw Error(Err::BadInput, "face edge is not a unit lattice step");
      dir = (int)i;
    }
    if (dir == -1) throw Error(Err::BadInput, "degenerate face edge");
    return dir;
  };
  double worst = 0;
  for (const Face& f : g.faces) {
    const auto& z0 = coords(f.t[0]);
    const auto& z1 = coords(f.t[1]);
    const auto& z2 = coords(f.t[2]);
    int di = dir_of(z0, z1), dj = dir_of(z1, z2);
    double al = s.axes[di].alpha(std::min(z0[di], z1[di]), s.delta);
    double be = s.axes[dj].alpha(std::min(z1[dj], z2[dj]), s.delta);
    worst = std::max(worst, std::fabs(face_residual(
                                multikink_v(s, z0), multikink_v(s, z1), multikink_v(s, coords(f.t[3])),
                                multikink_v(s, z2), al, be)));
  }
  return worst;
}

double u_equation_residual_max(const StraightKink& s, int m0, int m1, int n0, int n1) {
  double at = s.a * s.a - 2 * s.p, bt = s.b * s.b - 2 * s.p;
  double worst = 0;
  for (int m = m0; m < m1; ++m)
    for (int n = n0; n < n1; ++n) {
      double u = kink_u(s, m, n), u1 = kink_u(s, m + 1, n), u2 = kink_u(s, m, n + 1),
             u12 = kink_u(s, m + 1, n + 1);
      double d1 = u12 - u, d2 = u1 - u2;
      double t1 = 0.25 * d1 * d1 * d2 * d2;
      double t2 = -(at - bt) * d1 * d2 * (u + u1 + u2 + u12);
      double t3 = (at - bt) * (at - bt) * (d1 * d1 + d2 * d2);
      double t4 = 2 * (at * at - bt * bt) * d1 * d2;
      double scale = std::max(1.0, std::fabs(t1) + std::fabs(t2) + std::fabs(t3) + std::fabs(t4));
      worst = std::max(worst, std::fabs(t1 + t2 + t3 + t4) / scale);
    }
  return worst;
}

}  // namespace qg
