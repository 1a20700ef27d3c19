#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "ifc/ifn.hpp"

// Reference formulas used by the tests. They are written from the defining
// equations directly and share no code with the library.
namespace oracle {

struct P {
  double u, v;
};

inline P add(P a, P b) { return {a.u + b.u - a.u * b.u, a.v * b.v}; }
inline P mul(P a, P b) { return {a.u * b.u, a.v + b.v - a.v * b.v}; }
inline P scalar(double l, P a) { return {1 - std::pow(1 - a.u, l), std::pow(a.v, l)}; }
inline P power(P a, double l) { return {std::pow(a.u, l), 1 - std::pow(1 - a.v, l)}; }

inline bool is_ifn(P p, double tol = 1e-12) {
  return p.u >= -tol && p.v >= -tol && p.u <= 1 + tol && p.v <= 1 + tol && p.u + p.v <= 1 + tol;
}

// a = b + g solved for g; valid when g is itself an IFN.
inline bool sub_solution(P a, P b, P& g) {
  if (b.u >= 1 || b.v <= 0) return false;
  g = {(a.u - b.u) / (1 - b.u), a.v / b.v};
  return is_ifn(g, 1e-12);
}

// a = b * g solved for g.
inline bool div_solution(P a, P b, P& g) {
  if (b.v >= 1 || b.u <= 0) return false;
  g = {a.u / b.u, (a.v - b.v) / (1 - b.v)};
  return is_ifn(g, 1e-12);
}

// Mean-value point of X^l on [m, m'] (l != 1): l m0^(l-1) = q with q the
// membership difference quotient, and l (1-v0)^(l-1) = r for non-membership.
inline double mvt_power_mu(double q, double l) { return std::pow(q / l, 1 / (l - 1)); }
inline double mvt_power_v(double r, double l) { return 1 - std::pow(r / l, 1 / (l - 1)); }

}  // namespace oracle

namespace testgen {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20241016);
  return gen;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

// Uniform over the IFN triangle, optionally kept away from the edges.
inline ifc::IFN random_ifn(double margin = 0.0) {
  for (;;) {
    const double u = uniform(margin, 1 - margin);
    const double v = uniform(margin, 1 - margin);
    if (u + v <= 1 - margin) return ifc::IFN(u, v);
  }
}

inline oracle::P as_p(const ifc::IFN& a) { return {a.u(), a.v()}; }

inline double gap(oracle::P a, const ifc::IFN& b) {
  return std::max(std::abs(a.u - b.u()), std::abs(a.v - b.v()));
}

inline double gap(const ifc::IFN& a, const ifc::IFN& b) { return gap(as_p(a), b); }

}  // namespace testgen
