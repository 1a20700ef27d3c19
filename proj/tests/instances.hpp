#pragma once

#include <string>

#include "ifc/iff.hpp"
#include "support.hpp"

// Random instances for the identity suites: X^l with l in [1,4] and scalar
// and shift images of it.
namespace testgen {

struct RandomFn {
  ifc::IFF fn;
  std::string label;
};

inline RandomFn random_fn() {
  const double l = uniform(1, 4);
  const ifc::IFF base = ifc::IFF::power(l);
  const std::string pow = "X^" + std::to_string(l);
  switch (std::uniform_int_distribution<int>(0, 2)(rng())) {
    case 0:
      return {base, pow};
    case 1: {
      const double s = uniform(0.2, 5);
      return {ifc::scalar_mul_iff(s, base), std::to_string(s) + "*" + pow};
    }
    default: {
      const ifc::IFN a = random_ifn(0.02);
      return {ifc::shift_iff(a, base), ifc::to_string(a) + "+" + pow};
    }
  }
}

// Y = X + g with g well inside the triangle, so X strictly precedes Y.
inline void random_add_pair(ifc::IFN& x, ifc::IFN& y) {
  for (;;) {
    x = random_ifn(0.02);
    y = ifc::add(x, random_ifn(0.02));
    if (y.u() - x.u() > 1e-3 && x.v() - y.v() > 1e-3 && y.u() < 1 - 1e-3 && y.v() > 1e-3) return;
  }
}

// Y = X * g, so Y / X is a valid quotient.
inline void random_mul_pair(ifc::IFN& x, ifc::IFN& y) {
  for (;;) {
    x = random_ifn(0.02);
    y = ifc::mul(x, random_ifn(0.02));
    if (x.u() - y.u() > 1e-3 && y.v() - x.v() > 1e-3 && y.u() > 1e-3 && y.v() < 1 - 1e-3 &&
        !ifc::div(y, x).fallback_used)
      return;
  }
}

inline bool image_quotient_valid(const ifc::IFF& phi, const ifc::IFN& x, const ifc::IFN& y) {
  return !ifc::div(ifc::eval(phi, y), ifc::eval(phi, x)).fallback_used;
}

}  // namespace testgen
