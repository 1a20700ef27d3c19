#include "ifc/iff.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "ifc/errors.hpp"

namespace ifc {
namespace {

constexpr std::size_t kValidationGrid = 100;
constexpr std::size_t kMonotoneGrid = 200;
constexpr std::size_t kMonotonePairs = 1000;

IFN random_ifn(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double u = unit(rng);
  double v = unit(rng);
  if (u + v > 1.0) {
    u = 1.0 - u;
    v = 1.0 - v;
  }
  return IFN(u, v);
}

}  // namespace

IFF::IFF(ComponentFn f, ComponentFn g) : f_(std::move(f)), g_(std::move(g)) {
  std::array<double, kValidationGrid> fs{};
  std::array<double, kValidationGrid> gs{};
  const double last = static_cast<double>(kValidationGrid - 1);
  for (std::size_t i = 0; i < kValidationGrid; ++i) {
    const double t = static_cast<double>(i) / last;
    fs[i] = f_(t);
    gs[i] = g_(t);
    if (!(fs[i] >= -kTolerance && fs[i] <= 1.0 + kTolerance)) {
      throw DomainError("IFF: f(" + format_number(t) + ") = " + format_number(fs[i]) +
                        " is outside [0,1]");
    }
    if (!(gs[i] >= -kTolerance && gs[i] <= 1.0 + kTolerance)) {
      throw DomainError("IFF: g(" + format_number(t) + ") = " + format_number(gs[i]) +
                        " is outside [0,1]");
    }
  }
  // μ_i + v_j ≤ 1 ⇔ i + j ≤ n−1, so f(μ_i) pairs with max_{j ≤ n−1−i} g(v_j).
  std::array<double, kValidationGrid> gmax{};
  gmax[0] = gs[0];
  for (std::size_t j = 1; j < kValidationGrid; ++j) gmax[j] = std::max(gmax[j - 1], gs[j]);
  for (std::size_t i = 0; i < kValidationGrid; ++i) {
    const std::size_t j = kValidationGrid - 1 - i;
    if (fs[i] + gmax[j] > 1.0 + kTolerance) {
      throw DomainError("IFF: f(mu) + g(v) exceeds 1 at mu = " +
                        format_number(static_cast<double>(i) / last));
    }
  }
}

IFF IFF::identity() { return IFF(ComponentFn::identity(), ComponentFn::identity()); }

IFF IFF::power(double lambda) {
  return IFF(ComponentFn::power(lambda, Orientation::Membership),
             ComponentFn::power(lambda, Orientation::NonMembership));
}

IFF IFF::constant(const IFN& alpha) {
  return IFF(ComponentFn::constant(alpha.u()), ComponentFn::constant(alpha.v()));
}

IFN IFF::operator()(const IFN& x) const { return eval(*this, x); }

std::string IFF::describe() const {
  return "(" + f_.describe("mu") + ", " + g_.describe("v") + ")";
}

IFN eval(const IFF& phi, const IFN& x) {
  const double fu = phi.f()(x.u());
  const double gv = phi.g()(x.v());
  if (!(fu >= -kTolerance && fu <= 1.0 + kTolerance)) {
    throw EvaluationError("membership component f(" + format_number(x.u()) + ") = " +
                          format_number(fu) + " is outside [0,1]");
  }
  if (!(gv >= -kTolerance && gv <= 1.0 + kTolerance)) {
    throw EvaluationError("non-membership component g(" + format_number(x.v()) + ") = " +
                          format_number(gv) + " is outside [0,1]");
  }
  if (fu + gv > 1.0 + kTolerance) {
    throw EvaluationError("components f(mu) + g(v) = " + format_number(fu + gv) +
                          " exceed 1 at X = " + to_string(x));
  }
  return IFN(fu, gv);
}

bool is_monotone_increasing(const IFF& phi) {
  const double last = static_cast<double>(kMonotoneGrid - 1);
  double prev_f = phi.f()(0.0);
  double prev_g = phi.g()(0.0);
  for (std::size_t i = 1; i < kMonotoneGrid; ++i) {
    const double t = static_cast<double>(i) / last;
    const double ft = phi.f()(t);
    const double gt = phi.g()(t);
    if (ft < prev_f - kTolerance || gt < prev_g - kTolerance) return false;
    prev_f = ft;
    prev_g = gt;
  }

  std::mt19937_64 rng(0x1f5eedULL);
  try {
    for (std::size_t k = 0; k < kMonotonePairs; ++k) {
      const IFN x = random_ifn(rng);
      const IFN y = add(x, random_ifn(rng));
      if (!leq_add(x, y)) continue;
      if (!leq_add(eval(phi, x), eval(phi, y))) return false;
    }
  } catch (const EvaluationError&) {
    return false;
  }
  return true;
}

IFF scalar_mul_iff(double lambda, const IFF& phi) {
  return IFF(ComponentFn::scalar_image(lambda, Orientation::Membership, phi.f()),
             ComponentFn::scalar_image(lambda, Orientation::NonMembership, phi.g()));
}

IFF shift_iff(const IFN& alpha, const IFF& phi) {
  if (alpha.v() <= 0.0) {
    throw DomainError("shift by " + to_string(alpha) +
                      ": non-membership 0 would make g vanish identically");
  }
  return IFF(ComponentFn::shift_image(alpha.u(), Orientation::Membership, phi.f()),
             ComponentFn::shift_image(alpha.v(), Orientation::NonMembership, phi.g()));
}

IFF power_iff(const IFF& phi, double lambda) {
  return IFF(ComponentFn::power(lambda, Orientation::Membership, phi.f()),
             ComponentFn::power(lambda, Orientation::NonMembership, phi.g()));
}

}  // namespace ifc
