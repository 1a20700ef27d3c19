#include "ifc/ifn.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>

#include "ifc/errors.hpp"

namespace ifc {
namespace {

// For results whose validity is already established up to rounding.
IFN snap(double u, double v) {
  u = std::clamp(u, 0.0, 1.0);
  v = std::clamp(v, 0.0, 1.0);
  if (u + v > 1.0) v = 1.0 - u;
  return IFN(u, v);
}

void require_positive(double lambda, const char* op) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw DomainError(std::string(op) + ": exponent must be a finite positive real, got " +
                      format_number(lambda));
  }
}

}  // namespace

bool satisfies_ifn(Pair p, double tol) noexcept {
  return std::isfinite(p.u) && std::isfinite(p.v) && p.u >= -tol && p.u <= 1.0 + tol &&
         p.v >= -tol && p.v <= 1.0 + tol && p.u + p.v <= 1.0 + tol;
}

double max_gap(Pair a, Pair b) noexcept {
  return std::max(std::abs(a.u - b.u), std::abs(a.v - b.v));
}

// Absorbing inputs are special-cased so that α ⊕ E = E and α ⊗ O = O hold
// exactly; both forms stay symmetric in their arguments.
Pair raw_add(Pair a, Pair b) noexcept {
  const double u = (a.u == 1.0 || b.u == 1.0) ? 1.0 : a.u + b.u - a.u * b.u;
  return {u, a.v * b.v};
}

Pair raw_mul(Pair a, Pair b) noexcept {
  const double v = (a.v == 1.0 || b.v == 1.0) ? 1.0 : a.v + b.v - a.v * b.v;
  return {a.u * b.u, v};
}

IFN::IFN(double u, double v) {
  if (!satisfies_ifn({u, v})) {
    throw DomainError("not an IFN: " + to_string(Pair{u, v}) +
                      " (need 0 <= u, v <= 1 and u + v <= 1)");
  }
  u = std::clamp(u, 0.0, 1.0);
  v = std::clamp(v, 0.0, 1.0);
  if (u + v > 1.0) {
    v = 1.0 - u;
    while (u + v > 1.0) v = std::nextafter(v, 0.0);
  }
  u_ = u;
  v_ = v;
}

IFN add(const IFN& a, const IFN& b) {
  const Pair r = raw_add(a.pair(), b.pair());
  return IFN(r.u, r.v);
}

OpOutcome sub(const IFN& a, const IFN& b) {
  if (b.v() <= 0.0 || b.u() >= 1.0) return {IFN::O(), true};
  const double v_ratio = a.v() / b.v();
  const double u_ratio = (1.0 - a.u()) / (1.0 - b.u());
  if (!(v_ratio <= u_ratio + kTolerance && u_ratio <= 1.0 + kTolerance)) {
    return {IFN::O(), true};
  }
  return {snap((a.u() - b.u()) / (1.0 - b.u()), v_ratio), false};
}

IFN mul(const IFN& a, const IFN& b) {
  const Pair r = raw_mul(a.pair(), b.pair());
  return IFN(r.u, r.v);
}

OpOutcome div(const IFN& a, const IFN& b) {
  if (b.u() <= 0.0 || b.v() >= 1.0) return {IFN::E(), true};
  const double u_ratio = a.u() / b.u();
  const double v_ratio = (1.0 - a.v()) / (1.0 - b.v());
  if (!(u_ratio <= v_ratio + kTolerance && v_ratio <= 1.0 + kTolerance)) {
    return {IFN::E(), true};
  }
  return {snap(u_ratio, (a.v() - b.v()) / (1.0 - b.v())), false};
}

IFN scalar_mul(double lambda, const IFN& a) {
  require_positive(lambda, "scalar_mul");
  if (lambda == 1.0) return a;
  return IFN(1.0 - std::pow(1.0 - a.u(), lambda), std::pow(a.v(), lambda));
}

IFN power(const IFN& a, double lambda) {
  require_positive(lambda, "power");
  if (lambda == 1.0) return a;
  return IFN(std::pow(a.u(), lambda), 1.0 - std::pow(1.0 - a.v(), lambda));
}

bool leq_add(const IFN& a, const IFN& b) { return a == b || !sub(b, a).fallback_used; }

bool less_add(const IFN& a, const IFN& b) { return a != b && leq_add(a, b); }

bool leq_mul(const IFN& a, const IFN& b) { return a == b || !div(b, a).fallback_used; }

bool region_membership(Region kind, const IFN& alpha, const IFN& candidate) {
  // candidate = α ⊖ ε  ⇔  candidate ⊕ ε = α
  return kind == Region::Add ? leq_add(alpha, candidate) : leq_add(candidate, alpha);
}

std::vector<IFN> region_grid(Region kind, const IFN& alpha, std::size_t resolution) {
  if (resolution == 0) throw DomainError("region_grid: resolution must be positive");
  std::vector<IFN> members;
  const double r = static_cast<double>(resolution);
  for (std::size_t i = 0; i <= resolution; ++i) {
    for (std::size_t j = 0; i + j <= resolution; ++j) {
      const IFN x = snap(static_cast<double>(i) / r, static_cast<double>(j) / r);
      if (region_membership(kind, alpha, x)) members.push_back(x);
    }
  }
  return members;
}

double lambda_curve_v(const IFN& alpha0, double u) {
  return std::pow(alpha0.v(), std::log1p(-u) / std::log1p(-alpha0.u()));
}

std::vector<IFN> lambda_curve(const IFN& alpha0, std::size_t samples) {
  const double u0 = alpha0.u();
  const double v0 = alpha0.v();
  if (u0 <= 0.0 || u0 >= 1.0 || v0 <= 0.0 || v0 >= 1.0) {
    throw DomainError("lambda_curve: " + to_string(alpha0) +
                      " is degenerate; need u0, v0 strictly inside (0,1)");
  }
  if (samples == 0) throw DomainError("lambda_curve: samples must be positive");

  std::vector<double> us;
  us.reserve(samples + 1);
  for (std::size_t k = 1; k <= samples; ++k) {
    us.push_back(static_cast<double>(k) / static_cast<double>(samples + 1));
  }
  us.push_back(u0);
  std::sort(us.begin(), us.end());
  us.erase(std::unique(us.begin(), us.end()), us.end());

  std::vector<IFN> points;
  points.reserve(us.size());
  for (double u : us) {
    points.push_back(u == u0 ? alpha0 : snap(u, lambda_curve_v(alpha0, u)));
  }
  return points;
}

std::string format_number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string to_string(Pair p) { return "(" + format_number(p.u) + "," + format_number(p.v) + ")"; }

std::string to_string(const IFN& a) { return to_string(a.pair()); }

std::ostream& operator<<(std::ostream& os, const IFN& a) { return os << to_string(a); }

std::ostream& operator<<(std::ostream& os, Pair p) { return os << to_string(p); }

}  // namespace ifc
