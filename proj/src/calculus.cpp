#include "ifc/calculus.hpp"

#include <cmath>
#include <string>

#include "ifc/errors.hpp"
#include "ifc/solver.hpp"

namespace ifc {
namespace {

void require_nonzero(double denom, const char* what) {
  if (std::abs(denom) <= kTolerance) {
    throw SingularityError(std::string(what) + " vanishes (" + format_number(denom) + ")");
  }
}

void require_interior(const IFN& x, const char* op) {
  if (!(x.u() > 0.0 && x.u() < 1.0 && x.v() > 0.0 && x.v() < 1.0)) {
    throw DomainError(std::string(op) + ": X = " + to_string(x) +
                      " must have both components strictly inside (0,1)");
  }
}

void require_separated(const IFN& x, const IFN& y, const char* op) {
  if (x.u() == y.u()) {
    throw DegenerateIntervalError(std::string(op) + ": membership endpoints coincide (" +
                                  format_number(x.u()) + ")");
  }
  if (x.v() == y.v()) {
    throw DegenerateIntervalError(std::string(op) + ": non-membership endpoints coincide (" +
                                  format_number(x.v()) + ")");
  }
}

void require_add_order(const IFN& x, const IFN& y, const char* op) {
  if (!leq_add(x, y)) {
    throw PreconditionError(std::string(op) + ": X = " + to_string(x) + " is not below Y = " +
                            to_string(y) + " (Y ⊖ X has no IFN value)");
  }
}

// Y ⊘ X, or a precondition error that says whether the reversed order works.
IFN mul_increment(const IFN& x, const IFN& y, const char* op) {
  const OpOutcome q = div(y, x);
  if (!q.fallback_used) return q.value;
  std::string msg = std::string(op) + ": quotient Y ⊘ X = " + to_string(y) + " ⊘ " +
                    to_string(x) + " fails its validity condition";
  if (!div(x, y).fallback_used) msg += "; the reversed quotient X ⊘ Y is valid, swap X and Y";
  throw PreconditionError(msg);
}

struct Quotients {
  double f;  // (f(μ′) − f(μ)) / (μ′ − μ)
  double g;  // (g(v′) − g(v)) / (v′ − v)
};

Quotients difference_quotients(const IFF& phi, const IFN& x, const IFN& y) {
  return {(phi.f()(y.u()) - phi.f()(x.u())) / (y.u() - x.u()),
          (phi.g()(y.v()) - phi.g()(x.v())) / (y.v() - x.v())};
}

Pair add_form(const IFF& phi, const IFN& x, double df, double dg) {
  const double fu = phi.f()(x.u());
  const double gv = phi.g()(x.v());
  require_nonzero(1.0 - fu, "membership denominator 1 - f(mu)");
  require_nonzero(gv, "non-membership denominator g(v)");
  return {(1.0 - x.u()) / (1.0 - fu) * df, 1.0 - x.v() / gv * dg};
}

Pair mul_form(const IFF& phi, const IFN& x, double df, double dg) {
  const double fu = phi.f()(x.u());
  const double gv = phi.g()(x.v());
  require_nonzero(fu, "membership denominator f(mu)");
  require_nonzero(1.0 - gv, "non-membership denominator 1 - g(v)");
  return {1.0 - x.u() / fu * df, (1.0 - x.v()) / (1.0 - gv) * dg};
}

DerivativeValue make(Pair p, DerivativeKind kind) { return {p, satisfies_ifn(p), kind}; }

CmvtReport report(Pair lhs, Pair rhs, double tolerance) {
  const double gap = max_gap(lhs, rhs);
  return {lhs, rhs, gap, gap <= tolerance, std::nullopt};
}

// φ(Y) ⊖ φ(X), which exists whenever φ is monotone on the pair.
IFN add_increment(const IFF& phi, const IFN& x, const IFN& y, const char* op) {
  const OpOutcome d = sub(eval(phi, y), eval(phi, x));
  if (d.fallback_used) {
    throw PreconditionError(std::string(op) + ": φ(Y) ⊖ φ(X) has no IFN value; φ is not "
                            "monotone increasing on this pair");
  }
  return d.value;
}

IFN image_quotient(const IFF& phi, const IFN& x, const IFN& y, const char* op) {
  const OpOutcome q = div(eval(phi, y), eval(phi, x));
  if (q.fallback_used) {
    throw PreconditionError(std::string(op) + ": quotient φ(Y) ⊘ φ(X) fails its validity "
                            "condition");
  }
  return q.value;
}

}  // namespace

DerivativeValue add_derivative(const IFF& phi, const IFN& x) {
  require_interior(x, "add_derivative");
  return make(add_form(phi, x, phi.f().derivative(x.u()), phi.g().derivative(x.v())),
              DerivativeKind::Addition);
}

DerivativeValue mul_derivative(const IFF& phi, const IFN& x) {
  require_interior(x, "mul_derivative");
  return make(mul_form(phi, x, phi.f().derivative(x.u()), phi.g().derivative(x.v())),
              DerivativeKind::Multiplication);
}

DerivativeValue secant_add_derivative(const IFF& phi, const IFN& x, const IFN& y) {
  require_separated(x, y, "secant_add_derivative");
  require_add_order(x, y, "secant_add_derivative");
  const Quotients q = difference_quotients(phi, x, y);
  return make(add_form(phi, x, q.f, q.g), DerivativeKind::SecantAddition);
}

DerivativeValue secant_mul_derivative(const IFF& phi, const IFN& x, const IFN& y) {
  require_separated(x, y, "secant_mul_derivative");
  mul_increment(x, y, "secant_mul_derivative");
  const Quotients q = difference_quotients(phi, x, y);
  return make(mul_form(phi, x, q.f, q.g), DerivativeKind::SecantMultiplication);
}

IFN differential(const IFF& phi, const IFN& x, const IFN& dx) {
  const DerivativeValue d = add_derivative(phi, x);
  if (!d.is_valid_ifn) {
    throw PreconditionError("differential: d⊕φ/dX = " + to_string(d.value) + " at X = " +
                            to_string(x) + " is not an IFN");
  }
  return mul(IFN(d.value), dx);
}

IFN first_order_estimate(const IFF& phi, const IFN& x, const IFN& y) {
  require_add_order(x, y, "first_order_estimate");
  return add(eval(phi, x), differential(phi, x, sub(y, x).value));
}

MeanValueResult add_mvt_solve(const IFF& phi, const IFN& x, const IFN& y) {
  if (!is_monotone_increasing(phi)) {
    throw PreconditionError("add_mvt_solve: φ = " + phi.describe() +
                            " is not monotone increasing");
  }
  require_add_order(x, y, "add_mvt_solve");
  if (!(x.u() < y.u() && y.v() < x.v())) {
    throw PreconditionError("add_mvt_solve: need mu < mu' and v' < v, got X = " + to_string(x) +
                            ", Y = " + to_string(y));
  }
  const Quotients q = difference_quotients(phi, x, y);
  const RootResult mu = bisect([&](double t) { return phi.f().derivative(t) - q.f; }, x.u(), y.u());
  const RootResult nu = bisect([&](double t) { return phi.g().derivative(t) - q.g; }, y.v(), x.v());
  if (!satisfies_ifn({mu.root, nu.root}, 0.0)) {
    throw PreconditionError("add_mvt_solve: mean-value point " + to_string(Pair{mu.root, nu.root}) +
                            " is not an IFN");
  }
  return {IFN(mu.root, nu.root), mu.residual, nu.residual, mu.iterations, nu.iterations};
}

CmvtReport add_mvt_check(const IFF& phi, const IFN& x, const IFN& y, double tolerance) {
  if (!is_monotone_increasing(phi)) {
    throw PreconditionError("add_mvt_check: φ = " + phi.describe() +
                            " is not monotone increasing");
  }
  const IFN lhs = add_increment(phi, x, y, "add_mvt_check");
  const DerivativeValue d = secant_add_derivative(phi, x, y);
  const IFN dx = sub(y, x).value;
  return report(lhs.pair(), raw_mul(d.value, dx.pair()), tolerance);
}

CmvtReport add_cmvt_check(const IFF& phi, const IFF& gamma, const IFN& x, const IFN& y,
                          double tolerance) {
  if (!is_monotone_increasing(phi) || !is_monotone_increasing(gamma)) {
    throw PreconditionError("add_cmvt_check: both functions must be monotone increasing");
  }
  const IFN dphi = add_increment(phi, x, y, "add_cmvt_check");
  const IFN dgamma = add_increment(gamma, x, y, "add_cmvt_check");
  const DerivativeValue sphi = secant_add_derivative(phi, x, y);
  const DerivativeValue sgamma = secant_add_derivative(gamma, x, y);
  return report(raw_mul(dphi.pair(), sgamma.value), raw_mul(sphi.value, dgamma.pair()), tolerance);
}

CmvtReport mul_mvt_check(const IFF& phi, const IFN& x, const IFN& y, double tolerance) {
  const IFN dx = mul_increment(x, y, "mul_mvt_check");
  const IFN lhs = image_quotient(phi, x, y, "mul_mvt_check");
  const DerivativeValue d = secant_mul_derivative(phi, x, y);
  return report(lhs.pair(), raw_add(d.value, dx.pair()), tolerance);
}

CmvtReport mul_cmvt_check(const IFF& phi, const IFF& gamma, const IFN& x, const IFN& y,
                          double tolerance) {
  mul_increment(x, y, "mul_cmvt_check");
  const IFN qphi = image_quotient(phi, x, y, "mul_cmvt_check");
  const IFN qgamma = image_quotient(gamma, x, y, "mul_cmvt_check");
  const DerivativeValue sphi = secant_mul_derivative(phi, x, y);
  const DerivativeValue sgamma = secant_mul_derivative(gamma, x, y);
  return report(raw_add(qphi.pair(), sgamma.value), raw_add(sphi.value, qgamma.pair()), tolerance);
}

CmvtReport rolle_check(const IFF& phi, const IFN& x, const IFN& y, double tolerance) {
  if (x == y) throw PreconditionError("rolle_check: X and Y must differ");
  const IFN fx = eval(phi, x);
  const IFN fy = eval(phi, y);
  if (max_gap(fx.pair(), fy.pair()) > kTolerance) {
    throw PreconditionError("rolle_check: φ(X) = " + to_string(fx) + " differs from φ(Y) = " +
                            to_string(fy));
  }
  return report(secant_add_derivative(phi, x, y).value, IFN::O().pair(), tolerance);
}

CmvtReport scalar_derivative_identity(double lambda, const IFF& phi, const IFN& x,
                                      double tolerance) {
  const Pair scaled = add_derivative(scalar_mul_iff(lambda, phi), x).value;
  const Pair factor{lambda, 1.0 - lambda};
  CmvtReport r = report(scaled, raw_mul(factor, add_derivative(phi, x).value), tolerance);
  r.factor_is_valid_ifn = satisfies_ifn(factor, 0.0);
  return r;
}

CmvtReport shift_derivative_identity(const IFN& alpha, const IFF& phi, const IFN& x,
                                     double tolerance) {
  return report(add_derivative(shift_iff(alpha, phi), x).value, add_derivative(phi, x).value,
                tolerance);
}

const char* to_string(DerivativeKind kind) noexcept {
  switch (kind) {
    case DerivativeKind::Addition:
      return "addition";
    case DerivativeKind::Multiplication:
      return "multiplication";
    case DerivativeKind::SecantAddition:
      return "secant-addition";
    case DerivativeKind::SecantMultiplication:
      return "secant-multiplication";
  }
  return "unknown";
}

}  // namespace ifc
