#pragma once

#include <string>

#include "ifc/component.hpp"
#include "ifc/ifn.hpp"

namespace ifc {

/// Intuitionistic fuzzy function φ(X) = (f(μ), g(v)) for X = (μ, v).
///
/// Construction checks the IFN invariants on a 100-point grid
/// (t_i = i/99): f and g stay in [0,1] and f(μ) + g(v) ≤ 1 whenever
/// μ + v ≤ 1. A failing pair throws DomainError.
class IFF {
 public:
  IFF(ComponentFn f, ComponentFn g);

  /// φ(X) = X.
  static IFF identity();
  /// φ(X) = X^λ = (μ^λ, 1 − (1 − v)^λ).
  static IFF power(double lambda);
  /// φ(X) = α for every X.
  static IFF constant(const IFN& alpha);

  const ComponentFn& f() const noexcept { return f_; }
  const ComponentFn& g() const noexcept { return g_; }

  IFN operator()(const IFN& x) const;

  /// "(f(mu), g(v))" in closed form.
  std::string describe() const;

 private:
  ComponentFn f_;
  ComponentFn g_;
};

/// (f(μ), g(v)); throws EvaluationError naming the component that leaves
/// the IFN triangle.
IFN eval(const IFF& phi, const IFN& x);

/// α ⪯ β ⇒ φ(α) ⪯ φ(β), tested two ways: f and g nondecreasing on a
/// 200-point grid, and the order implication on 10³ deterministic random
/// pairs X ⪯ Y = X ⊕ γ. Both must hold.
bool is_monotone_increasing(const IFF& phi);

/// λφ(X) = (1 − (1 − f(μ))^λ, g(v)^λ). Throws DomainError unless λ > 0.
IFF scalar_mul_iff(double lambda, const IFF& phi);

/// α ⊕ φ(X) = (u_α + f(μ) − u_α f(μ), v_α g(v)).
/// Throws DomainError for v_α = 0: the shifted g would vanish identically
/// and the addition derivative needs g(v) > 0.
IFF shift_iff(const IFN& alpha, const IFF& phi);

/// φ(X)^λ = (f(μ)^λ, 1 − (1 − g(v))^λ). Throws DomainError unless λ > 0.
IFF power_iff(const IFF& phi, double lambda);

}  // namespace ifc
