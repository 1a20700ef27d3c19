#pragma once

#include <optional>

#include "ifc/iff.hpp"
#include "ifc/ifn.hpp"

namespace ifc {

enum class DerivativeKind { Addition, Multiplication, SecantAddition, SecantMultiplication };

/// IFN-shaped derivative value. The closed forms can leave the IFN
/// triangle, so the raw pair is returned together with a validity flag.
struct DerivativeValue {
  Pair value;
  bool is_valid_ifn;
  DerivativeKind kind;
};

/// Mean-value point X₀ = (μ₀, v₀) with the residuals and iteration counts
/// of the two component root solves.
struct MeanValueResult {
  IFN point;
  double residual_mu;
  double residual_v;
  int iterations_mu;
  int iterations_v;
};

/// Outcome of a two-sided identity check.
struct CmvtReport {
  Pair lhs;
  Pair rhs;
  double max_component_gap;
  bool passed;
  /// Set only by the scalar-multiplication identity: whether the formal
  /// factor (λ, 1 − λ) is itself an IFN.
  std::optional<bool> factor_is_valid_ifn;
};

/// d⊕φ/dX = ((1 − μ)/(1 − f(μ)) · f′(μ), 1 − (v/g(v)) · g′(v)).
/// Needs μ, v ∈ (0,1); throws SingularityError when 1 − f(μ) or g(v) is
/// within kTolerance of zero.
DerivativeValue add_derivative(const IFF& phi, const IFN& x);

/// d⊗φ/dX = (1 − (μ/f(μ)) · f′(μ), (1 − v)/(1 − g(v)) · g′(v)).
DerivativeValue mul_derivative(const IFF& phi, const IFN& x);

/// add_derivative with f′, g′ replaced by the difference quotients over
/// [X, Y]. Needs X ⪯ Y with μ′ ≠ μ and v′ ≠ v.
DerivativeValue secant_add_derivative(const IFF& phi, const IFN& x, const IFN& y);

/// mul_derivative with difference quotients over [X, Y]. Needs Y ⊘ X to be
/// a valid quotient (Y = X ⊗ ΔX) with μ′ ≠ μ and v′ ≠ v.
DerivativeValue secant_mul_derivative(const IFF& phi, const IFN& x, const IFN& y);

/// (d⊕φ/dX) ⊗ ΔX. Throws PreconditionError if the derivative is not an IFN.
IFN differential(const IFF& phi, const IFN& x, const IFN& dx);

/// φ(X) ⊕ (d⊕φ/dX) ⊗ (Y ⊖ X), the first-order estimate of φ(Y).
IFN first_order_estimate(const IFF& phi, const IFN& x, const IFN& y);

/// Finds X₀ strictly between X and Y with f′(μ₀) and g′(v₀) equal to the
/// difference quotients of f on (μ, μ′) and of g on (v′, v).
MeanValueResult add_mvt_solve(const IFF& phi, const IFN& x, const IFN& y);

/// φ(Y) ⊖ φ(X) against (secant d⊕φ) ⊗ (Y ⊖ X).
CmvtReport add_mvt_check(const IFF& phi, const IFN& x, const IFN& y,
                         double tolerance = kTolerance);

/// [φ(Y) ⊖ φ(X)] ⊗ d⊕γ against d⊕φ ⊗ [γ(Y) ⊖ γ(X)], secant derivatives.
CmvtReport add_cmvt_check(const IFF& phi, const IFF& gamma, const IFN& x, const IFN& y,
                          double tolerance = kTolerance);

/// φ(Y) ⊘ φ(X) against (secant d⊗φ) ⊕ (Y ⊘ X).
CmvtReport mul_mvt_check(const IFF& phi, const IFN& x, const IFN& y,
                         double tolerance = kTolerance);

/// [φ(Y) ⊘ φ(X)] ⊕ d⊗γ against d⊗φ ⊕ [γ(Y) ⊘ γ(X)], secant derivatives.
CmvtReport mul_cmvt_check(const IFF& phi, const IFF& gamma, const IFN& x, const IFN& y,
                          double tolerance = kTolerance);

/// For φ(X) = φ(Y), X ≠ Y: the secant addition derivative equals O = (0,1).
CmvtReport rolle_check(const IFF& phi, const IFN& x, const IFN& y,
                       double tolerance = kTolerance);

/// d⊕(λφ)/dX against (λ, 1 − λ) ⊗ d⊕φ/dX, compared as real pairs.
CmvtReport scalar_derivative_identity(double lambda, const IFF& phi, const IFN& x,
                                      double tolerance = kTolerance);

/// d⊕(α ⊕ φ)/dX against d⊕φ/dX.
CmvtReport shift_derivative_identity(const IFN& alpha, const IFF& phi, const IFN& x,
                                     double tolerance = kTolerance);

const char* to_string(DerivativeKind kind) noexcept;

}  // namespace ifc
