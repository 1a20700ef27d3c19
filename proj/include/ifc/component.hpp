#pragma once

#include <memory>
#include <string>

namespace ifc {

/// Which IFN coordinate a component function acts on. The algebra's images
/// (powers, scalar multiples, ⊕-shifts) have different closed forms on the
/// membership and the non-membership side.
enum class Orientation { Membership, NonMembership };

/// Univariate real function [0,1] → [0,1] with an analytic derivative.
///
/// Immutable expression tree; copies share structure. Node kinds:
///
///   Identity                  t
///   Constant(c)               c
///   Power(λ, side, h)         membership h^λ, non-membership 1 − (1 − h)^λ
///   ScalarImage(λ, side, h)   membership 1 − (1 − h)^λ, non-membership h^λ
///   ShiftImage(c, side, h)    membership c + h − c·h, non-membership c·h
///   Complement(h)             1 − h  (not produced by the parser; lets tests
///                             build decreasing components)
class ComponentFn {
 public:
  enum class Kind { Identity, Constant, Power, ScalarImage, ShiftImage, Complement };

  static ComponentFn identity();
  static ComponentFn constant(double c);
  static ComponentFn power(double lambda, Orientation side, ComponentFn inner = identity());
  static ComponentFn scalar_image(double lambda, Orientation side, ComponentFn inner);
  static ComponentFn shift_image(double c, Orientation side, ComponentFn inner);
  static ComponentFn complement(ComponentFn inner);

  double operator()(double t) const;
  double derivative(double t) const;

  Kind kind() const noexcept;
  /// λ for Power/ScalarImage, c for Constant/ShiftImage, 0 otherwise.
  double parameter() const noexcept;
  Orientation orientation() const noexcept;
  /// Nested function, or nullptr for Identity and Constant.
  const ComponentFn* inner() const noexcept;

  /// Closed form in the variable `var`, e.g. "1-(1-t)^2".
  std::string describe(const std::string& var = "t") const;

 private:
  static ComponentFn exponent_node(Kind kind, double lambda, Orientation side, ComponentFn inner);
  struct Node;
  explicit ComponentFn(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Analytic derivative at an interior point t ∈ (0,1).
double component_derivative(const ComponentFn& c, double t);

}  // namespace ifc
