#include "ifc/component.hpp"

#include <cmath>
#include <optional>

#include "ifc/errors.hpp"
#include "ifc/ifn.hpp"

namespace ifc {

struct ComponentFn::Node {
  Kind kind;
  double parameter = 0.0;
  Orientation side = Orientation::Membership;
  std::optional<ComponentFn> inner;
};

namespace {

void require_exponent(double lambda, const char* what) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw DomainError(std::string(what) + ": exponent must be a finite positive real, got " +
                      format_number(lambda));
  }
}

void require_unit(double c, const char* what) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw DomainError(std::string(what) + ": constant must lie in [0,1], got " + format_number(c));
  }
}

// h^λ and its derivative with respect to h.
double pow_up(double h, double lambda) { return lambda == 1.0 ? h : std::pow(h, lambda); }
double dpow_up(double h, double lambda) {
  return lambda == 1.0 ? 1.0 : lambda * std::pow(h, lambda - 1.0);
}
// 1 − (1 − h)^λ and its derivative with respect to h.
double pow_down(double h, double lambda) {
  return lambda == 1.0 ? h : 1.0 - std::pow(1.0 - h, lambda);
}
double dpow_down(double h, double lambda) {
  return lambda == 1.0 ? 1.0 : lambda * std::pow(1.0 - h, lambda - 1.0);
}

std::string paren(const std::string& s) {
  return s.find_first_of("+-*/^ ()") == std::string::npos ? s : "(" + s + ")";
}

}  // namespace

ComponentFn ComponentFn::identity() {
  static const auto node = std::make_shared<const Node>(Node{Kind::Identity, 0.0, Orientation::Membership, std::nullopt});
  return ComponentFn(node);
}

ComponentFn ComponentFn::constant(double c) {
  require_unit(c, "constant");
  return ComponentFn(std::make_shared<const Node>(Node{Kind::Constant, c, Orientation::Membership, std::nullopt}));
}

// True for h^λ, false for 1-(1-h)^λ.
static bool raises_up(ComponentFn::Kind kind, Orientation side) {
  const bool mem = side == Orientation::Membership;
  return kind == ComponentFn::Kind::Power ? mem : !mem;
}

ComponentFn ComponentFn::exponent_node(Kind kind, double lambda, Orientation side,
                                       ComponentFn inner) {
  // (h^a)^b = h^(ab) and likewise for 1-(1-h)^a. Folding avoids the
  // cancellation in 1-(1-h)^a when h is close to 1.
  const Node& in = *inner.node_;
  if ((in.kind == Kind::Power || in.kind == Kind::ScalarImage) &&
      raises_up(in.kind, in.side) == raises_up(kind, side)) {
    return ComponentFn(std::make_shared<const Node>(
        Node{kind, lambda * in.parameter, side, in.inner}));
  }
  return ComponentFn(std::make_shared<const Node>(Node{kind, lambda, side, std::move(inner)}));
}

ComponentFn ComponentFn::power(double lambda, Orientation side, ComponentFn inner) {
  require_exponent(lambda, "power");
  return exponent_node(Kind::Power, lambda, side, std::move(inner));
}

ComponentFn ComponentFn::scalar_image(double lambda, Orientation side, ComponentFn inner) {
  require_exponent(lambda, "scalar image");
  return exponent_node(Kind::ScalarImage, lambda, side, std::move(inner));
}

ComponentFn ComponentFn::shift_image(double c, Orientation side, ComponentFn inner) {
  require_unit(c, "shift image");
  return ComponentFn(
      std::make_shared<const Node>(Node{Kind::ShiftImage, c, side, std::move(inner)}));
}

ComponentFn ComponentFn::complement(ComponentFn inner) {
  return ComponentFn(std::make_shared<const Node>(
      Node{Kind::Complement, 0.0, Orientation::Membership, std::move(inner)}));
}

double ComponentFn::operator()(double t) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::Identity:
      return t;
    case Kind::Constant:
      return n.parameter;
    default:
      break;
  }
  const double h = (*n.inner)(t);
  const bool up = n.side == Orientation::Membership;
  switch (n.kind) {
    case Kind::Power:
      return up ? pow_up(h, n.parameter) : pow_down(h, n.parameter);
    case Kind::ScalarImage:
      return up ? pow_down(h, n.parameter) : pow_up(h, n.parameter);
    case Kind::ShiftImage:
      return up ? n.parameter + h - n.parameter * h : n.parameter * h;
    case Kind::Complement:
      return 1.0 - h;
    default:
      return h;  // unreachable
  }
}

double ComponentFn::derivative(double t) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::Identity:
      return 1.0;
    case Kind::Constant:
      return 0.0;
    default:
      break;
  }
  const double h = (*n.inner)(t);
  const double dh = n.inner->derivative(t);
  const bool up = n.side == Orientation::Membership;
  switch (n.kind) {
    case Kind::Power:
      return (up ? dpow_up(h, n.parameter) : dpow_down(h, n.parameter)) * dh;
    case Kind::ScalarImage:
      return (up ? dpow_down(h, n.parameter) : dpow_up(h, n.parameter)) * dh;
    case Kind::ShiftImage:
      return (up ? 1.0 - n.parameter : n.parameter) * dh;
    case Kind::Complement:
      return -dh;
    default:
      return dh;  // unreachable
  }
}

ComponentFn::Kind ComponentFn::kind() const noexcept { return node_->kind; }

double ComponentFn::parameter() const noexcept { return node_->parameter; }

Orientation ComponentFn::orientation() const noexcept { return node_->side; }

const ComponentFn* ComponentFn::inner() const noexcept {
  return node_->inner ? &*node_->inner : nullptr;
}

std::string ComponentFn::describe(const std::string& var) const {
  const Node& n = *node_;
  if (n.kind == Kind::Identity) return var;
  if (n.kind == Kind::Constant) return format_number(n.parameter);

  const std::string h = n.inner->describe(var);
  const std::string p = format_number(n.parameter);
  const bool up = n.side == Orientation::Membership;
  const std::string hp = paren(h) + "^" + p;
  const std::string hdown = "1-(1-" + h + ")^" + p;
  switch (n.kind) {
    case Kind::Power:
      return up ? hp : hdown;
    case Kind::ScalarImage:
      return up ? hdown : hp;
    case Kind::ShiftImage:
      return up ? p + "+" + paren(h) + "-" + p + "*" + paren(h) : p + "*" + paren(h);
    case Kind::Complement:
      return "1-" + paren(h);
    default:
      return h;
  }
}

double component_derivative(const ComponentFn& c, double t) {
  if (!(t > 0.0 && t < 1.0)) {
    throw DomainError("component_derivative: t must lie in (0,1), got " + format_number(t));
  }
  return c.derivative(t);
}

}  // namespace ifc
