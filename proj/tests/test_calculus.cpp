#include <doctest.h>

#include <cmath>

#include "ifc/calculus.hpp"
#include "ifc/errors.hpp"
#include "ifc/solver.hpp"
#include "instances.hpp"

using namespace ifc;
using testgen::gap;

namespace {

double pgap(Pair a, Pair b) { return std::max(std::abs(a.u - b.u), std::abs(a.v - b.v)); }

const IFN kX(0.1, 0.7), kY(0.6, 0.3);

}  // namespace

TEST_CASE("bisection") {
  const RootResult r = bisect([](double t) { return t * t - 2; }, 0, 2);
  CHECK(std::abs(r.root - std::sqrt(2.0)) < 1e-12);
  CHECK(r.iterations < 200);
  const RootResult flat = bisect([](double) { return 0.0; }, 0.2, 0.6);
  CHECK(flat.root == doctest::Approx(0.4));
  CHECK(flat.iterations == 1);
  CHECK_THROWS_AS(bisect([](double t) { return t * t + 1; }, -1, 2), NoRootError);
  // A sign change across a pole is not a root.
  CHECK_THROWS_AS(bisect([](double t) { return 1 / (t - 0.3); }, 0, 1), NoRootError);
}

TEST_CASE("addition derivative") {
  const IFN x(0.35, 0.5);
  CHECK(add_derivative(IFF::identity(), x).value == Pair{1, 0});
  CHECK(add_derivative(IFF::constant(IFN(0.4, 0.3)), x).value == Pair{0, 1});
  const DerivativeValue d = add_derivative(IFF::power(2), x);
  CHECK(d.kind == DerivativeKind::Addition);
  CHECK(d.is_valid_ifn);
  CHECK(pgap(d.value, {0.65 / 0.8775 * 0.7, 1.0 / 3}) < 1e-15);
  CHECK_THROWS_AS(add_derivative(IFF::power(2), IFN(0, 0.5)), DomainError);
  CHECK_THROWS_AS(add_derivative(IFF::power(2), IFN(0.5, 0)), DomainError);
  // A constant with zero non-membership makes g(v) vanish.
  CHECK_THROWS_AS(add_derivative(IFF::constant(IFN(0.5, 0)), x), SingularityError);
}

TEST_CASE("addition derivative is the limit of secants") {
  for (int k = 0; k < 200; ++k) {
    const testgen::RandomFn phi = testgen::random_fn();
    CAPTURE(phi.label);
    const IFN x = testgen::random_ifn(0.05);
    const IFN g = testgen::random_ifn(0.05);
    const DerivativeValue exact = add_derivative(phi.fn, x);
    // Y = X + s g with s -> 0, the increment shrinking along a fixed direction.
    // The secant error is first order in s.
    double prev = 1e300;
    for (double s : {1e-3, 1e-4, 1e-5}) {
      const IFN y = add(x, scalar_mul(s, g));
      const double e = pgap(secant_add_derivative(phi.fn, x, y).value, exact.value);
      CHECK(e < std::max(0.2 * prev, 1e-9));
      prev = e;
    }
    CHECK(prev < 1e-3);
  }
}

TEST_CASE("multiplication derivative") {
  const IFN x(0.5, 0.5);
  CHECK(pgap(mul_derivative(IFF::identity(), x).value, {0, 1}) < 1e-15);
  const DerivativeValue d = mul_derivative(IFF::power(2), x);
  CHECK(d.value.u == doctest::Approx(-1.0));
  CHECK_FALSE(d.is_valid_ifn);
  for (int k = 0; k < 10; ++k) {
    const double l = testgen::uniform(1, 4);
    const IFN p = testgen::random_ifn(0.05);
    CHECK(mul_derivative(IFF::power(l), p).value.u == doctest::Approx(1 - l).epsilon(1e-12));
  }
}

TEST_CASE("secant addition derivative") {
  const DerivativeValue d = secant_add_derivative(IFF::power(2), kX, kY);
  const double qf = (0.36 - 0.01) / (0.6 - 0.1);
  const double qg = (0.51 - 0.91) / (0.3 - 0.7);
  CHECK(d.kind == DerivativeKind::SecantAddition);
  CHECK(pgap(d.value, {(1 - 0.1) / (1 - 0.01) * qf, 1 - 0.7 / 0.91 * qg}) < 1e-15);
  CHECK(pgap(secant_add_derivative(IFF::identity(), kX, kY).value, {1, 0}) < 1e-15);

  // Difference quotients equal the point derivatives at the mean-value point.
  const ComponentFn f = IFF::power(2).f(), g = IFF::power(2).g();
  CHECK(component_derivative(f, 0.35) == doctest::Approx(qf).epsilon(1e-15));
  CHECK(component_derivative(g, 0.5) == doctest::Approx(qg).epsilon(1e-15));

  CHECK_THROWS_AS(secant_add_derivative(IFF::power(2), kX, IFN(0.1, 0.3)),
                  DegenerateIntervalError);
  CHECK_THROWS_AS(secant_add_derivative(IFF::power(2), kY, kX), PreconditionError);
}

TEST_CASE("secant multiplication derivative") {
  const IFN x(0.6, 0.2), y(0.5, 0.3);
  CHECK(pgap(secant_mul_derivative(IFF::identity(), x, y).value, {0, 1}) < 1e-15);
  const double qf = (0.25 - 0.36) / (0.5 - 0.6);
  const double gx = 1 - 0.8 * 0.8, gy = 1 - 0.7 * 0.7;
  const double qg = (gy - gx) / (0.3 - 0.2);
  const Pair expect{1 - 0.6 / 0.36 * qf, (1 - 0.2) / (1 - gx) * qg};
  CHECK(pgap(secant_mul_derivative(IFF::power(2), x, y).value, expect) < 1e-12);
  CHECK_THROWS_AS(secant_mul_derivative(IFF::power(2), kX, kY), PreconditionError);
  CHECK_NOTHROW(secant_mul_derivative(IFF::power(2), kY, kX));
}

TEST_CASE("differential and first-order estimate") {
  const IFN x(0.3, 0.5);
  CHECK(differential(IFF::power(2), x, IFN::O()) == IFN::O());
  CHECK(gap(differential(IFF::identity(), x, IFN(0.2, 0.6)), IFN(0.2, 0.6)) < 1e-15);

  const IFN dx(5.0 / 9, 3.0 / 7);
  const double mu = 0.1, v = 0.7;
  const double du = (1 - mu) / (1 - mu * mu) * 2 * mu;
  const double dv = 1 - v / (1 - (1 - v) * (1 - v)) * 2 * (1 - v);
  const IFN expect(du * dx.u(), dv + dx.v() - dv * dx.v());
  CHECK(gap(differential(IFF::power(2), kX, dx), expect) < 1e-15);

  CHECK(first_order_estimate(IFF::power(2), kX, kX) == eval(IFF::power(2), kX));
  CHECK(gap(first_order_estimate(IFF::identity(), kX, kY), kY) < 1e-15);
  const IFN y(0.11, 0.69);
  CHECK(gap(first_order_estimate(IFF::power(2), kX, y), eval(IFF::power(2), y)) < 1e-3);
}

TEST_CASE("mean-value solver") {
  const MeanValueResult sq = add_mvt_solve(IFF::power(2), kX, kY);
  CHECK(std::abs(sq.point.u() - 0.35) < 1e-9);
  CHECK(std::abs(sq.point.v() - 0.5) < 1e-9);
  CHECK(std::abs(sq.residual_mu) <= 1e-12);
  CHECK(std::abs(sq.residual_v) <= 1e-12);

  const MeanValueResult cube = add_mvt_solve(IFF::power(3), kX, kY);
  CHECK(std::abs(cube.point.u() - oracle::mvt_power_mu((0.216 - 0.001) / 0.5, 3)) < 1e-12);
  CHECK(std::abs(cube.point.v() - oracle::mvt_power_v((0.657 - 0.973) / (0.3 - 0.7), 3)) < 1e-12);
  CHECK(cube.iterations_mu < 200);
  CHECK(cube.iterations_v < 200);

  const MeanValueResult id = add_mvt_solve(IFF::identity(), kX, kY);
  CHECK(id.point == IFN(0.35, 0.5));
  CHECK(id.residual_mu == 0.0);
  CHECK(id.residual_v == 0.0);

  const IFF reversed(ComponentFn::complement(ComponentFn::identity()), ComponentFn::constant(0));
  CHECK_THROWS_AS(add_mvt_solve(reversed, IFN(0.1, 0.2), IFN(0.6, 0.1)), PreconditionError);
  CHECK_THROWS_AS(add_mvt_solve(IFF::power(2), kY, kX), PreconditionError);
}

TEST_CASE("mean-value point brackets and matches the secant") {
  for (int k = 0; k < 300; ++k) {
    const double l = testgen::uniform(1.2, 4);
    IFN x(0, 1), y(0, 1);
    testgen::random_add_pair(x, y);
    if (y.u() - x.u() < 1e-2 || x.v() - y.v() < 1e-2) continue;
    const IFF phi = IFF::power(l);
    const MeanValueResult r = add_mvt_solve(phi, x, y);
    CHECK(r.point.u() > x.u());
    CHECK(r.point.u() < y.u());
    CHECK(r.point.v() < x.v());
    CHECK(r.point.v() > y.v());
    const double qf = (phi.f()(y.u()) - phi.f()(x.u())) / (y.u() - x.u());
    const double qg = (phi.g()(y.v()) - phi.g()(x.v())) / (y.v() - x.v());
    CHECK(std::abs(r.point.u() - oracle::mvt_power_mu(qf, l)) < 1e-9);
    CHECK(std::abs(r.point.v() - oracle::mvt_power_v(qg, l)) < 1e-9);
  }
}

TEST_CASE("addition mean value identities") {
  CHECK(add_mvt_check(IFF::power(2), kX, kY).passed);
  CHECK(add_mvt_check(IFF::power(3), kX, kY).passed);
  const CmvtReport id = add_mvt_check(IFF::identity(), kX, kY);
  const IFN dx = sub(kY, kX).value;
  CHECK(pgap(id.lhs, dx.pair()) < 1e-15);
  CHECK(pgap(id.rhs, dx.pair()) < 1e-15);

  const CmvtReport c = add_cmvt_check(IFF::power(2), IFF::power(3), kX, kY);
  CHECK(c.passed);
  CHECK(pgap(c.lhs, {0.1369551369551, 0.7501778796743}) < 5e-13);
  CHECK(c.max_component_gap <= 1e-14);

  const CmvtReport same = add_cmvt_check(IFF::power(2), IFF::power(2), kX, kY);
  CHECK(same.lhs == same.rhs);

  // With gamma = X the identity becomes the MVT identity.
  const CmvtReport reduced = add_cmvt_check(IFF::power(3), IFF::identity(), kX, kY);
  const CmvtReport mvt = add_mvt_check(IFF::power(3), kX, kY);
  CHECK(pgap(reduced.lhs, mvt.lhs) < 1e-15);
  CHECK(pgap(reduced.rhs, mvt.rhs) < 1e-15);
}

TEST_CASE("swapping phi and gamma swaps the two sides") {
  for (int k = 0; k < 300; ++k) {
    const auto phi = testgen::random_fn(), gamma = testgen::random_fn();
    IFN x(0, 1), y(0, 1);
    testgen::random_add_pair(x, y);
    const CmvtReport a = add_cmvt_check(phi.fn, gamma.fn, x, y);
    const CmvtReport b = add_cmvt_check(gamma.fn, phi.fn, x, y);
    CHECK(pgap(a.lhs, b.rhs) < 1e-15);
    CHECK(pgap(a.rhs, b.lhs) < 1e-15);
  }
}

TEST_CASE("multiplication mean value identities") {
  const IFN x(0.6, 0.2), y(0.5, 0.3);
  const CmvtReport id = mul_mvt_check(IFF::identity(), x, y);
  const IFN q = div(y, x).value;
  CHECK(pgap(id.lhs, q.pair()) < 1e-15);
  CHECK(pgap(id.rhs, q.pair()) < 1e-15);
  CHECK(mul_mvt_check(IFF::power(2), x, y).passed);
  CHECK(mul_mvt_check(IFF::power(3), x, y).passed);

  const CmvtReport same = mul_cmvt_check(IFF::power(3), IFF::power(3), x, y);
  CHECK(same.lhs == same.rhs);
  const CmvtReport reduced = mul_cmvt_check(IFF::power(2), IFF::identity(), x, y);
  const CmvtReport mvt = mul_mvt_check(IFF::power(2), x, y);
  CHECK(pgap(reduced.lhs, mvt.lhs) < 1e-15);
  CHECK(pgap(reduced.rhs, mvt.rhs) < 1e-15);
  const CmvtReport c = mul_cmvt_check(IFF::power(2), IFF::power(3), x, y);
  CHECK(c.passed);
  CHECK(c.max_component_gap <= 1e-12);

  CHECK_THROWS_AS(mul_mvt_check(IFF::power(2), kX, kY), PreconditionError);
}

TEST_CASE("rolle") {
  const IFN a0(0.2 * 0.2, 1 - 0.6 * 0.6);
  const CmvtReport r = rolle_check(IFF::constant(a0), IFN(0.2, 0.4), IFN(0.4, 0.2));
  CHECK(r.passed);
  CHECK(r.lhs == Pair{0, 1});
  CHECK(rolle_check(IFF::constant(IFN::O()), kX, kY).lhs == Pair{0, 1});
  CHECK(rolle_check(IFF::constant(IFN(0.5, 0.3)), kX, kY).passed);
  CHECK_THROWS_AS(rolle_check(IFF::power(2), kX, kY), PreconditionError);
  CHECK_THROWS_AS(rolle_check(IFF::constant(IFN(0.5, 0.3)), kX, kX), PreconditionError);
}

TEST_CASE("scalar and shift derivative identities") {
  const IFN x(0.35, 0.5);
  const CmvtReport one = scalar_derivative_identity(1, IFF::power(2), x);
  CHECK(one.lhs == add_derivative(IFF::power(2), x).value);
  CHECK(one.passed);
  CHECK(scalar_derivative_identity(0.5, IFF::power(2), x).passed);
  const CmvtReport two = scalar_derivative_identity(2, IFF::power(3), IFN(0.4, 0.3));
  CHECK(two.passed);
  REQUIRE(two.factor_is_valid_ifn.has_value());
  CHECK_FALSE(*two.factor_is_valid_ifn);

  CHECK(shift_derivative_identity(IFN::O(), IFF::power(2), x).lhs ==
        shift_derivative_identity(IFN::O(), IFF::power(2), x).rhs);
  CHECK(shift_derivative_identity(IFN(0.2, 0.4), IFF::power(2), x).passed);
  CHECK(shift_derivative_identity(IFN(0.5, 0.5), IFF::power(3), IFN(0.3, 0.6)).passed);
}

TEST_CASE("derivative kind names") {
  CHECK(std::string(to_string(DerivativeKind::SecantMultiplication)) == "secant-multiplication");
}
