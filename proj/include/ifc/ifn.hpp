#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace ifc {

/// Absolute slack used by IFN validation, partial-operation conditions and
/// identity checks.
inline constexpr double kTolerance = 1e-12;

/// An IFN-shaped pair of reals with no invariant attached.
///
/// Derivative values and the formal factor (λ, 1−λ) can leave the IFN
/// triangle, so the calculus layer works on raw pairs and validates only
/// where a true IFN is required.
struct Pair {
  double u = 0.0;
  double v = 0.0;

  friend bool operator==(const Pair&, const Pair&) = default;
};

/// True when 0 ≤ u, v ≤ 1 and u + v ≤ 1, each within `tol`.
bool satisfies_ifn(Pair p, double tol = kTolerance) noexcept;

/// Largest componentwise absolute difference.
double max_gap(Pair a, Pair b) noexcept;

/// ⊕ and ⊗ closed forms applied to unconstrained pairs.
Pair raw_add(Pair a, Pair b) noexcept;
Pair raw_mul(Pair a, Pair b) noexcept;

/// Intuitionistic fuzzy number (u, v): membership u, non-membership v,
/// u, v ∈ [0,1], u + v ≤ 1.
///
/// Inputs may violate the bounds by at most kTolerance; such values are
/// pulled back onto the triangle (the sum by lowering v). Larger violations
/// throw DomainError.
class IFN {
 public:
  IFN(double u, double v);
  explicit IFN(Pair p) : IFN(p.u, p.v) {}

  /// Additive identity O = (0, 1).
  static constexpr IFN O() noexcept { return IFN(Unchecked{}, 0.0, 1.0); }
  /// Multiplicative identity E = (1, 0).
  static constexpr IFN E() noexcept { return IFN(Unchecked{}, 1.0, 0.0); }

  constexpr double u() const noexcept { return u_; }
  constexpr double v() const noexcept { return v_; }
  constexpr Pair pair() const noexcept { return {u_, v_}; }

  friend bool operator==(const IFN&, const IFN&) = default;

 private:
  struct Unchecked {};
  constexpr IFN(Unchecked, double u, double v) noexcept : u_(u), v_(v) {}

  double u_;
  double v_;
};

/// Result of a partial operation (⊖, ⊘): when the validity condition fails
/// the value is the designated fallback element and the flag is set.
struct OpOutcome {
  IFN value;
  bool fallback_used;
};

/// α ⊕ β = (u_α + u_β − u_α u_β, v_α v_β).
IFN add(const IFN& a, const IFN& b);

/// α ⊖ β = ((u_α − u_β)/(1 − u_β), v_α/v_β) when
/// 0 ≤ v_α/v_β ≤ (1 − u_α)/(1 − u_β) ≤ 1, otherwise O = (0,1).
/// v_β = 0 or u_β = 1 count as condition failure.
OpOutcome sub(const IFN& a, const IFN& b);

/// α ⊗ β = (u_α u_β, v_α + v_β − v_α v_β).
IFN mul(const IFN& a, const IFN& b);

/// α ⊘ β = (u_α/u_β, (v_α − v_β)/(1 − v_β)) when
/// 0 ≤ u_α/u_β ≤ (1 − v_α)/(1 − v_β) ≤ 1, otherwise E = (1,0).
/// u_β = 0 or v_β = 1 count as condition failure.
OpOutcome div(const IFN& a, const IFN& b);

/// λα = (1 − (1 − u)^λ, v^λ). Throws DomainError unless λ > 0.
IFN scalar_mul(double lambda, const IFN& a);

/// α^λ = (u^λ, 1 − (1 − v)^λ). Throws DomainError unless λ > 0.
IFN power(const IFN& a, double lambda);

/// α ⪯ β: some IFN γ has α ⊕ γ = β.
bool leq_add(const IFN& a, const IFN& b);
/// α ≺ β: α ⪯ β with a witness other than O.
bool less_add(const IFN& a, const IFN& b);
/// Multiplicative order: some IFN γ has α ⊗ γ = β.
bool leq_mul(const IFN& a, const IFN& b);

enum class Region { Add, Sub };

/// S⊕(α) = {α ⊕ ε}, S⊖(α) = {α ⊖ ε} over all IFNs ε.
bool region_membership(Region kind, const IFN& alpha, const IFN& candidate);

/// Members of the region among the grid points (i/r, j/r), i + j ≤ r.
std::vector<IFN> region_grid(Region kind, const IFN& alpha, std::size_t resolution);

/// v(u) = v₀^(ln(1−u)/ln(1−u₀)), the curve traced by λα₀ for λ ∈ (0, ∞).
double lambda_curve_v(const IFN& alpha0, double u);

/// `samples` points u = k/(samples+1) on the λα₀ curve, plus α₀ itself,
/// ordered by increasing u. α₀ must have u₀, v₀ ∉ {0, 1}.
std::vector<IFN> lambda_curve(const IFN& alpha0, std::size_t samples);

/// Shortest decimal that reads back to the same double.
std::string format_number(double x);

/// "(u,v)"
std::string to_string(const IFN& a);
std::string to_string(Pair p);
std::ostream& operator<<(std::ostream& os, const IFN& a);
std::ostream& operator<<(std::ostream& os, Pair p);

}  // namespace ifc
