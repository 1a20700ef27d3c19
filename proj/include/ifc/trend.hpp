#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ifc/calculus.hpp"
#include "ifc/iff.hpp"
#include "ifc/ifn.hpp"

namespace ifc {

/// One row of a trend file.
struct Observation {
  double t;
  IFN value;
};

/// Reads CSV with the exact header `t,u,v` and strictly increasing t.
/// Throws InputError naming the 1-based data row on any malformed row.
std::vector<Observation> read_trend_csv(std::istream& in);

enum class StepClass { Increasing, NotComparable };

struct TrendStep {
  double t_from;
  double t_to;
  OpOutcome difference;  // α_{t+1} ⊖ α_t
  StepClass classification;
  /// Secant addition derivative of φ over the step, when φ was supplied and
  /// the step is increasing with both components moving.
  std::optional<DerivativeValue> derivative;
  std::optional<std::string> note;
};

struct TrendReport {
  std::vector<TrendStep> steps;
  std::size_t increasing = 0;
  std::size_t not_comparable = 0;
};

/// Stepwise differences of consecutive observations, classified by ⪯.
TrendReport analyze_trend(const std::vector<Observation>& rows, const std::optional<IFF>& phi);

const char* to_string(StepClass c) noexcept;

}  // namespace ifc
