#include "ifc/trend.hpp"

#include <charconv>
#include <istream>

#include "ifc/errors.hpp"

namespace ifc {
namespace {

std::string trim_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

double field(const std::string& text, std::size_t row, const char* name) {
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw InputError("row " + std::to_string(row) + ": field " + name + " = '" + text +
                     "' is not a number");
  }
  return value;
}

}  // namespace

std::vector<Observation> read_trend_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trim_cr(line) != "t,u,v") {
    throw InputError("header must be exactly 't,u,v'");
  }
  std::vector<Observation> rows;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    line = trim_cr(line);
    if (line.empty()) continue;
    ++row;
    std::vector<std::string> cells;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = line.find(',', start);
      cells.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (cells.size() != 3) {
      throw InputError("row " + std::to_string(row) + ": expected 3 fields, got " +
                       std::to_string(cells.size()));
    }
    const double t = field(cells[0], row, "t");
    const double u = field(cells[1], row, "u");
    const double v = field(cells[2], row, "v");
    if (!rows.empty() && !(t > rows.back().t)) {
      throw InputError("row " + std::to_string(row) + ": t must increase strictly");
    }
    try {
      rows.push_back({t, IFN(u, v)});
    } catch (const DomainError&) {
      throw InputError("row " + std::to_string(row) + ": " + to_string(Pair{u, v}) +
                       " is not an IFN");
    }
  }
  return rows;
}

TrendReport analyze_trend(const std::vector<Observation>& rows, const std::optional<IFF>& phi) {
  TrendReport report;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    const IFN& a = rows[i].value;
    const IFN& b = rows[i + 1].value;
    TrendStep step{rows[i].t, rows[i + 1].t, sub(b, a),
                   leq_add(a, b) ? StepClass::Increasing : StepClass::NotComparable,
                   std::nullopt, std::nullopt};
    if (step.classification == StepClass::Increasing) {
      ++report.increasing;
      if (phi) {
        try {
          step.derivative = secant_add_derivative(*phi, a, b);
        } catch (const Error& e) {
          step.note = e.what();
        }
      }
    } else {
      ++report.not_comparable;
    }
    report.steps.push_back(std::move(step));
  }
  return report;
}

const char* to_string(StepClass c) noexcept {
  return c == StepClass::Increasing ? "increasing" : "not-comparable";
}

}  // namespace ifc
