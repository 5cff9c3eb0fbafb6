#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace grpdlim {

using ObjectIndex = std::uint32_t;
using MorphismIndex = std::uint32_t;
using ElementIndex = std::uint32_t;

inline constexpr std::uint32_t npos = std::numeric_limits<std::uint32_t>::max();

/// One violated axiom. `indices` are the offending object/morphism/element
/// indices in the order the axiom names them.
struct Violation {
  std::string axiom;
  std::vector<std::uint64_t> indices;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string axiom, std::vector<std::uint64_t> indices,
           std::string detail = {});
  std::string summary(std::size_t max_lines = 8) const;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by constructors handed data that violates their invariants.
class InvalidStructure : public Error {
 public:
  InvalidStructure(const std::string& what, ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Operands do not fit together (wrong source/target, different index
/// categories, ...).
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& stage, std::uint64_t limit,
                 double estimated_size);
  const std::string& stage() const { return stage_; }
  std::uint64_t limit() const { return limit_; }
  double estimated_size() const { return estimated_size_; }

 private:
  std::string stage_;
  std::uint64_t limit_;
  double estimated_size_;
};

/// Work limit for a single enumeration. Every candidate check and every
/// materialized composition-table entry counts one unit.
struct Budget {
  static constexpr std::uint64_t kDefaultLimit = 10'000'000;
  std::uint64_t limit = kDefaultLimit;
};

/// Counts units against a Budget for one enumeration stage.
class BudgetMeter {
 public:
  BudgetMeter(Budget budget, std::string stage, double estimate = 0.0)
      : limit_(budget.limit), stage_(std::move(stage)), estimate_(estimate) {}

  void charge(std::uint64_t units = 1) {
    used_ += units;
    if (used_ > limit_) fail();
  }
  void set_estimate(double estimate) { estimate_ = estimate; }
  std::uint64_t used() const { return used_; }

 private:
  [[noreturn]] void fail() const;

  std::uint64_t limit_;
  std::uint64_t used_ = 0;
  std::string stage_;
  double estimate_;
};

}  // namespace grpdlim
