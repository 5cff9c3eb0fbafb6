#include "grpdlim/base.hpp"

#include <sstream>

namespace grpdlim {

void ValidationReport::add(std::string axiom, std::vector<std::uint64_t> indices,
                           std::string detail) {
  violations.push_back({std::move(axiom), std::move(indices), std::move(detail)});
}

std::string ValidationReport::summary(std::size_t max_lines) const {
  if (ok()) return "ok";
  std::ostringstream out;
  std::size_t shown = 0;
  for (const auto& v : violations) {
    if (shown == max_lines) {
      out << "... (" << violations.size() - shown << " more)";
      break;
    }
    if (shown) out << "; ";
    out << v.axiom << " at (";
    for (std::size_t i = 0; i < v.indices.size(); ++i)
      out << (i ? "," : "") << v.indices[i];
    out << ")";
    if (!v.detail.empty()) out << ": " << v.detail;
    ++shown;
  }
  return out.str();
}

InvalidStructure::InvalidStructure(const std::string& what, ValidationReport report)
    : Error(what + ": " + report.summary()), report_(std::move(report)) {}

BudgetExceeded::BudgetExceeded(const std::string& stage, std::uint64_t limit,
                               double estimated_size)
    : Error([&] {
        std::ostringstream out;
        out << "budget of " << limit << " units exceeded in " << stage;
        if (estimated_size > 0)
          out << " (estimated search space " << estimated_size << ")";
        return out.str();
      }()),
      stage_(stage),
      limit_(limit),
      estimated_size_(estimated_size) {}

void BudgetMeter::fail() const { throw BudgetExceeded(stage_, limit_, estimate_); }

}  // namespace grpdlim
