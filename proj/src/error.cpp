#include "eaga/error.hpp"

namespace eaga {

std::string_view category_name(ErrorCategory category) noexcept {
  switch (category) {
    case ErrorCategory::kContract: return "contract";
    case ErrorCategory::kParse: return "parse";
    case ErrorCategory::kValidation: return "validation";
    case ErrorCategory::kInfeasible: return "infeasible";
    case ErrorCategory::kConvergence: return "convergence";
    case ErrorCategory::kReconstruction: return "reconstruction";
  }
  return "unknown";
}

}  // namespace eaga
