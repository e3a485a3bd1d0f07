#include "busekit/checks.hpp"

namespace busekit {

CheckReport combine_reports(std::string property, std::vector<CheckReport> parts) {
  CheckReport out;
  out.property = std::move(property);
  out.pass = true;
  for (const auto& p : parts) {
    out.pass = out.pass && p.pass;
    out.samples += p.samples;
    if (p.worst_violation / std::max(p.tolerance, 1e-300) >
        out.worst_violation / std::max(out.tolerance, 1e-300)) {
      out.worst_violation = p.worst_violation;
      out.tolerance = p.tolerance;
      out.witness = p.witness;
    }
  }
  if (!parts.empty()) {
    out.seed = parts.front().seed;
    if (out.tolerance == 0.0) out.tolerance = parts.front().tolerance;
  }
  out.parts = std::move(parts);
  return out;
}

}  // namespace busekit
