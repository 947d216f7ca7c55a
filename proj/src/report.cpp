#include "hn/report.hpp"

#include <cmath>

namespace hn {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "holds";
    case Verdict::Fails:
      return "fails";
    default:
      return "inconclusive";
  }
}

void finalize_report(ConditionReport& report) {
  double max_abs = 0.0;
  bool all_converged = true;
  for (const SampleResidual& s : report.samples) {
    max_abs = std::max(max_abs, std::abs(s.residual));
    all_converged = all_converged && s.converged;
  }
  report.max_abs_residual = max_abs;
  if (!all_converged)
    report.verdict = Verdict::Inconclusive;
  else
    report.verdict = max_abs < report.threshold ? Verdict::Holds : Verdict::Fails;
}

}  // namespace hn
