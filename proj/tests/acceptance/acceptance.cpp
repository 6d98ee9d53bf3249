// One line per acceptance criterion. Exit status is the number of failures.

#include <cstdio>
#include <string>
#include <vector>

#include "mlbiv/verify.hpp"

namespace {

struct Criterion {
  const char* id;
  const char* title;
  std::vector<std::string> suites;
  double time_limit;  // seconds
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1", "exponential reduction", {"exponential"}, 1},
      {"2", "Prabhakar reduction", {"prabhakar"}, 5},
      {"3", "Laplace identity", {"laplace"}, 60},
      {"4", "contour/series agreement", {"contour"}, 60},
      {"5", "FDE residuals", {"fde_rl", "fde_caputo"}, 30},
      {"6", "semigroup", {"semigroup"}, 120},
      {"7", "inversion", {"inversion"}, 180},
      {"8", "RL-Caputo relation", {"relation"}, 120},
      {"9", "boundedness", {"boundedness", "bound_oracle"}, 30},
      {"10", "Laguerre generating function", {"generating"}, 10},
      {"fig2a", "figure preset fig2a equals e^{2t}", {"figures"}, 10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    bool pass = true;
    double seconds = 0.0;
    std::string detail;
    for (const auto& name : c.suites) {
      const auto r = mlbiv::run_suite(name);
      pass = pass && r.pass;
      seconds += r.seconds;
      char buf[256];
      std::snprintf(buf, sizeof buf, " [%s cases=%d max_error=%.3g tol=%.3g", r.suite.c_str(), r.cases, r.max_error,
                    r.tolerance);
      detail += buf;
      if (r.min_order > 0.0) {
        std::snprintf(buf, sizeof buf, " order=%.2f min=%.2f", r.observed_order, r.min_order);
        detail += buf;
      }
      if (!r.note.empty()) detail += " (" + r.note + ")";
      detail += "]";
    }
    const bool in_time = seconds < c.time_limit;
    pass = pass && in_time;
    failures += pass ? 0 : 1;
    std::printf("criterion %-5s %-4s %s:%s time=%.2fs limit=%gs%s\n", c.id, pass ? "PASS" : "FAIL", c.title,
                detail.c_str(), seconds, c.time_limit, in_time ? "" : " (too slow)");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
