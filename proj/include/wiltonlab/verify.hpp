#pragma once

#include <string>
#include <vector>

namespace wiltonlab {

// One line of a verification run: a named invariant, whether it held, and
// the measured margin. Informational lines report observations the theory
// does not guarantee (empirical bracketing, exploratory probes); they never
// fail a run.
struct verify_line {
  std::string name;
  bool pass = false;
  bool informational = false;
  std::string detail;
};

struct verify_report {
  std::string suite;
  std::vector<verify_line> lines;
  int hard_failures() const;
};

// Names accepted by run_verify_suite (besides "all").
const std::vector<std::string>& verify_suite_names();

// Execute the named module invariant suite ("cf", "special", "wilton",
// "gfun", "measure") or every suite ("all"). Throws std::invalid_argument
// for an unknown name.
verify_report run_verify_suite(const std::string& suite);

}  // namespace wiltonlab
