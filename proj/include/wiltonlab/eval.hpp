#pragma once

#include <cstdint>

namespace wiltonlab {

// Certified evaluation: value together with a rigorous absolute-error
// majorant (truncation + floating-point slack) and a work counter.
struct eval_result {
    double value = 0.0;
    double abs_error_bound = 0.0;  // finite, >= 0
    std::int64_t terms_used = 1;   // >= 1
    // Orbit-based evaluations (G, H, g) set this when the Gauss-map
    // expansion ended exactly (rational-valued input); the value is then the
    // natural finite sum. Meaningless (false) for other evaluations.
    bool terminated = false;
};

}  // namespace wiltonlab
