#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "wiltonlab/gfun.hpp"
#include "wiltonlab/moments.hpp"

namespace wiltonlab::io {

// Shortest decimal form that parses back to the identical double (via
// std::to_chars). Infinities and NaN come out as "inf"/"-inf"/"nan".
std::string format_double(double v);

const char* method_name(moment_method m);

// One moment row. Keys: K, value, std_error, prediction, ratio_to_prediction,
// method, samples, seed. Volatile quantities (wall time, host, thread count)
// stay out of artifacts on purpose: a rerun with the same (K, budget, seed)
// must reproduce the bytes exactly.
nlohmann::ordered_json moment_row(const moment_estimate& e);

// Full artifact for a moments run: the echoed configuration (every field,
// defaulted or not, so the run is self-describing), the reference constant
// 2 e^{-A(1)}, and the result rows.
std::string moments_json(const nlohmann::ordered_json& config,
                         const std::vector<moment_estimate>& rows);

// CSV mirror of the JSON rows: same column order, values parse back to the
// identical doubles.
std::string moments_csv(const std::vector<moment_estimate>& rows);

// Cotangent-scan artifacts; columns r, b, c0, c0_over_b.
std::string scan_json(const nlohmann::ordered_json& config,
                      const std::vector<scan_record>& rows);
std::string scan_csv(const std::vector<scan_record>& rows);

// Write content to path via a temp file in the same directory plus rename,
// so a crash never leaves a half-written artifact.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace wiltonlab::io
