#pragma once

#include <string>
#include <vector>

#include "baileykit/corpus.hpp"

namespace baileykit {

/// JSON array of {id, params, order, status, first_mismatch_texp?, lhs_coeff?, rhs_coeff?,
/// terms_summed, elapsed_ms}; rationals are written as "p/q" strings.
std::string reports_json(const std::vector<VerificationReport>& reports);

/// One line per report. Timing is omitted unless requested so that output is reproducible.
std::string report_line(const VerificationReport& r, bool with_timing = false);
std::string reports_text(const std::vector<VerificationReport>& reports, bool with_timing = false);

}  // namespace baileykit
