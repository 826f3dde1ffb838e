#pragma once

#include <string>

#include "lsext/code.hpp"
#include "lsext/pipeline.hpp"

namespace lsext {

/// Pretty-printed JSON with a fixed key order; identical inputs give
/// identical bytes.
std::string render_chain_json(const ChainReport& report);

/// One line per step, e.g. "[7,4,3]_2 --(1,1)--> [8,4,4]_2 columns {8}".
std::string render_chain_text(const ChainReport& report);

/// Human-readable summary of one extension attempt.
std::string render_step_text(const StepRecord& step);

/// Parameters, weight distribution, A_d, t and weight gap.
std::string render_analysis(const LinearCode& code);

}  // namespace lsext
