#pragma once

#include <cstdint>
#include <string_view>

namespace lsext {

/// Default upper bound on the number of canonical representatives any
/// enumeration may visit.
inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Upper bound on the number of cells of a materialized incidence matrix.
inline constexpr std::uint64_t kIncidenceCellCap = 100'000'000;

/// Name of the environment variable that overrides the enumeration cap.
inline constexpr std::string_view kEnumerationCapEnv = "LSEXT_ENUM_CAP";

/// The active enumeration cap: an explicit override if one was set, else
/// LSEXT_ENUM_CAP when it parses as a positive integer, else the default.
std::uint64_t enumeration_cap();

/// Overrides the cap for this process; 0 restores the environment/default lookup.
void set_enumeration_cap(std::uint64_t cap);

/// Throws ResourceLimitError naming the cap when count exceeds it.
void check_enumeration_cap(std::uint64_t count, std::string_view what);

/// Number of worker threads used by data-parallel enumerations (>= 1).
unsigned worker_threads();
void set_worker_threads(unsigned threads);

}  // namespace lsext
