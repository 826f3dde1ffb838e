#include "lsext/limits.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

#include "lsext/errors.hpp"

namespace lsext {
namespace {

std::atomic<std::uint64_t> g_cap_override{0};
std::atomic<unsigned> g_threads{1};

std::uint64_t cap_from_env() {
  const char* raw = std::getenv(std::string(kEnumerationCapEnv).c_str());
  if (raw == nullptr) return 0;
  std::uint64_t value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end) return 0;
  return value;
}

}  // namespace

std::uint64_t enumeration_cap() {
  if (auto cap = g_cap_override.load(); cap != 0) return cap;
  if (auto cap = cap_from_env(); cap != 0) return cap;
  return kDefaultEnumerationCap;
}

void set_enumeration_cap(std::uint64_t cap) { g_cap_override.store(cap); }

void check_enumeration_cap(std::uint64_t count, std::string_view what) {
  const auto cap = enumeration_cap();
  if (count > cap) {
    throw ResourceLimitError(std::string(what) + " needs " + std::to_string(count) +
                             " canonical representatives, above the enumeration cap " +
                             std::to_string(cap) + " (set " + std::string(kEnumerationCapEnv) +
                             " to raise it)");
  }
}

unsigned worker_threads() { return g_threads.load(); }

void set_worker_threads(unsigned threads) { g_threads.store(threads == 0 ? 1 : threads); }

}  // namespace lsext
