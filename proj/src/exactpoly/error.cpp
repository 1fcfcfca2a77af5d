#include "misiurewicz/error.hpp"
#include "misiurewicz/resource.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace msw {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kVariableMismatch: return "VariableMismatch";
    case ErrorCode::kNotDivisible: return "NotDivisible";
    case ErrorCode::kResourceCap: return "ResourceCapExceeded";
    case ErrorCode::kIllConditioned: return "IllConditioned";
    case ErrorCode::kNoPeriodFound: return "NoPeriodFound";
    case ErrorCode::kPatternViolation: return "PatternViolation";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

namespace {

constexpr std::uint64_t kDefaultCap = 1000000;

std::uint64_t initial_cap() {
  if (const char* env = std::getenv("MISIUREWICZ_RESOURCE_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultCap;
}

std::atomic<std::uint64_t>& cap_storage() {
  static std::atomic<std::uint64_t> cap{initial_cap()};
  return cap;
}

}  // namespace

std::uint64_t resource_cap() { return cap_storage().load(); }

void set_resource_cap(std::uint64_t cap) { cap_storage().store(cap); }

void check_resource(std::uint64_t coefficients, std::string_view what) {
  const std::uint64_t cap = resource_cap();
  if (coefficients > cap) {
    throw ResourceCapExceeded(std::string(what) + " needs " + std::to_string(coefficients) +
                              " coefficients, cap is " + std::to_string(cap));
  }
}

}  // namespace msw
