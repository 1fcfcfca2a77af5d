#pragma once

#include <cstdint>
#include <string_view>

namespace msw {

// Upper bound on the number of coefficients (degree + 1) of any polynomial the
// dynatomic and bicritical constructions will build. Defaults to 10^6, or the
// value of MISIUREWICZ_RESOURCE_CAP when set.
std::uint64_t resource_cap();
void set_resource_cap(std::uint64_t cap);

// Throws ResourceCapExceeded when `coefficients` exceeds the cap.
void check_resource(std::uint64_t coefficients, std::string_view what);

}  // namespace msw
