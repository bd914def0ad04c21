#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace iotaudit::util {

// Millisecond-precision UTC ISO-8601, e.g. "2024-05-01T12:00:00.000Z".
std::string format_iso8601_ms(std::int64_t ms_since_epoch);
std::optional<std::int64_t> parse_iso8601_ms(const std::string& text);

}  // namespace iotaudit::util
