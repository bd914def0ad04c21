#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace iotaudit::util {

std::string to_lower(std::string_view s);
bool iequals(std::string_view a, std::string_view b);
bool icontains(std::string_view haystack, std::string_view needle);

std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char delim);

bool is_all_digits(std::string_view s);
bool is_printable(std::string_view s);

std::string percent_decode(std::string_view s);
std::string percent_encode(std::string_view s);

std::string base64_encode(std::string_view bytes);
// Strict decoder: returns nullopt on any non-alphabet character or bad padding.
std::optional<std::string> base64_decode(std::string_view s);

// "alice@example.test" -> "al…st"; strings of length <= 4 become "…".
std::string redact_middle(std::string_view s);

std::string format_money_cents(std::int64_t cents);

}  // namespace iotaudit::util
