#include "iotaudit/util/time.hpp"

#include <cstdio>
#include <ctime>

namespace iotaudit::util {

std::string format_iso8601_ms(std::int64_t ms_since_epoch) {
    std::time_t secs = static_cast<std::time_t>(ms_since_epoch / 1000);
    int ms = static_cast<int>(ms_since_epoch % 1000);
    if (ms < 0) {
        ms += 1000;
        secs -= 1;
    }
    std::tm tm{};
    gmtime_r(&secs, &tm);
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02d.%03dZ", tm.tm_year + 1900,
                  tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec, ms);
    return buf;
}

std::optional<std::int64_t> parse_iso8601_ms(const std::string& text) {
    std::tm tm{};
    int ms = 0;
    int tz_h = 0;
    int tz_m = 0;
    char tz_sign = 'Z';
    // Accept "YYYY-MM-DDTHH:MM:SS(.fff)?(Z|±HH:MM)".
    int n = std::sscanf(text.c_str(), "%4d-%2d-%2dT%2d:%2d:%2d", &tm.tm_year, &tm.tm_mon,
                        &tm.tm_mday, &tm.tm_hour, &tm.tm_min, &tm.tm_sec);
    if (n != 6) return std::nullopt;
    std::size_t pos = 19;
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        int digits = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9' && digits < 3) {
            ms = ms * 10 + (text[pos] - '0');
            ++pos;
            ++digits;
        }
        while (digits < 3) {
            ms *= 10;
            ++digits;
        }
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    }
    if (pos < text.size()) {
        tz_sign = text[pos];
        if (tz_sign == '+' || tz_sign == '-') {
            if (std::sscanf(text.c_str() + pos + 1, "%2d:%2d", &tz_h, &tz_m) != 2) return std::nullopt;
        } else if (tz_sign != 'Z') {
            return std::nullopt;
        }
    }
    tm.tm_year -= 1900;
    tm.tm_mon -= 1;
    std::time_t secs = timegm(&tm);
    if (secs == static_cast<std::time_t>(-1)) return std::nullopt;
    std::int64_t total = static_cast<std::int64_t>(secs) * 1000 + ms;
    std::int64_t offset = (static_cast<std::int64_t>(tz_h) * 60 + tz_m) * 60 * 1000;
    if (tz_sign == '+') total -= offset;
    if (tz_sign == '-') total += offset;
    return total;
}

}  // namespace iotaudit::util
