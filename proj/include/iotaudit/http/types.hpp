#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace iotaudit::http {

struct Header {
    std::string name;
    std::string value;
    bool operator==(const Header&) const = default;
};

// Ordered, duplicates preserved; name comparison is case-insensitive.
using HeaderList = std::vector<Header>;

const std::string* header_get(const HeaderList& headers, std::string_view name);
std::vector<std::string> header_get_all(const HeaderList& headers, std::string_view name);
void header_set(HeaderList& headers, std::string_view name, std::string value);
std::size_t header_remove(HeaderList& headers, std::string_view name);
bool header_present(const HeaderList& headers, std::string_view name);

struct Url {
    std::string scheme;  // "http" or "https" for transactions
    std::string host;
    int port = -1;  // -1 means scheme default
    std::string path = "/";
    // Raw (still percent-encoded) name/value pairs, order preserved.
    std::vector<std::pair<std::string, std::string>> query;

    static std::optional<Url> parse(std::string_view raw);

    int effective_port() const;
    std::string origin() const;        // scheme://host[:port], default port elided
    std::string host_port() const;     // host:effective_port
    std::string query_string() const;  // joined raw pairs, no leading '?'
    std::string target() const;        // path[?query]
    std::string to_string() const;

    bool operator==(const Url&) const = default;
};

struct HttpTransaction {
    std::string id;
    std::string session_ref;
    std::string method;
    Url url;
    HeaderList request_headers;
    std::string request_body;
    std::string request_media_type;
    bool request_body_base64 = false;  // how the body was carried in the archive
    int response_status = 0;
    HeaderList response_headers;
    std::string response_body;
    std::string response_media_type;
    bool response_body_base64 = false;
    std::int64_t timestamp_ms = 0;

    bool operator==(const HttpTransaction&) const = default;
};

// Outcome of sending one request (live, or synthetic for dry runs / failures).
struct HttpResponse {
    int status = 0;
    HeaderList headers;
    std::string body;
    bool transport_failure = false;
    bool dry_run = false;
    std::string note;
};

HttpResponse response_of(const HttpTransaction& txn);

bool is_safe_method(std::string_view method);

// Canonical textual form (request line, headers, blank line, body) used for
// evidence excerpts and byte-level diff properties.
std::string serialize_request(const HttpTransaction& txn);

}  // namespace iotaudit::http
