#pragma once

// JSON documents for fans and cover certificates.
//
// Fan: {"rank": n, "rays": [[...], ...], "max_cones": [[i, j, ...], ...]}.
// Integers that do not fit in 64 bits are written as decimal strings; the
// reader accepts either form for any vector entry.

#include <string>
#include <string_view>

#include <json.hpp>

#include "toricflex/fan.hpp"
#include "toricflex/flex_cover.hpp"

namespace toricflex {

using Json = nlohmann::ordered_json;

Json fan_to_json(const Fan& f);
/// Throws Parse on missing or mistyped fields; structural fan errors
/// propagate from the Fan constructor.
Fan fan_from_json(const Json& j);

std::string serialize_fan(const Fan& f);
Fan parse_fan(std::string_view text);

/// SHA-256 of the compact serialization of canonical_form(f), as hex.
std::string fan_digest(const Fan& f);

Json report_to_json(const FanReport& r);
Json certificate_to_json(const CoverCertificate& c);
CoverCertificate certificate_from_json(const Json& j);

std::string serialize_certificate(const CoverCertificate& c);
CoverCertificate parse_certificate(std::string_view text);

}  // namespace toricflex
