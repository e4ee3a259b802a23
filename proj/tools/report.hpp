#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "signless/bounds.hpp"
#include "signless/spectral.hpp"
#include "signless/verify.hpp"

namespace signless::report {

using Json = nlohmann::ordered_json;

// Field order below is the documented schema (docs/output-schema.md).

auto to_json(const EnumSpec &spec) -> Json;
auto to_json(const Spectrum &spectrum) -> Json;
auto to_json(const BoundReport &report) -> Json;
/// elapsed_seconds is written only when include_timing is set, so that
/// repeated runs serialise identically.
auto to_json(const VerifyRun &run, bool include_timing = false) -> Json;
auto to_json(const ProofAudit &audit) -> Json;
auto to_json(const Extremal &extremal) -> Json;

/// Top-level envelope: tool, version, command, params, result, timestamp.
auto make_record(std::string_view command, Json params, Json result) -> Json;

/// Current UTC time as ISO-8601.
auto utc_timestamp() -> std::string;

auto write_bounds_csv_header(std::ostream &out) -> void;
auto write_bounds_csv_row(std::ostream &out, const std::string &graph6, const BoundReport &r)
    -> void;

auto write_verify_csv_header(std::ostream &out) -> void;
auto write_verify_csv_row(std::ostream &out, const VerifyRun &run) -> void;

auto write_audit_csv_header(std::ostream &out) -> void;
auto write_audit_csv_rows(std::ostream &out, const ProofAudit &audit) -> void;

/// %.17g, or empty for non-finite values.
auto format_double(double x) -> std::string;

}  // namespace signless::report
