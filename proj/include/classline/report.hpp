/*
 * Deterministic rendering of engine records: JSON lines with sorted keys
 * (byte-identical output for identical inputs) and an aligned plain-text
 * table view of the same records.
 */
#pragma once

#include "classline/pipeline.hpp"

#include <json.hpp>

#include <string>

namespace classline {

using Json = nlohmann::json;  // std::map-backed: keys serialize sorted

std::string nat_str(const Nat& value);
std::string rat_str(const Rat& value);

Json make_record(const std::string& record, Json inputs, Json result);
Json certificate_json(const Certificate& cert);
Json step_json(const StepReport& step);

std::string to_json_line(const Json& record);
std::string to_table(const Json& record);

}  // namespace classline
