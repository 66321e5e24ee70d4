/*
 * Record rendering. Every record goes through one envelope shape; JSON
 * output relies on the map-backed container so keys always serialize in
 * sorted order, and the table view flattens the same record with dotted
 * keys and aligned columns.
 */
#include "classline/report.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace classline {

std::string nat_str(const Nat& value) { return value.str(); }

std::string rat_str(const Rat& value) {
  std::ostringstream out;
  out << numerator(value);
  if (denominator(value) != 1) out << "/" << denominator(value);
  return out.str();
}

Json make_record(const std::string& record, Json inputs, Json result) {
  Json envelope;
  envelope["schema_version"] = "1";
  envelope["record"] = record;
  envelope["inputs"] = std::move(inputs);
  envelope["result"] = std::move(result);
  return envelope;
}

Json certificate_json(const Certificate& cert) {
  Json j;
  j["claim"] = cert.claim;
  if (!cert.lhs.empty()) j["lhs"] = cert.lhs;
  if (!cert.rhs.empty()) j["rhs"] = cert.rhs;
  j["relation"] = cert.relation;
  j["holds"] = cert.holds;
  return j;
}

Json step_json(const StepReport& step) {
  Json j;
  j["step"] = step.step;
  j["verdict"] = verdict_name(step.verdict);
  j["summary"] = step.summary;
  Json certs = Json::array();
  for (const auto& cert : step.certificates) certs.push_back(certificate_json(cert));
  j["certificates"] = std::move(certs);
  return j;
}

std::string to_json_line(const Json& record) { return record.dump() + "\n"; }

namespace {

std::string scalar_text(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

void flatten(const Json& value, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (value.is_object()) {
    for (const auto& [key, child] : value.items())
      flatten(child, prefix.empty() ? key : prefix + "." + key, rows);
    return;
  }
  if (value.is_array()) {
    bool all_scalar = std::all_of(value.begin(), value.end(), [](const Json& item) {
      return !item.is_object() && !item.is_array();
    });
    if (all_scalar) {
      std::string joined;
      for (const auto& item : value) {
        if (!joined.empty()) joined += ", ";
        joined += scalar_text(item);
      }
      rows.emplace_back(prefix, "[" + joined + "]");
      return;
    }
    for (std::size_t i = 0; i < value.size(); ++i)
      flatten(value[i], prefix + "[" + std::to_string(i) + "]", rows);
    return;
  }
  rows.emplace_back(prefix, scalar_text(value));
}

}  // namespace

std::string to_table(const Json& record) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(record, "", rows);
  std::size_t width = 0;
  for (const auto& [key, value] : rows) width = std::max(width, key.size());
  std::ostringstream out;
  for (const auto& [key, value] : rows) {
    out << key;
    for (std::size_t pad = key.size(); pad < width; ++pad) out << ' ';
    out << "  " << value << "\n";
  }
  return out.str();
}

}  // namespace classline
