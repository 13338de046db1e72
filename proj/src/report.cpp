#include "segal/report.hpp"

#include <sstream>

#include <json.hpp>

namespace segal {

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string fnv1a_hex(std::string_view bytes) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv1a(bytes);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[i] = digits[h & 0xf];
  return out;
}

void Report::param(std::string key, std::string value) {
  params.emplace_back(std::move(key), std::move(value));
}

void Report::row(std::string check, bool ok, std::string witness) {
  rows.push_back({std::move(check), ok, std::move(witness)});
}

bool Report::pass() const {
  for (const Row& r : rows)
    if (!r.ok) return false;
  return true;
}

std::string Report::human() const {
  std::ostringstream out;
  out << kToolVersion << " " << command << "\n";
  if (!input_digest.empty()) out << "input " << input_digest << "\n";
  for (const auto& [k, v] : params) out << k << " = " << v << "\n";
  for (const Row& r : rows) {
    out << (r.ok ? "  ok   " : "  FAIL ") << r.check;
    if (!r.witness.empty()) out << "  [" << r.witness << "]";
    out << "\n";
  }
  for (const std::string& c : caveats) out << "caveat: " << c << "\n";
  out << (pass() ? "PASS" : "FAIL") << " (" << rows.size() << " checks)\n";
  return out.str();
}

std::string Report::json() const {
  nlohmann::ordered_json j;
  j["tool"] = kToolVersion;
  j["command"] = command;
  if (!input_digest.empty()) j["input"] = input_digest;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : params) j["params"][k] = v;
  j["checks"] = nlohmann::ordered_json::array();
  for (const Row& r : rows) {
    nlohmann::ordered_json row;
    row["check"] = r.check;
    row["ok"] = r.ok;
    if (!r.witness.empty()) row["witness"] = r.witness;
    j["checks"].push_back(row);
  }
  j["caveats"] = caveats;
  j["pass"] = pass();
  return j.dump(2) + "\n";
}

}  // namespace segal
