#pragma once

// Deterministic result reports: every command assembles one of these and
// renders it either as a human summary or as JSON.  Given identical input
// bytes, flags, and seed, both renderings are byte-identical, which the
// determinism tests pin with an FNV digest.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace segal {

inline constexpr const char* kToolVersion = "segal-lab 1.0";

std::uint64_t fnv1a(std::string_view bytes);
std::string fnv1a_hex(std::string_view bytes);

struct Report {
  std::string command;
  std::string input_digest;  // fnv1a of the raw input file, empty if none
  std::vector<std::pair<std::string, std::string>> params;  // flag -> value
  struct Row {
    std::string check;
    bool ok = false;
    std::string witness;  // failure certificate or supporting detail
  };
  std::vector<Row> rows;
  std::vector<std::string> caveats;

  void param(std::string key, std::string value);
  void row(std::string check, bool ok, std::string witness = "");
  bool pass() const;

  std::string human() const;
  std::string json() const;
};

}  // namespace segal
