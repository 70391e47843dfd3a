#ifndef IDENS_REPORT_HPP
#define IDENS_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include "idens/bounds.hpp"

namespace idens {

// Command result: an ordered list of key/value fields. The machine
// rendering is fully deterministic (no timestamps or timings), so
// identical commands and seeds produce byte-identical documents; elapsed
// time appears only in the text rendering. Exact rationals are never
// rounded in either form.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> fields;
  int exit_code = 0;

  void add(std::string key, std::string value) {
    fields.emplace_back(std::move(key), std::move(value));
  }
};

std::string render_machine(const Report& report);
std::string render_text(const Report& report, double elapsed_seconds);

// Round-trip helpers for the machine format.
struct ParsedReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> fields;
  const std::string* find(const std::string& key) const;
};
ParsedReport parse_machine_report(const std::string& text);

// Enclosure field values look like "[1/2, 1025/2048] two-sided".
std::string render_bounds(const Bounds& b, const std::string& direction);
Bounds parse_bounds_value(const std::string& value);

}  // namespace idens

#endif
