#include "idens/report.hpp"

#include <cctype>
#include <sstream>

#include "idens/errors.hpp"

namespace idens {

namespace {

bool looks_like_rational(const std::string& value) {
  auto slash = value.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 == value.size()) return false;
  std::size_t start = value[0] == '-' ? 1 : 0;
  if (start == slash) return false;
  for (std::size_t i = start; i < value.size(); ++i) {
    if (i == slash) continue;
    if (!std::isdigit(static_cast<unsigned char>(value[i]))) return false;
  }
  return true;
}

}  // namespace

std::string render_machine(const Report& report) {
  std::ostringstream out;
  out << "idens-report 1\n";
  out << "command = " << report.command << "\n";
  for (const auto& [key, value] : report.fields) out << key << " = " << value << "\n";
  out << "end\n";
  return out.str();
}

std::string render_text(const Report& report, double elapsed_seconds) {
  std::ostringstream out;
  out << "# " << report.command << "\n";
  for (const auto& [key, value] : report.fields) {
    out << key << " = " << value;
    if (looks_like_rational(value)) {
      // Advisory only; the exact value is authoritative.
      out << "  (~ " << Rational::from_string(value).approx() << ")";
    }
    out << "\n";
  }
  out << "elapsed-seconds = " << elapsed_seconds << "\n";
  return out.str();
}

const std::string* ParsedReport::find(const std::string& key) const {
  for (const auto& [k, v] : fields)
    if (k == key) return &v;
  return nullptr;
}

ParsedReport parse_machine_report(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line) || line != "idens-report 1")
    throw parse_error("not a machine report", 0, "'idens-report 1' header");
  ParsedReport out;
  bool saw_end = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line == "end") {
      saw_end = true;
      break;
    }
    auto eq = line.find(" = ");
    if (eq == std::string::npos) throw parse_error("malformed report line", lineno, "'key = value'");
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 3);
    if (key == "command") out.command = value;
    else out.fields.emplace_back(std::move(key), std::move(value));
  }
  if (!saw_end) throw parse_error("report truncated", lineno, "'end'");
  return out;
}

std::string render_bounds(const Bounds& b, const std::string& direction) {
  return "[" + b.lo.str() + ", " + b.hi.str() + "] " + direction;
}

Bounds parse_bounds_value(const std::string& value) {
  auto open = value.find('[');
  auto comma = value.find(", ", open);
  auto close = value.find(']', comma);
  if (open == std::string::npos || comma == std::string::npos || close == std::string::npos)
    throw parse_error("malformed bounds value", 0, "'[lo, hi] direction'");
  return Bounds(Rational::from_string(value.substr(open + 1, comma - open - 1)),
                Rational::from_string(value.substr(comma + 2, close - comma - 2)));
}

}  // namespace idens
