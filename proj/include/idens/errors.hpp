#ifndef IDENS_ERRORS_HPP
#define IDENS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace idens {

// Malformed inputs: bad intervals, zero-length windows, eps <= 0,
// incompatible sequence representations, insufficient depth. Maps to
// exit code 2 at the CLI.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mini-language and certificate-file errors with position information.
struct parse_error : input_error {
  parse_error(const std::string& what, std::size_t pos, std::string expect)
      : input_error(what + " at offset " + std::to_string(pos) +
                    (expect.empty() ? "" : " (expected " + expect + ")")),
        position(pos),
        expected(std::move(expect)) {}

  std::size_t position;
  std::string expected;
};

}  // namespace idens

#endif
