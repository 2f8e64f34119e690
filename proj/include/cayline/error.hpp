#ifndef CAYLINE_ERROR_HPP
#define CAYLINE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cayline {

// Mirrors cayline_status in the C API; values must stay in sync.
enum class ErrorCode {
  invalid_argument = 1,
  parse = 2,
  degree_mismatch = 3,
  cap_exceeded = 4,
  not_regular = 5,
  not_line_digraph = 6,
  multi_arc = 7,
  not_generating = 8,
  io = 9,
  internal = 10,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace cayline

#endif
