#ifndef SGEC_ERROR_HPP
#define SGEC_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sgec {

enum class ErrorKind {
  parse,
  invalid_argument,
  order_limit,
  disconnected_graph,
  no_occurrences,
  not_f_connected,
  zero_tensor,
  not_converged,
  unknown_dataset,
};

const char* to_string(ErrorKind kind) noexcept;

// Base of every error raised by the library. The kind drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  // line == 0 means the error is not tied to one input line.
  ParseError(const std::string& what, std::size_t line = 0);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace sgec

#endif  // SGEC_ERROR_HPP
