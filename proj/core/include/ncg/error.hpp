#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ncg {

enum class ErrorKind {
  invalid_parameter,
  validation,
  unsupported_group,
  out_of_range,
  empty_graph,
  disconnected,
  capacity,
  format,
};

std::string_view to_string(ErrorKind kind);

// Every library failure is reported through this one exception type; callers
// that care about the cause switch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ncg
