#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tangle {

enum class Errc {
  index_out_of_range,
  identity_input,
  value_out_of_range,
  size_cap_exceeded,
  syntax_error,
  label_set_error,
  length_mismatch,
  cap_exceeded,
  not_binary,
  not_complete_binary,
  no_eligible_node,
  bad_length,
  isolated_vertex,
  bad_shape,
  invalid_witness,
  parse_error,
  invalid_argument,
};

const char* to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Raised by the text readers. `location` is a byte offset for tree text and a
// 1-based line number for line-oriented formats.
class ParseError : public Error {
 public:
  ParseError(Errc code, std::size_t location, const std::string& what)
      : Error(code, what), location_(location) {}

  std::size_t location() const noexcept { return location_; }

 private:
  std::size_t location_;
};

}  // namespace tangle
