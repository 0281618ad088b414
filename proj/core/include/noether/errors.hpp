#ifndef NOETHER_ERRORS_HPP
#define NOETHER_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace noether {

/// All engine failures are reported through this exception type. The code
/// distinguishes bad input (domain, parse) from limits of the supported
/// expression class (unsupported) and from internal consistency failures.
class Error : public std::runtime_error {
 public:
  enum class Code {
    parse,        // malformed DSL text
    domain,       // input violates a declared precondition
    unsupported,  // outside the supported expression class
    numeric,      // numeric evaluation impossible (missing assignment, ...)
    internal,     // invariant the engine itself guarantees was broken
  };

  Error(Code code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  Code code() const noexcept { return code_; }

 private:
  Code code_;
};

/// Parse failures carry the byte offset into the source text.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : Error(Code::parse,
              "parse error at offset " + std::to_string(offset) + ": " + message),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace noether

#endif
