#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace llab {

/// Failure categories surfaced through the C API as status codes.
enum class ErrorKind {
  Parse,            ///< malformed polynomial text
  InvalidArgument,  ///< precondition violated (range, mismatch, zero input)
  Infeasible,       ///< family parameters admit no instance
  Excluded,         ///< parameter pair ruled out by a known theorem
  Degenerate,       ///< generated instance failed post-hoc validation
  Internal,         ///< two independent criteria disagreed
};

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
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorKind::Parse,
              what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, const std::string& what) {
  if (!cond) throw Error(ErrorKind::InvalidArgument, what);
}

}  // namespace llab
