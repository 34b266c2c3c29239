#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rosetree {

enum class ErrorCode {
  at_boundary,
  not_at_top,
  index_out_of_range,
  empty_document,
  multiple_roots,
  source_mismatch,
  parse_error,
  invalid_document,
  consistency_error,
};

const char* to_string(ErrorCode code) noexcept;

// Base of every error the library raises. The code is stable and meant to be
// switched on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

#define ROSETREE_DEFINE_ERROR(Name, Code)                     \
  class Name : public Error {                                 \
   public:                                                    \
    explicit Name(const std::string& message)                 \
        : Error(ErrorCode::Code, message) {}                  \
  }

ROSETREE_DEFINE_ERROR(AtBoundary, at_boundary);
ROSETREE_DEFINE_ERROR(NotAtTop, not_at_top);
ROSETREE_DEFINE_ERROR(IndexOutOfRange, index_out_of_range);
ROSETREE_DEFINE_ERROR(EmptyDocument, empty_document);
ROSETREE_DEFINE_ERROR(MultipleRoots, multiple_roots);
ROSETREE_DEFINE_ERROR(SourceMismatch, source_mismatch);
ROSETREE_DEFINE_ERROR(InvalidDocument, invalid_document);
ROSETREE_DEFINE_ERROR(ConsistencyError, consistency_error);

#undef ROSETREE_DEFINE_ERROR

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : Error(ErrorCode::parse_error,
              "offset " + std::to_string(offset) + ": " + message),
        offset_(offset) {}

  // Byte offset into the input at which the problem was detected.
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace rosetree
