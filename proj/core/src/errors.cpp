#include "rosetree/errors.hpp"

namespace rosetree {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::at_boundary: return "AtBoundary";
    case ErrorCode::not_at_top: return "NotAtTop";
    case ErrorCode::index_out_of_range: return "IndexOutOfRange";
    case ErrorCode::empty_document: return "EmptyDocument";
    case ErrorCode::multiple_roots: return "MultipleRoots";
    case ErrorCode::source_mismatch: return "SourceMismatch";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::invalid_document: return "InvalidDocument";
    case ErrorCode::consistency_error: return "ConsistencyError";
  }
  return "Unknown";
}

}  // namespace rosetree
