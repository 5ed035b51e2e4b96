#pragma once

#include <stdexcept>
#include <string>

namespace geosynth {

// Fine-grained failure codes so callers can branch without string matching.
enum class ErrorCode {
  degenerate_ray,
  degenerate_anchor,
  self_intersection,
  degenerate_polygon,
  construction_impossible,
  parse_error,
  schema_violation,
  catalog_mismatch,
  retry_exhausted,
  client_error,
  malformed_response,
  io_error,
  invalid_config,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::degenerate_ray: return "degenerate-ray";
    case ErrorCode::degenerate_anchor: return "degenerate-anchor";
    case ErrorCode::self_intersection: return "self-intersection";
    case ErrorCode::degenerate_polygon: return "degenerate-polygon";
    case ErrorCode::construction_impossible: return "construction-impossible";
    case ErrorCode::parse_error: return "parse-error";
    case ErrorCode::schema_violation: return "schema-violation";
    case ErrorCode::catalog_mismatch: return "catalog-mismatch";
    case ErrorCode::retry_exhausted: return "retry-exhausted";
    case ErrorCode::client_error: return "client-error";
    case ErrorCode::malformed_response: return "malformed-response";
    case ErrorCode::io_error: return "io-error";
    case ErrorCode::invalid_config: return "invalid-config";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace geosynth
