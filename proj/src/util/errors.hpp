#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace trialkit {

enum class ErrorKind {
  config,     // bad configuration, missing credential, unknown source
  parse,      // malformed payload, schema violation
  transport,  // backend unreachable, retries exhausted
  validation, // contract violation on otherwise well-formed input
  io,         // filesystem failures
  internal,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

struct ConfigError : Error {
  explicit ConfigError(std::string msg) : Error(ErrorKind::config, std::move(msg)) {}
};

// Carries the offending source name and, when known, the byte offset into the
// raw payload.
struct ParseError : Error {
  ParseError(std::string msg, std::string source = {}, long byte_offset = -1)
      : Error(ErrorKind::parse, std::move(msg)), source(std::move(source)),
        byte_offset(byte_offset) {}
  std::string source;
  long byte_offset;
};

struct TransportError : Error {
  explicit TransportError(std::string msg, std::vector<std::string> attempts = {},
                          bool retryable = true)
      : Error(ErrorKind::transport, std::move(msg)), attempt_log(std::move(attempts)),
        retryable(retryable) {}
  std::vector<std::string> attempt_log;
  bool retryable;
};

struct ValidationError : Error {
  explicit ValidationError(std::string msg) : Error(ErrorKind::validation, std::move(msg)) {}
};

struct IoError : Error {
  explicit IoError(std::string msg) : Error(ErrorKind::io, std::move(msg)) {}
};

} // namespace trialkit
