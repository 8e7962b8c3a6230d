#pragma once

#include <stdexcept>
#include <string>

namespace homcell {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Two values built over different rings were combined.
struct RingMismatchError : Error {
  explicit RingMismatchError(const std::string& msg) : Error(msg) {}
};

// Malformed input: bad dimensions, bad JSON, anything schema-level.
struct SchemaError : Error {
  explicit SchemaError(const std::string& msg) : Error(msg) {}
};

// A documented precondition of an operation does not hold.
struct HypothesisFailed : Error {
  explicit HypothesisFailed(const std::string& msg) : Error(msg) {}
};

// A module over Z/n with no bounded free resolution was asked for one.
struct UnresolvableOverQuotientRing : Error {
  explicit UnresolvableOverQuotientRing(const std::string& msg) : Error(msg) {}
};

// An oracle was asked to enumerate past its hard size limit.
struct SizeLimitError : Error {
  explicit SizeLimitError(const std::string& msg) : Error(msg) {}
};

// An internal consistency check failed; indicates an engine bug.
struct InvariantViolation : Error {
  explicit InvariantViolation(const std::string& msg) : Error(msg) {}
};

}  // namespace homcell
