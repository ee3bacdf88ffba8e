#pragma once

#include <stdexcept>
#include <string>

namespace qburst {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition, range or alphabet violation in a caller-supplied argument.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// No code instance exists for the requested (q, t, n); the message names
/// the inequality that failed.
class InfeasibleParameters : public Error {
 public:
  using Error::Error;
};

/// A window handed to the compressor contains the pattern 0^t 1^t.
class PatternFound : public Error {
 public:
  using Error::Error;
};

/// A word does not end in a well-formed replacement block chain.
class MalformedBlock : public Error {
 public:
  using Error::Error;
};

class NoCandidate : public Error {
 public:
  using Error::Error;
};

class AmbiguousCandidates : public Error {
 public:
  using Error::Error;
};

/// No case of the burst locator matched the received word.
class LocateFailure : public Error {
 public:
  using Error::Error;
};

/// The prime search ran past alphaMax. Indicates a bound bug, never input.
class ExhaustedAlphaBound : public Error {
 public:
  using Error::Error;
};

enum class DecodeStage {
  routing,
  sketch_field,
  locate,
  window,
  dense,
};

const char* to_string(DecodeStage stage);

class DecodeFailure : public Error {
 public:
  DecodeFailure(DecodeStage stage, const std::string& what)
      : Error(std::string(to_string(stage)) + ": " + what), stage_(stage) {}

  DecodeStage stage() const noexcept { return stage_; }

 private:
  DecodeStage stage_;
};

}  // namespace qburst
