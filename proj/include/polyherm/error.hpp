#pragma once

#include <stdexcept>
#include <string>

namespace polyherm {

enum class ErrorCode {
  InvalidArgument = 1,
  DegreeTooLarge,
  TauOutOfRange,
  TruncationTooSmall,
  SingularR,
  NodesOutOfRange,
  EigensolveFailure,
  GridMismatch,
  SizeOutOfRange,
  NoConvergence,
  UnknownSuite,
  SchemaIncompatible,
  Io,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Degree caps shared by the evaluation routines.
inline constexpr int kMaxScalarDegree = 200;
inline constexpr int kMaxBivariateDegree = 60;
inline constexpr int kMaxSqueezedDegree = 40;
inline constexpr int kMaxLadderDegree = 20;

inline void require_degree(int m, int cap, const char* what) {
  if (m < 0 || m > cap)
    throw Error(ErrorCode::DegreeTooLarge,
                std::string(what) + ": degree " + std::to_string(m) + " outside [0, " +
                    std::to_string(cap) + "]");
}

}  // namespace polyherm
