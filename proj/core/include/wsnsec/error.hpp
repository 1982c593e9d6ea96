// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wsnsec {

enum class ErrorCode {
  kNonInvertible,
  kNotAResidue,
  kInvalidPoint,
  kCannotCompressInfinity,
  kInvalidCompressedPoint,
  kPairingDegenerate,
  kGenerationFailure,
  kMessageOutOfRange,
  kDlogNotFound,
  kLevelMismatch,
  kTableTooLarge,
  kTableCollision,
  kMalformedPgm,
  kOverlappingThresholds,
  kDegenerateHost,
  kMalformedInput,
  kInvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Every domain failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wsnsec
