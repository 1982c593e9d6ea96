// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#include "wsnsec/error.hpp"

namespace wsnsec {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonInvertible: return "NonInvertible";
    case ErrorCode::kNotAResidue: return "NotAResidue";
    case ErrorCode::kInvalidPoint: return "InvalidPoint";
    case ErrorCode::kCannotCompressInfinity: return "CannotCompressInfinity";
    case ErrorCode::kInvalidCompressedPoint: return "InvalidCompressedPoint";
    case ErrorCode::kPairingDegenerate: return "PairingDegenerate";
    case ErrorCode::kGenerationFailure: return "GenerationFailure";
    case ErrorCode::kMessageOutOfRange: return "MessageOutOfRange";
    case ErrorCode::kDlogNotFound: return "DlogNotFound";
    case ErrorCode::kLevelMismatch: return "LevelMismatch";
    case ErrorCode::kTableTooLarge: return "TableTooLarge";
    case ErrorCode::kTableCollision: return "TableCollision";
    case ErrorCode::kMalformedPgm: return "MalformedPgm";
    case ErrorCode::kOverlappingThresholds: return "OverlappingThresholds";
    case ErrorCode::kDegenerateHost: return "DegenerateHost";
    case ErrorCode::kMalformedInput: return "MalformedInput";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace wsnsec
