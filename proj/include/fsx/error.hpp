// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fsx {

enum class ErrorCode {
  InvalidParameter,
  AliasingRisk,
  BandlimitExceeded,
  HomogeneousDCViolation,
  SpectrumHit,
  IndexOutOfRange,
  LatticeTooSmall,
  InvalidExponent,
  NotHilbertCouple,
  ZeroField,
  IllConditioned,
  LeakageTooLarge,
  DimensionTooSmall,
  UnknownSuite,
  ConfigError,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Base exception for every failure raised by the library. The code names the
/// failure class; the message carries the specifics.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

template <ErrorCode C>
class TypedError : public Error {
 public:
  explicit TypedError(const std::string& what) : Error(C, what) {}
};

using InvalidParameter = TypedError<ErrorCode::InvalidParameter>;
using AliasingRisk = TypedError<ErrorCode::AliasingRisk>;
using BandlimitExceeded = TypedError<ErrorCode::BandlimitExceeded>;
using HomogeneousDCViolation = TypedError<ErrorCode::HomogeneousDCViolation>;
using SpectrumHit = TypedError<ErrorCode::SpectrumHit>;
using IndexOutOfRange = TypedError<ErrorCode::IndexOutOfRange>;
using LatticeTooSmall = TypedError<ErrorCode::LatticeTooSmall>;
using InvalidExponent = TypedError<ErrorCode::InvalidExponent>;
using NotHilbertCouple = TypedError<ErrorCode::NotHilbertCouple>;
using ZeroField = TypedError<ErrorCode::ZeroField>;
using IllConditioned = TypedError<ErrorCode::IllConditioned>;
using LeakageTooLarge = TypedError<ErrorCode::LeakageTooLarge>;
using DimensionTooSmall = TypedError<ErrorCode::DimensionTooSmall>;
using UnknownSuite = TypedError<ErrorCode::UnknownSuite>;
using ConfigError = TypedError<ErrorCode::ConfigError>;
using IoError = TypedError<ErrorCode::IoError>;

}  // namespace fsx
