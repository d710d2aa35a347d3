// Copyright 2026 The hyperseed Authors. All Rights Reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace hyperseed {

/// Error classes surfaced across the C API as distinct status codes.
enum class ErrorCode {
  kInvalidArgument = 1,
  kParse = 2,
  kData = 3,
  kConfig = 4,
  kIo = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace hyperseed
