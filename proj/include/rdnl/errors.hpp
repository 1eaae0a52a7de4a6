// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rdnl {

enum class ErrorKind {
    InvalidArgument,
    ParseError,
    EmptySupport,
    ColumnMismatch,
    RankOutOfRange,
    ZeroMask,
    SingularMatrix,
    ReducibleModulus,
    DegreeMismatch,
    DenominatorMismatch,
    ParameterMismatch,
    IncompleteCover,
    SpaceTooLarge,
};

constexpr std::string_view to_string(ErrorKind k) noexcept {
    switch (k) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::EmptySupport: return "EmptySupport";
    case ErrorKind::ColumnMismatch: return "ColumnMismatch";
    case ErrorKind::RankOutOfRange: return "RankOutOfRange";
    case ErrorKind::ZeroMask: return "ZeroMask";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::DenominatorMismatch: return "DenominatorMismatch";
    case ErrorKind::ParameterMismatch: return "ParameterMismatch";
    case ErrorKind::IncompleteCover: return "IncompleteCover";
    case ErrorKind::SpaceTooLarge: return "SpaceTooLarge";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string &what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string &what) {
    if (!cond)
        fail(kind, what);
}

} // namespace rdnl
