// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace ag {

enum class ErrorKind {
    Parse,
    InvalidField,
    ZeroInversion,
    InvalidCurve,
    GenusMismatch,
    NotANongap,
    RankDeficient,
    SearchBoundExceeded,
    InvalidGamma,
    EmptyGamma,
    BudgetExceeded,
    NearestUnavailable,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library. The kind selects the CLI exit code.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace ag
