// SPDX-License-Identifier: Apache-2.0
#include "ag/error.hpp"

namespace ag {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::InvalidField: return "InvalidField";
        case ErrorKind::ZeroInversion: return "ZeroInversion";
        case ErrorKind::InvalidCurve: return "InvalidCurve";
        case ErrorKind::GenusMismatch: return "GenusMismatch";
        case ErrorKind::NotANongap: return "NotANongap";
        case ErrorKind::RankDeficient: return "RankDeficient";
        case ErrorKind::SearchBoundExceeded: return "SearchBoundExceeded";
        case ErrorKind::InvalidGamma: return "InvalidGamma";
        case ErrorKind::EmptyGamma: return "EmptyGamma";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::NearestUnavailable: return "NearestUnavailable";
    }
    return "Error";
}

}  // namespace ag
