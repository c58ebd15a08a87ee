#pragma once

#include <stdexcept>
#include <string>

namespace fo52 {

// Base for all domain errors thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exactq
struct ParseError : Error { using Error::Error; };

// exterior
struct DependentVectors : Error { using Error::Error; };
struct ZeroVector : Error { using Error::Error; };

// schouten
struct GradeMismatch : Error { using Error::Error; };

// fobracket
struct DegenerateW : Error { using Error::Error; };
struct InconsistentSamples : Error { using Error::Error; };
struct RankDeficit : Error { using Error::Error; };
struct NotAZero : Error { using Error::Error; };

// grassmann
struct ExhaustedRetries : Error { using Error::Error; };
struct SingularPoint : Error { using Error::Error; };

// labcli
struct JacobiFailure : Error { using Error::Error; };

} // namespace fo52
