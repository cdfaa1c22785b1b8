#pragma once

#include <stdexcept>
#include <string>

namespace jc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct DegenerateSteadyState : Error { using Error::Error; };
struct VanishingIntensity : Error { using Error::Error; };
struct UnconvergedTail : Error { using Error::Error; };
struct TruncationLeak : Error { using Error::Error; };
struct StepTooLarge : Error { using Error::Error; };
struct NormUnderflow : Error { using Error::Error; };
struct NoTriggers : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

}  // namespace jc
