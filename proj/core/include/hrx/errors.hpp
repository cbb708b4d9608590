#pragma once

#include <stdexcept>
#include <string>

namespace hrx {

/// Base class for all library errors. CLI maps ConfigError/FormatError to
/// exit code 1 and numeric failures to exit code 2.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfigError : Error { using Error::Error; };
struct FormatError : Error { using Error::Error; };
struct GeometryInvalid : Error { using Error::Error; };

struct DegenerateNode : Error { using Error::Error; };
struct AverageDegenerate : Error { using Error::Error; };
struct SolverDiverged : Error { using Error::Error; };
struct NonCompactSupport : Error { using Error::Error; };
struct SectionSingular : Error { using Error::Error; };
struct BallOutsideDomain : Error { using Error::Error; };
struct UnbalancedAfterBoundary : Error { using Error::Error; };
struct LineSearchStalled : Error { using Error::Error; };
struct NormalizationViolated : Error { using Error::Error; };

}  // namespace hrx
