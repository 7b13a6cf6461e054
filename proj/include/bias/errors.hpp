#pragma once

#include <stdexcept>
#include <string>

namespace bias {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// generation
struct ConfigError : Error { using Error::Error; };
struct InfeasibleDecoy : Error { using Error::Error; };

// prompting
struct TemplateError : Error { using Error::Error; };
struct PoolExhausted : Error { using Error::Error; };

// modelio
struct BackendError : Error { using Error::Error; };
struct AuthError : Error { using Error::Error; };
struct UnsupportedBackend : Error { using Error::Error; };
struct PolicyMismatch : Error { using Error::Error; };

// scoring / stats
struct KeyMismatch : Error { using Error::Error; };
struct EmptyCell : Error { using Error::Error; };
struct InsufficientData : Error { using Error::Error; };
struct RankDeficient : Error { using Error::Error; };
struct UnknownFacet : Error { using Error::Error; };
struct DatasetMismatch : Error { using Error::Error; };

} // namespace bias
