#pragma once

#include <stdexcept>
#include <string>

namespace knotcalc {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// lattice / form errors
struct NotSymmetricError : Error { using Error::Error; };
struct NotNegativeDefiniteError : Error { using Error::Error; };
struct EvenDeterminantError : Error { using Error::Error; };
struct NonIntegralError : Error { using Error::Error; };

// diagram errors
struct SyntaxError : Error { using Error::Error; };
struct LabelMultiplicityError : Error { using Error::Error; };
struct DisconnectedDiagramError : Error { using Error::Error; };
struct NonSphericalEmbeddingError : Error { using Error::Error; };
struct NotAlternatingError : Error { using Error::Error; };
struct ReducibleCrossingError : Error { using Error::Error; };
struct NotBipartiteError : Error { using Error::Error; };
struct FastPathMismatchError : Error { using Error::Error; };

// Montesinos / torus errors
struct InvalidPairError : Error { using Error::Error; };
struct NotAKnotError : Error { using Error::Error; };
struct NoDefiniteRepresentativeError : Error { using Error::Error; };

// sharp-technique errors
struct NotSharpCandidateError : Error { using Error::Error; };

// CLI / dispatch
struct UnrecognizedInputError : Error { using Error::Error; };

} // namespace knotcalc
