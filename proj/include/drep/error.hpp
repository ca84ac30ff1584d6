#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace drep {

/// Input-side failure categories. Each one maps to exit code 2 in the CLI.
enum class Errc {
    EmptyInput,
    BadLabel,
    UnknownVertex,
    NotAFace,
    NotADualFace,
    FacetMismatch,
    DimensionMismatch,
    NotFree,
    DimTooBig,
    InvalidObstruction,
    InvalidAsteroidalMap,
    Parse,
    Io,
};

inline const char* errc_name(Errc c)
{
    switch (c) {
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::BadLabel: return "BadLabel";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::NotAFace: return "NotAFace";
    case Errc::NotADualFace: return "NotADualFace";
    case Errc::FacetMismatch: return "FacetMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotFree: return "NotFree";
    case Errc::DimTooBig: return "DimTooBig";
    case Errc::InvalidObstruction: return "InvalidObstruction";
    case Errc::InvalidAsteroidalMap: return "InvalidAsteroidalMap";
    case Errc::Parse: return "Parse";
    case Errc::Io: return "Io";
    }
    return "Unknown";
}

class InputError : public std::runtime_error {
public:
    InputError(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
    {
    }
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// A configured size bound was hit before the computation could finish.
class GuardExceeded : public std::runtime_error {
public:
    explicit GuardExceeded(const std::string& what) : std::runtime_error("SizeGuard: " + what) {}
};

/// A certificate produced by the library failed its own replay. Always a bug.
class VerificationFailed : public std::runtime_error {
public:
    explicit VerificationFailed(const std::string& what)
        : std::runtime_error("VerificationFailed: " + what)
    {
    }
};

/// Size bounds shared by every exponential enumeration in the library.
struct Guards {
    std::size_t max_faces = 2'000'000;
    std::size_t leray_max_vertices = 16;
    std::size_t collapse_max_states = 50'000;
    std::size_t arrangement_max_facets = 12;
    std::size_t max_cells = 2'000'000;
};

} // namespace drep
