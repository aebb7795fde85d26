#pragma once

#include <stdexcept>
#include <string>

namespace reebhom {

// Every failure the library can report, so callers (in particular the CLI)
// can map outcomes to exit codes without string matching.
enum class errc {
    complex_invalid,         // a boundary composite is nonzero
    cutoff_exceeds_validity, // truncation beyond a spectrum's certified range
    genericity_unchecked,    // spectrum used before its certificate was run
    genericity_failed,       // resonance below the requested action cutoff
    resonant_parameter,      // an index formula hit an exactly-integral floor
    lacunarity_failed,       // consecutive Conley-Zehnder indices
    missing_indices,         // records without cz data fed to the assembler
    convention_mismatch,     // comparing modules graded under different signs
    window_too_wide,         // stabilization window reaches the escaping class
    pinching_violated,       // r2^2 >= 2 r1^2
    window_empty,            // a_n r2^2 >= 2 a_1 r1^2
    unknown_catalog,
    bad_dimension,
    unit_mismatch,           // pi-multiple action compared against a plain one
    invalid_spectrum,        // an orbit-list structural invariant is broken
    parse_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::complex_invalid: return "ComplexInvalid";
    case errc::cutoff_exceeds_validity: return "CutoffExceedsValidity";
    case errc::genericity_unchecked: return "GenericityUnchecked";
    case errc::genericity_failed: return "GenericityFailed";
    case errc::resonant_parameter: return "ResonantParameter";
    case errc::lacunarity_failed: return "LacunarityFailed";
    case errc::missing_indices: return "MissingIndices";
    case errc::convention_mismatch: return "ConventionMismatch";
    case errc::window_too_wide: return "WindowTooWide";
    case errc::pinching_violated: return "PinchingViolated";
    case errc::window_empty: return "WindowEmpty";
    case errc::unknown_catalog: return "UnknownCatalog";
    case errc::bad_dimension: return "BadDimension";
    case errc::unit_mismatch: return "UnitMismatch";
    case errc::invalid_spectrum: return "InvalidSpectrum";
    case errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

class reeb_error : public std::runtime_error {
public:
    reeb_error(errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

// A theorem hypothesis that simply does not hold for the given data is an
// ordinary outcome (CLI exit 2), distinct from misuse of the interfaces.
inline bool is_hypothesis_failure(errc c) {
    switch (c) {
    case errc::genericity_failed:
    case errc::genericity_unchecked:
    case errc::resonant_parameter:
    case errc::lacunarity_failed:
    case errc::missing_indices:
    case errc::pinching_violated:
    case errc::window_empty:
        return true;
    default:
        return false;
    }
}

[[noreturn]] inline void fail(errc code, const std::string& detail) {
    throw reeb_error(code, detail);
}

} // namespace reebhom
