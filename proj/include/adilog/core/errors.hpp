#pragma once

#include <stdexcept>
#include <string>

namespace adilog {

// Error codes for every precondition violation the library reports.
enum class errc {
    non_unit,
    non_nilpotent,
    char_precision,
    zero_scalar,
    multiple_root,
    not_an_extension,
    zero_element,
    unsupported_field,
    not_in_general_position,
    index_out_of_range,
    bad_weight,
    not_flat,
    zero_unit,
    not_good,
    mod_two_mismatch,
    not_generic,
    not_transverse,
    not_admissible,
    precision_too_low,
    not_in_filtration,
    not_infinitesimal,
    unsupported_ring,
    modulus_mismatch,
    syntax_error,
    unknown_identifier,
    internal,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::non_unit: return "NonUnit";
        case errc::non_nilpotent: return "NonNilpotent";
        case errc::char_precision: return "CharPrecision";
        case errc::zero_scalar: return "ZeroScalar";
        case errc::multiple_root: return "MultipleRoot";
        case errc::not_an_extension: return "NotAnExtension";
        case errc::zero_element: return "ZeroElement";
        case errc::unsupported_field: return "UnsupportedField";
        case errc::not_in_general_position: return "NotInGeneralPosition";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::bad_weight: return "BadWeight";
        case errc::not_flat: return "NotFlat";
        case errc::zero_unit: return "ZeroUnit";
        case errc::not_good: return "NotGood";
        case errc::mod_two_mismatch: return "ModTwoMismatch";
        case errc::not_generic: return "NotGeneric";
        case errc::not_transverse: return "NotTransverse";
        case errc::not_admissible: return "NotAdmissible";
        case errc::precision_too_low: return "PrecisionTooLow";
        case errc::not_in_filtration: return "NotInFiltration";
        case errc::not_infinitesimal: return "NotInfinitesimal";
        case errc::unsupported_ring: return "UnsupportedRing";
        case errc::modulus_mismatch: return "ModulusMismatch";
        case errc::syntax_error: return "SyntaxError";
        case errc::unknown_identifier: return "UnknownIdentifier";
        case errc::internal: return "InternalError";
    }
    return "?";
}

class calc_error : public std::runtime_error {
public:
    calc_error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw calc_error(code, what); }

inline void require(bool ok, errc code, const std::string& what) {
    if (!ok) fail(code, what);
}

} // namespace adilog
