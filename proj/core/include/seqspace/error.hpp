#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace seqspace {

enum class ErrorCode {
    zero_entry,
    length_mismatch,
    invalid_preset_param,
    invalid_argument,
    not_invertible,
    dimension_mismatch,
    exponent_regime,
    unknown_condition,
    index_out_of_range,
    no_limit_detected,
    parse_error,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::zero_entry: return "ZeroEntry";
    case ErrorCode::length_mismatch: return "LengthMismatch";
    case ErrorCode::invalid_preset_param: return "InvalidPresetParam";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::not_invertible: return "NotInvertible";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::exponent_regime: return "ExponentRegime";
    case ErrorCode::unknown_condition: return "UnknownCondition";
    case ErrorCode::index_out_of_range: return "IndexOutOfRange";
    case ErrorCode::no_limit_detected: return "NoLimitDetected";
    case ErrorCode::parse_error: return "ParseError";
    }
    return "Unknown";
}

/// Base exception for every validation and numerical-domain failure in the library.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// A generating sequence (or scalar) holds a zero where the construction needs a unit.
class ZeroEntry : public Error {
public:
    ZeroEntry(std::size_t index, std::string which)
        : Error(ErrorCode::zero_entry,
                "entry " + std::to_string(index) + " of '" + which + "' must be nonzero"),
          index_(index), which_(std::move(which)) {}

    std::size_t index() const noexcept { return index_; }
    const std::string& which() const noexcept { return which_; }

private:
    std::size_t index_;
    std::string which_;
};

} // namespace seqspace
