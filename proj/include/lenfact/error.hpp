#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lenfact {

/// Error categories used across the library.  The CLI maps these onto
/// process exit codes (parse errors -> 1, everything else here -> 2).
enum class Errc {
    not_prime,
    bad_parameter,
    not_a_unit,
    ring_mismatch,
    zero_polynomial,
    not_monic,
    not_regular,
    constant_polynomial,
    limit_exceeded,
    not_a_length,
    not_ge,
    bad_ordering,
    cardinality4,
    parse_error,
    verification_failure,
};

/// Stable identifier used in error messages and CLI output.
const char* errc_name(Errc code) noexcept;

/// Base exception for all domain errors raised by the library.
class DomainError : public std::runtime_error {
  public:
    DomainError(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

/// Raised by the polynomial parser; carries the offending input position.
class ParseError : public DomainError {
  public:
    ParseError(const std::string& message, std::size_t position)
        : DomainError(Errc::parse_error, message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

}  // namespace lenfact
