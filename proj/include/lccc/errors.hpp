#ifndef LCCC_ERRORS_HPP
#define LCCC_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lccc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidObject : Error {
  using Error::Error;
};

struct UnknownElement : Error {
  using Error::Error;
};

struct DomainMismatch : Error {
  using Error::Error;
};

struct CodomainMismatch : Error {
  using Error::Error;
};

struct BaseMismatch : Error {
  using Error::Error;
};

struct ObjectMismatch : Error {
  using Error::Error;
};

struct ShapeMismatch : Error {
  using Error::Error;
};

/// A commuting-triangle validation failed; carries a witness element.
struct TriangleDoesNotCommute : Error {
  TriangleDoesNotCommute(const std::string& msg, std::string witness_elem)
      : Error(msg + " (witness: " + witness_elem + ")"),
        witness(std::move(witness_elem)) {}
  std::string witness;
};

struct ConeDoesNotCommute : Error {
  ConeDoesNotCommute(const std::string& msg, std::string witness_elem)
      : Error(msg + " (witness: " + witness_elem + ")"),
        witness(std::move(witness_elem)) {}
  std::string witness;
};

/// An enumeration would exceed the caller's limit; reports the limit.
struct EnumerationTooLarge : Error {
  EnumerationTooLarge(const std::string& msg, std::uint64_t limit_value)
      : Error(msg + "; limit is " + std::to_string(limit_value)),
        limit(limit_value) {}
  std::uint64_t limit;
};

}  // namespace lccc

#endif  // LCCC_ERRORS_HPP
