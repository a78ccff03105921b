#pragma once

#include <stdexcept>
#include <string>

namespace yplan {

// Base for all toolkit errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Instance or solution data breaks a documented invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Solution array shapes do not match the instance dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Malformed input file; message carries the field locus.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Routing arcs do not decompose into depot-rooted tours.
class BrokenTourError : public Error {
 public:
  using Error::Error;
};

// Instance exceeds the exact solver's enumeration guard.
class EnumerationGuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace yplan
