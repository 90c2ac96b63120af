#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace cobord {

/// Matrix or block dimensions do not fit the requested operation.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A differential squares to something nonzero, or a map fails to commute
/// with differentials.
class ChainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A form-level precondition failed (not a morphism, not a lagrangian, ...).
class FormError : public std::invalid_argument {
 public:
  enum class Kind {
    kNotSymmetric,
    kNotIsotropic,
    kNotSaturated,
    kNotSurjective,
    kNotLagrangian,
    kNotMorphism,
  };

  FormError(Kind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Sign certification ran out of working precision.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input file could not be parsed. Carries the 1-based line and field name.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::string field, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", field '" +
                           field + "': " + message),
        line_(line),
        field_(std::move(field)) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

}  // namespace cobord
