#pragma once

#include <stdexcept>
#include <string>

namespace matho {

/// Bad input: wrong dimensions, invalid parameters, failed validation.
/// `field` carries a JSON-style path when the input came from a file.
class ValidationError : public std::invalid_argument {
   public:
    explicit ValidationError(const std::string& what, std::string field = {})
        : std::invalid_argument(field.empty() ? what : field + ": " + what), message_(what), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }
    /// The message without the field prefix.
    const std::string& message() const noexcept { return message_; }

    /// Same error with the field path nested under `prefix`.
    ValidationError nested(const std::string& prefix) const {
        return ValidationError(message_, field_.empty() ? prefix : prefix.empty() ? field_ : prefix + "." + field_);
    }

   private:
    std::string message_;
    std::string field_;
};

class DimensionError : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

/// Point outside the allowed domain (off the circle, outside the disc).
class DomainError : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

/// An internal numerical assertion failed (singular system, lost
/// orthonormality, ...). Indicates a bug or an input beyond the supported
/// range rather than bad user data.
class NumericError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace matho
