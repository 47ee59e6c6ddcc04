#ifndef SPP_ERROR_HPP
#define SPP_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace spp {

/// Base of all library errors. Carries the name of the module that raised it
/// so that end-to-end runs can report where a failure originated.
class Error : public std::runtime_error {
 public:
  Error(std::string_view module, const std::string& what)
      : std::runtime_error(std::string(module) + ": " + what), module_(module) {}

  const std::string& module() const noexcept { return module_; }

 private:
  std::string module_;
};

/// Inputs outside the physical or mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Overflow, NaN, singular denominators, or iterations that fail to converge.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent configuration.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error("config", what) {}
};

/// File-system failures while emitting results.
class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error("io", what) {}
};

}  // namespace spp

#endif  // SPP_ERROR_HPP
