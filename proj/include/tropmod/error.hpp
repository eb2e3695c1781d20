#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace tropmod {

/// Base of every domain error raised by the library. The CLI maps these to
/// exit status 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Graph violates a structural invariant (bad vertex id, disconnected, ...).
class MalformedGraphError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Requested (g, n) admits no stable curve: 2g - 2 + n <= 0.
class UnstableTypeError : public DomainError {
 public:
  UnstableTypeError(int g, int n)
      : DomainError("no stable curves of type (g,n) = (" + std::to_string(g) + "," +
                    std::to_string(n) + "): stability requires 2g-2+n > 0") {}
};

class UnknownEdgeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed or rejected stable model description.
class ModelError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Volume requested for a curve carrying an infinite edge length.
class ExtendedCurveError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An internal cross-check failed. Never expected to fire.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The chain complex would exceed the configured generator cap. Carries the
/// sizes computed so far.
class ResourceLimitError : public DomainError {
 public:
  ResourceLimitError(const std::string& what, std::vector<std::size_t> partial_sizes)
      : DomainError(what), partial_sizes_(std::move(partial_sizes)) {}

  /// Number of combinatorial types per edge count (index = edges).
  const std::vector<std::size_t>& partial_sizes() const noexcept { return partial_sizes_; }

 private:
  std::vector<std::size_t> partial_sizes_;
};

inline void require_stable_type(int g, int n) {
  if (g < 0 || n < 0 || 2 * g - 2 + n <= 0) throw UnstableTypeError(g, n);
}

}  // namespace tropmod
