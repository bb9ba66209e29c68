#pragma once

#include <stdexcept>
#include <string>

namespace exc {

enum class ErrorKind {
  Domain,
  Precision,
  Ambiguous,
  ExternalReference,
  Inconsistency,
  Unclassified,
  Format,
  Io,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Input outside an operation's domain (zero polynomial, wrong degree, ...).
struct DomainError : Error {
  explicit DomainError(const std::string& w) : Error(ErrorKind::Domain, w) {}
};

// p-adic precision cap reached before the result could be certified.
struct PrecisionError : Error {
  explicit PrecisionError(const std::string& w) : Error(ErrorKind::Precision, w) {}
};

// A decision table could not separate two or more candidates.
struct AmbiguousError : Error {
  explicit AmbiguousError(const std::string& w) : Error(ErrorKind::Ambiguous, w) {}
};

// The requested quantity is only available from the general local-lift
// formulas, which this library does not reproduce.
struct ExternalReferenceError : Error {
  explicit ExternalReferenceError(const std::string& w)
      : Error(ErrorKind::ExternalReference, w) {}
};

// Two pieces of data contradict each other (e.g. ell incompatible with the
// local type at ell), which points at a misclassification upstream.
struct InconsistencyError : Error {
  explicit InconsistencyError(const std::string& w)
      : Error(ErrorKind::Inconsistency, w) {}
};

struct UnclassifiedError : Error {
  explicit UnclassifiedError(const std::string& w)
      : Error(ErrorKind::Unclassified, w) {}
};

struct FormatError : Error {
  explicit FormatError(const std::string& w) : Error(ErrorKind::Format, w) {}
};

struct IoError : Error {
  explicit IoError(const std::string& w) : Error(ErrorKind::Io, w) {}
};

}  // namespace exc
