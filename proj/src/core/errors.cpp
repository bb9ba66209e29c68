#include "errors.hpp"

namespace exc {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Precision: return "precision";
    case ErrorKind::Ambiguous: return "ambiguous";
    case ErrorKind::ExternalReference: return "external-reference case";
    case ErrorKind::Inconsistency: return "inconsistency";
    case ErrorKind::Unclassified: return "unclassified";
    case ErrorKind::Format: return "format";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

}  // namespace exc
