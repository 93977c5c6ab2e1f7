#ifndef BANDQ_ERRORS_HPP
#define BANDQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bandq {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RangeError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct SizeLimit : Error { using Error::Error; };
struct NotABand : Error { using Error::Error; };
struct NotLeftRegular : Error { using Error::Error; };
struct NotConnected : Error { using Error::Error; };
struct BadSupport : Error { using Error::Error; };
struct BadPair : Error { using Error::Error; };
struct BandMismatch : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct ContainmentViolation : Error { using Error::Error; };
struct Explosion : Error { using Error::Error; };

// Signals that a computed result contradicts a theorem; always a bug.
struct BoundViolated : Error { using Error::Error; };
struct TheoremViolation : Error { using Error::Error; };
struct LiftFailure : Error { using Error::Error; };
struct CertificateFailure : Error { using Error::Error; };
struct GuardExceeded : Error { using Error::Error; };

}  // namespace bandq

#endif
