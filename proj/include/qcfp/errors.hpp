#ifndef QCFP_ERRORS_HPP
#define QCFP_ERRORS_HPP

#include <stdexcept>

namespace qcfp {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Construction-time contract violations (non-finite coordinates, bad
// configuration values, malformed oracle bundles).
struct InvalidArgument : Error {
  using Error::Error;
};

// A point was passed to an oracle or problem of a different dimension.
struct DimensionMismatch : Error {
  using Error::Error;
};

// An oracle was evaluated outside the open set where it is valid, or it
// produced a non-finite value.
struct DomainViolation : Error {
  using Error::Error;
};

// A subgradient selector returned the zero vector at an infeasible point.
// That contradicts the selector contract: a minimizer is the only point
// where the zero vector is admissible, and infeasible points are never
// minimizers of a function with a nonempty zero sublevel set.
struct ZeroSubgradient : Error {
  using Error::Error;
};

// The projection step length (f_+(x)/L)^(1/delta) overflowed to a
// non-finite value.
struct NonFiniteStep : Error {
  using Error::Error;
};

// make_affine was given an all-zero slope vector.
struct ZeroSlope : Error {
  using Error::Error;
};

// make_ball was given radius <= 0.
struct NonPositiveRadius : Error {
  using Error::Error;
};

// fejer_check was given an empty trajectory.
struct EmptyTrace : Error {
  using Error::Error;
};

// check_fixed_point_closed was given a sequence whose tail gaps do not
// shrink below the requested tolerance.
struct NonConvergentInput : Error {
  using Error::Error;
};

// Rejection sampling exhausted its attempt budget without finding a
// feasible point in the region.
struct NoFeasibleSamples : Error {
  using Error::Error;
};

// Problem file is not well-formed (unreadable, not valid JSON).
struct ParseError : Error {
  using Error::Error;
};

// Problem file is valid JSON but violates the document schema.
struct SchemaError : Error {
  using Error::Error;
};

// Problem file names a function family outside the supported set.
struct UnknownFamily : SchemaError {
  using SchemaError::SchemaError;
};

}  // namespace qcfp

#endif  // QCFP_ERRORS_HPP
