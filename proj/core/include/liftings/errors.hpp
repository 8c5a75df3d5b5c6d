#pragma once

#include <stdexcept>
#include <string>

namespace liftings {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
  using Error::Error;
};

/// Input data violates a geometric invariant (degenerate span,
/// coincident points, overlapping collinear segments, ...).
class DegenerateInput : public Error {
public:
  using Error::Error;
};

/// A stress failed the per-vertex equilibrium precheck.
class NotSelfStress : public Error {
public:
  using Error::Error;
};

/// A force-load failed the per-edge equilibrium precheck.
class NotEquilibrium : public Error {
public:
  using Error::Error;
};

/// A re-checked adjacency violated the neighbouring condition.
class ConsistencyError : public Error {
public:
  using Error::Error;
};

/// Operation requires a crossing-free planar framework.
class NotPlanar : public Error {
public:
  using Error::Error;
};

/// Integrated lifting failed a continuity closure constraint.
class ContinuityError : public Error {
public:
  using Error::Error;
};

/// Reciprocal diagram has coincident dual vertices.
class DegenerateDual : public Error {
public:
  using Error::Error;
};

/// A Grassmannian path crossed a face at a facet point, tangentially,
/// or with an unresolved root cluster.
class NonSimplePath : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace liftings
