#pragma once

#include <stdexcept>
#include <string>

namespace apo {

// Root of the predicate error taxonomy. The CLI maps these onto exit codes:
// DegenerateError -> 2, PreconditionError -> 3, ParseError -> 4.
struct PredicateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input violates a stated precondition (containment, wrong trisector type,
// missing vertex, inconsistent edge).
struct PreconditionError : PredicateError {
  using PredicateError::PredicateError;
};

struct ContainedSites : PreconditionError {
  ContainedSites() : PreconditionError("sites contained in one another") {}
};

struct NotHyperbolic : PreconditionError {
  NotHyperbolic() : PreconditionError("trisector is not hyperbolic") {}
};

struct VertexNotFound : PreconditionError {
  VertexNotFound() : PreconditionError("requested Apollonius vertex does not exist") {}
};

struct InvalidEdge : PreconditionError {
  InvalidEdge() : PreconditionError("edge endpoints are inconsistent") {}
};

struct ShapeMismatch : PreconditionError {
  explicit ShapeMismatch(const std::string& what) : PreconditionError(what) {}
};

// The configuration sits on a boundary the non-degenerate algorithms exclude
// (zero sign, double root, co-circular sites, query through the pole, ...).
struct DegenerateError : PredicateError {
  using PredicateError::PredicateError;
};

struct PoleDegeneracy : DegenerateError {
  PoleDegeneracy() : DegenerateError("site passes through the inversion pole") {}
};

struct DegenerateAnswer : DegenerateError {
  explicit DegenerateAnswer(const std::string& what) : DegenerateError(what) {}
};

struct DegenerateShadow : DegenerateError {
  explicit DegenerateShadow(const std::string& what) : DegenerateError(what) {}
};

struct DegenerateOrder : DegenerateError {
  explicit DegenerateOrder(const std::string& what) : DegenerateError(what) {}
};

struct DegenerateEdgeConflict : DegenerateError {
  explicit DegenerateEdgeConflict(const std::string& what) : DegenerateError(what) {}
};

struct DegenerateDouble : DegenerateError {
  DegenerateDouble() : DegenerateError("tangent plane is a double root") {}
};

struct InfinitelyMany : DegenerateError {
  InfinitelyMany() : DegenerateError("infinitely many tangent spheres") {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace apo
