#pragma once

#include <stdexcept>
#include <string>

namespace plumbtau {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand sizes do not agree (non-square matrix, vector length mismatch).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A symmetric matrix was required.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Determinant is zero where an inverse or a lattice basis was required.
class SingularMatrixError : public Error {
 public:
  explicit SingularMatrixError(const std::string& what) : Error(what + " (det = 0)") {}
};

/// A mathematical precondition failed: indefinite form, malformed tree,
/// class from another lattice, and so on.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A Floer-type complex violates one of its axioms.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// An obstruction needs a tau value that the profile does not contain.
class IncompleteDataError : public Error {
 public:
  using Error::Error;
};

/// Malformed input document. The message names the offending field.
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace plumbtau
