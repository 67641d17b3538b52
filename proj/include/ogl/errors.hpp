// Copyright 2026 The ogl Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OGL_ERRORS_HPP
#define OGL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ogl {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in Q(i)") {}
};

/// Matrix or subspace dimensions do not fit together.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside of its domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A bounded witness search gave up. Distinct from a mathematical "no".
class SearchExhausted : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same predicate disagreed, or a
/// constructed object failed its own post-condition check.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// The requested object exists but has coordinates outside Q(i), for
/// example an eigenvector belonging to an irrational eigenvalue.
class OutOfField : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline void require(bool cond, const std::string& what) {
  if (!cond) throw PreconditionError(what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw InvariantViolation(what);
}

}  // namespace detail
}  // namespace ogl

#endif  // OGL_ERRORS_HPP
