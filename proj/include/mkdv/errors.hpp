#pragma once

#include <stdexcept>
#include <string>

namespace mkdv {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical precondition of an operation does not hold for its input.
// The CLI maps this family to exit code 2.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

#define MKDV_DEFINE_ERROR(Name, Base)   \
  class Name : public Base {            \
   public:                              \
    using Base::Base;                   \
  }

MKDV_DEFINE_ERROR(DivisibilityError, PreconditionError);
MKDV_DEFINE_ERROR(FieldError, PreconditionError);
MKDV_DEFINE_ERROR(DomainError, PreconditionError);
MKDV_DEFINE_ERROR(PoleError, PreconditionError);
MKDV_DEFINE_ERROR(CenterGapError, PreconditionError);
MKDV_DEFINE_ERROR(GradeError, PreconditionError);
MKDV_DEFINE_ERROR(SingularityError, PreconditionError);
MKDV_DEFINE_ERROR(NotFertileError, PreconditionError);
MKDV_DEFINE_ERROR(DegreeError, PreconditionError);
MKDV_DEFINE_ERROR(NotGenericError, PreconditionError);
MKDV_DEFINE_ERROR(NotASolutionError, PreconditionError);
MKDV_DEFINE_ERROR(DepthError, PreconditionError);

// An identity that must hold exactly was found to fail. This is never a user
// error: it means either the implementation or the mathematics is wrong.
// The CLI maps it to exit code 3.
MKDV_DEFINE_ERROR(IdentityViolation, Error);

// Malformed serialized input (exit code 1).
MKDV_DEFINE_ERROR(SchemaError, Error);

#undef MKDV_DEFINE_ERROR

}  // namespace mkdv
