#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace poissonkit {

/// A mathematical precondition on the input failed (not Lie, not Poisson,
/// not a fixed point, ...). The message is meant for end users.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed; indicates a bug, not bad input.
class InvariantBreach : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class JacobiViolation : public PreconditionError {
 public:
  JacobiViolation(std::size_t i, std::size_t j, std::size_t k, std::size_t l,
                  std::string residual);

  std::size_t i, j, k, l;
  std::string residual;
};

class NotPoisson : public PreconditionError {
 public:
  explicit NotPoisson(std::string witness_term);
  std::string witness_term;
};

class NotAFixedPoint : public PreconditionError {
 public:
  explicit NotAFixedPoint(std::string witness_component);
  std::string witness_component;
};

class NonHomogeneous : public PreconditionError {
 public:
  NonHomogeneous();
};

class NotACocycle : public PreconditionError {
 public:
  NotACocycle();
};

class NotLinear : public PreconditionError {
 public:
  NotLinear();
};

class IncompatiblePencil : public PreconditionError {
 public:
  explicit IncompatiblePencil(const std::string& why);
};

}  // namespace poissonkit
