#pragma once

#include <stdexcept>
#include <string>

namespace liekit {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A numerical breakdown: the computation cannot continue at this point.
/// The CLI maps every subclass of this to exit code 3.
class NumericalError : public Error {
public:
  using Error::Error;
};

class NonFiniteEvaluation : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class SingularMatrix : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class NoConvergence : public NumericalError {
public:
  using NumericalError::NumericalError;
};

/// A one-parameter flow left the chart trust region before reaching t_end.
class LeftChart : public NumericalError {
public:
  using NumericalError::NumericalError;
};

/// |psi_r| fell below the quadrature floor on the integration path.
class ZeroPsi : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class NotIntegrable : public Error {
public:
  using Error::Error;
};

class UnknownEntry : public Error {
public:
  using Error::Error;
};

/// Bad sizes, bad config values, mismatched representation sides.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

} // namespace liekit
